#include "circdet/symmetry.hpp"

#include "circdet/coeff_engine.hpp"
#include "circdet/parallel.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <stdexcept>

namespace circdet {

GroupElement::GroupElement(int N_, int shift_, int multiplier_)
    : N(N_), shift(static_cast<int>(mod(shift_, N_))), multiplier(static_cast<int>(mod(multiplier_, N_))) {
    if (N < 1) throw std::invalid_argument("group element: N must be positive");
    if (N == 1) multiplier = 1;
    if (gcd(multiplier, N) != 1)
        throw std::invalid_argument("group element: multiplier " + std::to_string(multiplier_) +
                                    " not coprime to N=" + std::to_string(N));
}

GroupElement GroupElement::compose(const GroupElement& other) const {
    if (other.N != N) throw std::invalid_argument("group element: dimension mismatch");
    return {N, shift + other.shift, static_cast<int>(mod(static_cast<long>(multiplier) * other.multiplier, N))};
}

int GroupElement::sign() const { return shift_sign(N, shift); }

std::vector<GroupElement> group_elements(int N) {
    std::vector<GroupElement> out;
    for (int b = 1; b <= std::max(1, N - 1); ++b) {
        if (N > 1 && gcd(b, N) != 1) continue;
        for (int a = 0; a < N; ++a) out.emplace_back(N, a, b);
    }
    return out;
}

MultiplicityVector act(const GroupElement& g, const MultiplicityVector& M) {
    const int N = M.N();
    if (g.N != N) throw std::invalid_argument("act: dimension mismatch");
    std::vector<int> out(N, 0);
    for (int k = 0; k < N; ++k) out[mod(static_cast<long>(g.multiplier) * k + g.shift, N)] = M[k];
    return MultiplicityVector(std::move(out));
}

namespace {

constexpr int kMaxEnumN = 16;
using Counts = std::array<int, kMaxEnumN>;

// Visits every composition of N into N parts whose weighted sum vanishes mod N,
// in lexicographic order.
void for_each_condition8(int N, const std::function<void(const Counts&)>& visit) {
    if (N < 1 || N > kMaxEnumN) throw std::invalid_argument("condition-8 enumeration: N out of range");
    Counts M{};
    std::function<void(int, int, long)> rec = [&](int pos, int left, long weighted) {
        if (pos == N - 1) {
            M[pos] = left;
            if (mod(weighted + static_cast<long>(pos) * left, N) == 0) visit(M);
            return;
        }
        for (int c = 0; c <= left; ++c) {
            M[pos] = c;
            rec(pos + 1, left - c, weighted + static_cast<long>(pos) * c);
        }
    };
    rec(0, N, 0);
}

// True when no image of M under the given elements is lexicographically smaller.
bool is_canonical(int N, const Counts& M, const std::vector<GroupElement>& elems) {
    Counts img{};
    for (const auto& g : elems) {
        for (int k = 0; k < N; ++k) img[mod(static_cast<long>(g.multiplier) * k + g.shift, N)] = M[k];
        for (int k = 0; k < N; ++k) {
            if (img[k] < M[k]) return false;
            if (img[k] > M[k]) break;
        }
    }
    return true;
}

MultipletRecord orbit_record(const MultiplicityVector& M, const std::vector<GroupElement>& elems,
                             MultipletKind kind, bool with_value) {
    MultiplicityVector rep = M;
    for (const auto& g : elems) rep = std::min(rep, act(g, M));

    std::map<MultiplicityVector, int> signs;
    bool conflict = false;
    std::vector<MultiplicityVector> conflicting;
    for (const auto& g : elems) {
        MultiplicityVector img = act(g, rep);
        auto [it, inserted] = signs.emplace(img, g.sign());
        if (!inserted && it->second != g.sign()) {
            conflict = true;
            conflicting.push_back(img);
        }
    }
    MultipletRecord rec{kind, rep, static_cast<int>(signs.size()), {}, 0, conflict};
    if (with_value) rec.value = coefficient(rep.to_index_set());
    if (conflict) {
        if (with_value && rec.value != 0)
            throw ArithmeticError("multiplet of " + rep.str() +
                                  " has a sign-inconsistent member but nonzero value");
        for (const auto& c : conflicting) signs[c] = 1;
    }
    for (const auto& [vec, s] : signs) rec.members.push_back({vec, s});
    return rec;
}

std::vector<GroupElement> shifts_only(int N) {
    std::vector<GroupElement> out;
    for (int a = 0; a < N; ++a) out.emplace_back(N, a, 1);
    return out;
}

}  // namespace

std::vector<MultiplicityVector> condition8_vectors(int N) {
    std::vector<MultiplicityVector> out;
    for_each_condition8(N, [&](const Counts& M) { out.emplace_back(std::vector<int>(M.begin(), M.begin() + N)); });
    return out;
}

MultipletRecord additive_multiplet(const MultiplicityVector& M, bool with_value) {
    if (!M.weighted_sum_vanishes())
        throw std::invalid_argument("additive_multiplet: weighted sum of " + M.str() + " is not 0 mod N");
    return orbit_record(M, shifts_only(M.N()), MultipletKind::Additive, with_value);
}

MultipletRecord super_multiplet(const MultiplicityVector& M, bool with_value) {
    if (!M.weighted_sum_vanishes())
        throw std::invalid_argument("super_multiplet: weighted sum of " + M.str() + " is not 0 mod N");
    return orbit_record(M, group_elements(M.N()), MultipletKind::Super, with_value);
}

Classification classify(int N, int jobs) {
    if (N < 1) throw std::invalid_argument("classify: N must be positive");
    Classification out{N, {}, {}};
    std::map<MultiplicityVector, bool> seen;
    for (const auto& M : condition8_vectors(N)) {
        if (seen.count(M)) continue;
        out.super.push_back(super_multiplet(M, false));
        for (const auto& mem : out.super.back().members) seen[mem.M] = true;
    }
    parallel_for(out.super.size(), jobs, [&](std::size_t i) {
        auto& rec = out.super[i];
        rec.value = coefficient(rec.representative.to_index_set());
        if (rec.self_negating && rec.value != 0)
            throw ArithmeticError("multiplet of " + rec.representative.str() +
                                  " has a sign-inconsistent member but nonzero value");
    });
    seen.clear();
    for (const auto& sup : out.super) {
        for (const auto& mem : sup.members) {
            if (seen.count(mem.M)) continue;
            MultipletRecord add = additive_multiplet(mem.M, false);
            int rep_sign = 1;
            for (const auto& m2 : sup.members)
                if (m2.M == add.representative) rep_sign = m2.sign;
            add.value = rep_sign * sup.value;
            if (add.self_negating && add.value != 0)
                throw ArithmeticError("additive multiplet of " + add.representative.str() +
                                      " is self-negating but has nonzero value");
            for (const auto& m2 : add.members) seen[m2.M] = true;
            out.additive.push_back(std::move(add));
        }
    }
    std::sort(out.additive.begin(), out.additive.end(),
              [](const MultipletRecord& a, const MultipletRecord& b) { return a.representative < b.representative; });
    return out;
}

BigInt count_solutions_F(int N) {
    if (N < 1) throw std::invalid_argument("F: N must be positive");
    BigInt s = 0;
    for (long d : divisors(N)) s += euler_phi(N / d) * binomial(2 * d, d);
    return exact_div(s, BigInt(2 * N), "F(N)");
}

BigInt additive_multiplet_count_g(int N, int n) {
    if (N < 1 || n < 1) throw std::invalid_argument("g: N and n must be positive");
    if (N % n != 0 || (N - n) % 2 != 0) return 0;
    BigInt s = 0;
    for (long d : divisors(n)) {
        BigInt term = mobius(n / d) * binomial(2 * d, d);
        s += ((n + d) % 2) ? BigInt(-term) : term;
    }
    Rational g = Rational(2 * s, BigInt(4) * n * n);
    return to_integer(g, "g_N(n)");
}

bool is_odd_prime(int n) {
    if (n < 3 || n % 2 == 0) return false;
    for (int q = 3; q * q <= n; q += 2)
        if (n % q == 0) return false;
    return true;
}

BigInt supermultiplet_count(int N) {
    if (is_odd_prime(N)) {
        const long p = N;
        Rational brace = Rational(binomial(2 * p, p), 2 * p) + Rational(p * p - 1, p);
        BigInt s = 0;
        for (long m : divisors(p - 1))
            if (m < p - 1) s += euler_phi((p - 1) / m) * binomial(2 * m, m);
        brace += p * Rational(s);
        return to_integer(brace / (p * (p - 1)), "super-multiplet count (N = p)");
    }
    if (N % 2 == 0 && is_odd_prime(N / 2)) {
        const long p = N / 2;
        Rational brace = Rational(binomial(4 * p, 2 * p), 4 * p) +
                         Rational(4 * p * p + 1, 4 * p) * Rational(binomial(2 * p, p)) + Rational(2 * (p * p - 1), p);
        Rational s = 0;
        for (long m : divisors(p - 1)) {
            if (2 * m >= p - 1) continue;
            long d = (p - 1) / m;
            Rational odd = (d % 2) ? Rational(1, 2) : Rational(0);  // (1 - (-1)^d) / 4
            Rational coeff = Rational(p + 4 * m + 1, 2 * m + 1) - odd;
            s += euler_phi(d) * (coeff * Rational(binomial(4 * m, 2 * m)) + odd * Rational(binomial(2 * m, m)));
        }
        brace += p * s;
        return to_integer(brace / (2 * p * (p - 1)), "super-multiplet count (N = 2p)");
    }
    throw std::invalid_argument("supermultiplet_count: closed form only for N = p or 2p with p an odd prime");
}

BigInt invariant_count_K(const GroupElement& g) {
    const int N = g.N;
    long long count = 0;
    for_each_condition8(N, [&](const Counts& M) {
        for (int k = 0; k < N; ++k)
            if (M[mod(static_cast<long>(g.multiplier) * k + g.shift, N)] != M[k]) return;
        ++count;
    });
    return count;
}

int multiplicative_order(int b, int N) {
    if (gcd(b, N) != 1) throw std::invalid_argument("multiplicative_order: not a unit");
    int order = 1;
    long x = mod(b, N);
    while (x != mod(1, N)) {
        x = (x * b) % N;
        ++order;
    }
    return order;
}

BigInt k_closed_form_prime(int p, int d) {
    if (!is_odd_prime(p) || d <= 1 || (p - 1) % d != 0)
        throw std::invalid_argument("k_closed_form_prime: need odd prime p and d > 1 dividing p-1");
    int m = (p - 1) / d;
    return binomial(2 * m, m);
}

BigInt k_closed_form_twice_prime(int p, int d) {
    if (!is_odd_prime(p) || d <= 1 || (p - 1) % d != 0)
        throw std::invalid_argument("k_closed_form_twice_prime: need odd prime p and d > 1 dividing p-1");
    const long m = (p - 1) / d;
    if (d == 2) return binomial(2 * p, p);
    if (d % 2 == 0) return 2 * p * binomial(4 * m, 2 * m) - (p - 1) * binomial(4 * m + 1, 2 * m + 1);
    Rational k = Rational(4 * p - 1, 2) * Rational(binomial(4 * m, 2 * m)) -
                 Rational((p - 1) * binomial(4 * m + 1, 2 * m + 1)) + Rational(binomial(2 * m, m), 2);
    return to_integer(k, "K closed form (N = 2p, d odd)");
}

long long enumerate_condition8_count(int N) {
    long long n = 0;
    for_each_condition8(N, [&](const Counts&) { ++n; });
    return n;
}

long long enumerate_orbit_count(int N, bool additive_only) {
    const auto elems = additive_only ? shifts_only(N) : group_elements(N);
    long long n = 0;
    for_each_condition8(N, [&](const Counts& M) {
        if (is_canonical(N, M, elems)) ++n;
    });
    return n;
}

}  // namespace circdet
