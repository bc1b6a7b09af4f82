#include "circdet/oracles.hpp"

#include "circdet/partitions.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace circdet {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::complex<double> root_of_unity(int N, long k) {
    double angle = 2.0 * kPi * static_cast<double>(mod(k, N)) / N;
    return {std::cos(angle), std::sin(angle)};
}

}  // namespace

BigInt KModCounts::total() const {
    BigInt s = 0;
    for (const auto& v : A) s += v;
    return s;
}

KModCounts kmod_counts(const IndexSet& a) {
    const int N = a.N();
    std::vector<long long> counts(N, 0);
    std::vector<int> sigma = a.indices();  // sorted: first permutation in lexicographic order
    do {
        long w = 0;
        for (int q = 1; q < N; ++q) w += static_cast<long>(q) * sigma[q];
        ++counts[mod(w, N)];
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    KModCounts out{N, {}};
    for (long long c : counts) out.A.emplace_back(c);
    return out;
}

BigInt coeff_via_theorem2(const IndexSet& a) {
    const int N = a.N();
    KModCounts k = kmod_counts(a);
    BigInt c = 0;
    for (long d : divisors(N)) c += mobius(N / d) * k.A[d % N];
    return c;
}

ExpansionPolynomial leibniz_expansion(int N, int jobs, int cap) {
    if (N < 1) throw std::invalid_argument("leibniz_expansion: N must be positive");
    if (N > cap)
        throw std::invalid_argument("leibniz_expansion: N=" + std::to_string(N) + " exceeds cap " +
                                    std::to_string(cap));
    // Monomials are packed 4 bits per exponent (N <= 15).
    auto worker = [N](int first_lo, int first_hi) {
        std::unordered_map<std::uint64_t, long long> acc;
        for (int first = first_lo; first < first_hi; ++first) {
            std::vector<int> pi(N);
            pi[0] = first;
            for (int i = 0, v = 0; v < N; ++v)
                if (v != first) pi[1 + i++] = v;
            do {
                int inversions = 0;
                for (int i = 0; i < N; ++i)
                    for (int j = i + 1; j < N; ++j)
                        if (pi[i] > pi[j]) ++inversions;
                std::uint64_t key = 0;
                for (int r = 0; r < N; ++r) key += std::uint64_t{1} << (4 * mod(r - pi[r], N));
                acc[key] += (inversions & 1) ? -1 : 1;
            } while (std::next_permutation(pi.begin() + 1, pi.end()));
        }
        return acc;
    };
    jobs = std::clamp(jobs, 1, N);
    std::vector<std::unordered_map<std::uint64_t, long long>> parts(jobs);
    std::vector<std::thread> threads;
    for (int t = 0; t < jobs; ++t) {
        int lo = N * t / jobs, hi = N * (t + 1) / jobs;
        threads.emplace_back([&, t, lo, hi] { parts[t] = worker(lo, hi); });
    }
    for (auto& th : threads) th.join();

    std::unordered_map<std::uint64_t, long long> merged;
    for (const auto& part : parts)
        for (const auto& [key, c] : part) merged[key] += c;
    ExpansionPolynomial poly;
    poly.N = N;
    for (const auto& [key, c] : merged) {
        if (c == 0) continue;
        std::vector<int> M(N);
        for (int m = 0; m < N; ++m) M[m] = static_cast<int>((key >> (4 * m)) & 0xF);
        poly.terms.emplace(MultiplicityVector(M), BigInt(c));
    }
    return poly;
}

std::complex<double> eigenvalue_det(const std::vector<std::complex<double>>& x) {
    const int N = static_cast<int>(x.size());
    if (N < 1) throw std::invalid_argument("eigenvalue_det: empty vector");
    std::complex<double> det = 1.0;
    for (int p = 0; p < N; ++p) {
        std::complex<double> eig = 0.0;
        for (int m = 0; m < N; ++m) eig += root_of_unity(N, static_cast<long>(p) * m) * x[m];
        det *= eig;
    }
    return det;
}

BigInt q_partition_function(const QQuery& query, int N) {
    if (query.b < 1 || query.b >= N) throw std::invalid_argument("Q: part ceiling must lie in [1, N-1]");
    std::vector<int> allowed;
    for (int v = 1; v <= query.b; ++v)
        if (std::find(query.excluded.begin(), query.excluded.end(), v) == query.excluded.end())
            allowed.push_back(v);
    const long target = mod(query.n, N);
    long long count = 0;
    std::function<void(std::size_t, int, long)> rec = [&](std::size_t from, int left, long sum) {
        if (left == 0) {
            if (mod(sum, N) == target) ++count;
            return;
        }
        for (std::size_t i = from; i + left <= allowed.size(); ++i) rec(i + 1, left - 1, sum + allowed[i]);
    };
    if (query.X >= 0) rec(0, query.X, 0);
    return count;
}

KModCounts kmod_via_q(const IndexSet& a) {
    const int N = a.N();
    auto M = a.multiplicities();
    std::vector<int> high;
    for (int v : a.indices())
        if (v >= 2) high.push_back(v);
    if (high.empty())
        throw std::invalid_argument("kmod_via_q: needs at least one index >= 2 to pin at position 0");
    // The factor N below counts cyclic shifts of positions, which keep k fixed
    // only when the index sum vanishes mod N.
    if (a.trace() % N != 0) throw std::invalid_argument("kmod_via_q: index sum must vanish mod N");
    const int M1 = N > 1 ? M[1] : 0;
    std::vector<int> free_values(high.begin(), high.end() - 1);
    const int p = static_cast<int>(free_values.size());

    // Histogram over residues of Q(n; M1, N-1 | excluded), keyed by excluded set.
    std::unordered_map<std::uint32_t, std::vector<long long>> hist_cache;
    auto histogram = [&](std::uint32_t mask) -> const std::vector<long long>& {
        auto it = hist_cache.find(mask);
        if (it != hist_cache.end()) return it->second;
        QQuery q{0, M1, N - 1, {}};
        for (int v = 1; v < N; ++v)
            if (mask & (1u << v)) q.excluded.push_back(v);
        std::vector<long long> h(N);
        for (int n = 0; n < N; ++n) {
            q.n = n;
            h[n] = static_cast<long long>(q_partition_function(q, N));
        }
        return hist_cache.emplace(mask, std::move(h)).first->second;
    };

    std::vector<long long> raw(N, 0);
    std::function<void(int, std::uint32_t, long)> place = [&](int i, std::uint32_t used, long s) {
        if (i == p) {
            const auto& h = histogram(used);
            for (int r = 0; r < N; ++r) raw[mod(s + r, N)] += h[r];
            return;
        }
        for (int q = 1; q < N; ++q) {
            if (used & (1u << q)) continue;
            place(i + 1, used | (1u << q), s + static_cast<long>(free_values[i]) * q);
        }
    };
    place(0, 0, 0);

    BigInt denom = 1;
    for (int m = 2; m < N; ++m) denom *= factorial(M[m]);
    KModCounts out{N, {}};
    for (int k = 0; k < N; ++k) out.A.push_back(exact_div(BigInt(N) * raw[k], denom, "kmod_via_q"));
    return out;
}

bool lemma1_check(int N, const std::vector<int>& q, int M1) {
    const int p = static_cast<int>(q.size());
    if (p > N - 1) return false;
    std::vector<int> sorted = q;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] < 1 || sorted[i] >= N || (i && sorted[i] == sorted[i - 1]))
            throw std::invalid_argument("lemma1_check: q values must be distinct in [1, N-1]");
    const double tol = 1e-9;
    const int deg = N - 1 - p;

    // Left side: the alternating geometric series divided by each (1 + w^q y).
    std::vector<std::complex<double>> lhs(N);
    for (int m = 0; m < N; ++m) lhs[m] = (m % 2) ? -1.0 : 1.0;
    for (int qs : q) {
        std::complex<double> w = root_of_unity(N, qs);
        std::vector<std::complex<double>> quotient(lhs.size() - 1);
        std::complex<double> carry = 0.0;
        for (std::size_t i = 0; i + 1 < lhs.size(); ++i) {
            quotient[i] = lhs[i] - w * carry;
            carry = quotient[i];
        }
        std::complex<double> remainder = lhs.back() - w * carry;
        if (std::abs(remainder) > tol) return false;
        lhs = std::move(quotient);
    }

    // Right side: (-1)^m times the sum over kappa in [0,m]^p with |kappa| <= m.
    std::vector<std::complex<double>> rhs(deg + 1, 0.0);
    for (int m = 0; m <= deg; ++m) {
        std::complex<double> s = 0.0;
        std::function<void(int, int, long)> rec = [&](int i, int left, long expo) {
            if (i == p) {
                s += root_of_unity(N, expo);
                return;
            }
            for (int k = 0; k <= left; ++k) rec(i + 1, left - k, expo + static_cast<long>(k) * q[i]);
        };
        rec(0, m, 0);
        rhs[m] = (m % 2) ? -s : s;
    }

    const int compare_to = std::min(M1, deg);
    for (int m = 0; m <= compare_to; ++m)
        if (std::abs(lhs[m] - rhs[m]) > tol) return false;

    // Sample points inside the unit disk, away from the poles at |y| = 1.
    for (int t = 0; t < 64; ++t) {
        std::complex<double> y = 0.6 * std::polar(1.0, 2.0 * kPi * (t + 0.5) / 64.0);
        std::complex<double> left = 0.0, pw = 1.0;
        for (int m = 0; m < N; ++m) {
            left += pw;
            pw *= -y;
        }
        for (int qs : q) left /= (1.0 + y * root_of_unity(N, qs));
        std::complex<double> right = 0.0;
        pw = 1.0;
        for (int m = 0; m <= deg; ++m) {
            right += rhs[m] * pw;
            pw *= y;
        }
        if (std::abs(left - right) > tol * std::max(1.0, std::abs(left))) return false;
    }
    return true;
}

bool lemma2_check(int p, int M, int trials, std::uint64_t seed) {
    if (p < 1 || M < 1) throw std::invalid_argument("lemma2_check: p and M must be positive");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(-9, 9);
    auto partitions = integer_partitions(p);
    for (int trial = 0; trial < trials; ++trial) {
        std::map<std::vector<int>, long long> table;  // symmetric h, keyed by sorted argument
        auto h = [&](std::vector<int> args) {
            std::sort(args.begin(), args.end());
            auto it = table.find(args);
            if (it == table.end()) it = table.emplace(args, trial == 0 ? 1 : dist(rng)).first;
            return it->second;
        };
        // Fill the table in a fixed order so the function depends only on the seed.
        std::function<void(int, int, std::vector<int>&)> fill = [&](int from, int left, std::vector<int>& cur) {
            if (left == 0) {
                h(cur);
                return;
            }
            for (int v = from; v <= M; ++v) {
                cur.push_back(v);
                fill(v, left - 1, cur);
                cur.pop_back();
            }
        };
        std::vector<int> cur;
        fill(1, p, cur);

        BigInt lhs = 0;
        std::function<void(int, int, std::vector<int>&)> strict = [&](int from, int left, std::vector<int>& c) {
            if (left == 0) {
                lhs += h(c);
                return;
            }
            for (int v = from; v <= M; ++v) {
                c.push_back(v);
                strict(v + 1, left - 1, c);
                c.pop_back();
            }
        };
        strict(1, p, cur);

        BigInt rhs = 0;
        for (const auto& Z : partitions) {
            const int j = static_cast<int>(Z.parts.size());
            BigInt inner = 0;
            std::vector<int> q(j, 1);
            while (true) {
                std::vector<int> args;
                for (int s = 0; s < j; ++s) args.insert(args.end(), Z.parts[s], q[s]);
                inner += h(args);
                int s = 0;
                while (s < j && q[s] == M) q[s++] = 1;
                if (s == j) break;
                ++q[s];
            }
            BigInt term = multinomial_star(p, Z.multiplicities) * inner;
            rhs += ((p + j) % 2) ? BigInt(-term) : term;
        }
        if (lhs * factorial(p) != rhs) return false;
    }
    return true;
}

bool lemma3_check(int p) {
    auto partitions = integer_partitions(p);
    std::vector<int> beta(p + 1, 0);
    bool ok = true;
    std::function<void(int, int)> rec = [&](int t, int weighted) {
        if (!ok) return;
        if (t > p) {
            BigInt lhs = 0;
            for (const auto& Z : partitions) {
                BigInt term = multinomial_star(p, Z.multiplicities);
                for (int s = 1; s <= p; ++s) term *= binomial(Z.multiplicities[s - 1], beta[s]);
                lhs += term;
            }
            BigInt den = 1;
            for (int s = 1; s <= p; ++s) den *= ipow(BigInt(s), beta[s]) * factorial(beta[s]);
            ok = Rational(lhs) == Rational(factorial(p), den);
            return;
        }
        for (int b = 0; weighted + b * t <= p; ++b) {
            beta[t] = b;
            rec(t + 1, weighted + b * t);
        }
        beta[t] = 0;
    };
    rec(1, 0);
    return ok;
}

bool lemma6_check(int m, int X) {
    BigInt lhs = 0;
    for (int k = 0; k <= X; ++k) {
        BigInt term = binomial(k, m - 1) * binomial(X - k, m);
        lhs += (k % 2) ? BigInt(-term) : term;
    }
    BigInt rhs = binomial((X + 1) / 2, m);
    if ((m - 1) % 2) rhs = -rhs;
    return lhs == rhs;
}

bool pascal_sum_check(int n_max) {
    for (int n = 0; n <= n_max; ++n)
        for (int k = 0; k <= n; ++k)
            for (int l = 0; l <= k; ++l) {
                BigInt s = 0;
                for (int m = 0; m <= n; ++m) s += binomial(m, l) * binomial(n - m, k - l);
                if (s != binomial(n + 1, k + 1)) return false;
            }
    return true;
}

bool mobius_phi_check(int m_max) {
    for (long m = 1; m <= m_max; ++m) {
        long s = 0;
        for (long d : divisors(m)) s += (m / d) * mobius(m / d) * euler_phi(d);
        if (s != mobius(m)) return false;
    }
    return true;
}

bool phi_product_check(int m_max) {
    for (long m = 1; m <= m_max; ++m) {
        Rational s = 0;
        for (long d : divisors(m)) s += Rational(mobius(d), d);
        if (s * m != Rational(euler_phi(m))) return false;
    }
    return true;
}

bool q_generating_check(int N) {
    for (int X = 0; X < N; ++X) {
        std::complex<double> s = 0.0;
        for (int n = 0; n < N; ++n)
            s += static_cast<double>(q_partition_function(QQuery{n, X, N - 1, {}}, N)) * root_of_unity(N, n);
        if (std::abs(s - std::complex<double>((X % 2) ? -1.0 : 1.0, 0.0)) > 1e-9) return false;
    }
    return true;
}

}  // namespace circdet
