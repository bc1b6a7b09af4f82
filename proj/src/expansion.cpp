#include "circdet/expansion.hpp"

#include "circdet/coeff_engine.hpp"
#include "circdet/parallel.hpp"
#include "circdet/symmetry.hpp"

#include <map>
#include <stdexcept>

namespace circdet {

Strategy parse_strategy(const std::string& name) {
    if (name == "direct") return Strategy::Direct;
    if (name == "reduced" || name == "multiplet-reduced") return Strategy::Reduced;
    throw std::invalid_argument("unknown strategy '" + name + "' (expected direct or reduced)");
}

std::string to_string(Strategy s) { return s == Strategy::Direct ? "direct" : "reduced"; }

ExpansionPolynomial expand(int N, Strategy strategy, int jobs, int cap) {
    if (N < 1 || N > cap)
        throw std::invalid_argument("expand: N=" + std::to_string(N) + " outside [1, " + std::to_string(cap) + "]");
    ExpansionPolynomial poly;
    poly.N = N;
    if (strategy == Strategy::Direct) {
        auto keys = condition8_vectors(N);
        BigInt expected = count_solutions_F(N);
        if (BigInt(keys.size()) != expected)
            throw ArithmeticError("expand: found " + std::to_string(keys.size()) + " candidate keys, F(N) = " +
                                  expected.str());
        std::vector<BigInt> values(keys.size());
        parallel_for(keys.size(), jobs, [&](std::size_t i) { values[i] = coefficient(keys[i].to_index_set()); });
        for (std::size_t i = 0; i < keys.size(); ++i) poly.terms.emplace(keys[i], values[i]);
        return poly;
    }
    Classification cls = classify(N, jobs);
    for (const auto& sup : cls.super)
        for (const auto& mem : sup.members) poly.terms.emplace(mem.M, mem.sign * sup.value);
    BigInt expected = count_solutions_F(N);
    if (BigInt(poly.terms.size()) != expected)
        throw ArithmeticError("expand: multiplets cover " + std::to_string(poly.terms.size()) + " keys, F(N) = " +
                              expected.str());
    return poly;
}

BigInt evaluate(const ExpansionPolynomial& poly, const std::vector<BigInt>& x) {
    if (static_cast<int>(x.size()) != poly.N)
        throw std::invalid_argument("evaluate: expected " + std::to_string(poly.N) + " values");
    BigInt total = 0;
    for (const auto& [M, c] : poly.terms) {
        if (c == 0) continue;
        BigInt term = c;
        for (int m = 0; m < poly.N && term != 0; ++m)
            if (M[m]) term *= ipow(x[m], static_cast<unsigned>(M[m]));
        total += term;
    }
    return total;
}

BigInt evaluate(const ExpansionPolynomial& poly, const std::vector<long>& x) {
    std::vector<BigInt> big(x.begin(), x.end());
    return evaluate(poly, big);
}

bool power_identity_check(int N, int d, int jobs) {
    if (d <= 1 || N % d != 0) throw std::invalid_argument("power_identity_check: need d > 1 dividing N");
    const int n = N / d;

    std::map<std::vector<int>, BigInt> restricted;
    for (const auto& [M, c] : expand(N, Strategy::Reduced, jobs).terms) {
        if (c == 0) continue;
        bool spaced = true;
        for (int k = 0; k < N; ++k)
            if (k % d != 0 && M[k] != 0) spaced = false;
        if (spaced) restricted.emplace(M.counts(), c);
    }

    // Small determinant with x_j relabeled to x_{j d}.
    std::map<std::vector<int>, BigInt> base;
    for (const auto& [M, c] : expand(n, Strategy::Reduced, jobs).terms) {
        if (c == 0) continue;
        std::vector<int> e(N, 0);
        for (int j = 0; j < n; ++j) e[j * d] = M[j];
        base.emplace(std::move(e), c);
    }
    std::map<std::vector<int>, BigInt> power{{std::vector<int>(N, 0), BigInt(1)}};
    for (int r = 0; r < d; ++r) {
        std::map<std::vector<int>, BigInt> next;
        for (const auto& [e1, c1] : power)
            for (const auto& [e2, c2] : base) {
                std::vector<int> e(N);
                for (int k = 0; k < N; ++k) e[k] = e1[k] + e2[k];
                next[e] += c1 * c2;
            }
        power = std::move(next);
    }
    std::erase_if(power, [](const auto& kv) { return kv.second == 0; });
    return power == restricted;
}

}  // namespace circdet
