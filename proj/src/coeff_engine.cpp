#include "circdet/coeff_engine.hpp"

#include "circdet/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace circdet {

namespace {

struct Block {
    int X;
    int z;
    BigInt weight;  // C(X + z - 1, z - 1)
};

// Sum over nonempty masks of (-N)^{|mask|} H[M1 - sum X] C(N-M0-1 - sum(X+z), M1 - sum X)
// * prod weight. Blocks must be sorted by ascending X.
class MaskedSum {
public:
    MaskedSum(const std::vector<Block>& blocks, int N, int M0, int M1)
        : blocks_(blocks), N_(N), top_(N - M0 - 1), M1_(M1) {}

    BigInt run() {
        total_ = 0;
        dfs(0, 0, 0, 0, BigInt(1));
        return total_;
    }

private:
    void leaf(long sum_x, long sum_xz, int count, const BigInt& prod) {
        if (count == 0) return;
        BigInt term = binomial(top_ - sum_xz, M1_ - sum_x);
        if (term == 0) return;
        term *= ipow(BigInt(N_), static_cast<unsigned>(count)) * prod;
        if (count & 1)
            total_ -= term;
        else
            total_ += term;
    }

    void dfs(std::size_t i, long sum_x, long sum_xz, int count, const BigInt& prod) {
        if (i == blocks_.size()) {
            leaf(sum_x, sum_xz, count, prod);
            return;
        }
        const Block& b = blocks_[i];
        if (sum_x + b.X > M1_) {
            // X is ascending: no later block can be switched on either.
            leaf(sum_x, sum_xz, count, prod);
            return;
        }
        dfs(i + 1, sum_x, sum_xz, count, prod);
        dfs(i + 1, sum_x + b.X, sum_xz + b.X + b.z, count + 1, prod * b.weight);
    }

    const std::vector<Block>& blocks_;
    int N_;
    long top_;
    long M1_;
    BigInt total_;
};

struct Shape {
    int N;
    std::vector<int> M;
    int M0;
    int M1;
    std::vector<int> high;  // indices >= 2, ascending
};

Shape shape_of(const IndexSet& a) {
    Shape s{a.N(), a.multiplicities(), 0, 0, {}};
    s.M0 = s.M[0];
    s.M1 = s.N > 1 ? s.M[1] : 0;
    for (int v : a.indices())
        if (v >= 2) s.high.push_back(v);
    return s;
}

BigInt high_factorials(const Shape& s) {
    BigInt d = 1;
    for (int m = 2; m < s.N; ++m) d *= factorial(s.M[m]);
    return d;
}

int leading_sign(const Shape& s) { return ((s.N - s.M0 - 1) % 2 == 0) ? 1 : -1; }

// Common tail of both closed forms: sign * N * (lead + sum) / prod_{a>=2} M_a!.
BigInt finish(const Shape& s, const BigInt& partition_sum, const char* what) {
    BigInt lead = exact_div(factorial(s.N - s.M0 - 1), factorial(s.M1), what);
    BigInt num = BigInt(s.N) * (lead + partition_sum);
    BigInt c = exact_div(num, high_factorials(s), what);
    return leading_sign(s) * c;
}

std::vector<Block> sorted_blocks(std::vector<Block> blocks) {
    std::sort(blocks.begin(), blocks.end(),
              [](const Block& x, const Block& y) { return std::tie(x.X, x.z) < std::tie(y.X, y.z); });
    return blocks;
}

}  // namespace

bool satisfies_condition_8(const IndexSet& a) { return delta_mod(a.trace(), a.N()) == 1; }

BigInt coeff_all_equal(const IndexSet& a) {
    if (!a.all_equal()) throw std::invalid_argument("coeff_all_equal: indices are not all equal");
    long e = static_cast<long>(a[0]) * (a.N() - 1);
    return (e % 2 == 0) ? BigInt(1) : BigInt(-1);
}

BigInt coeff_theorem3(const IndexSet& a) {
    if (!satisfies_condition_8(a)) return 0;
    if (a.all_equal()) return coeff_all_equal(a);
    Shape s = shape_of(a);
    if (s.high.empty())
        throw std::logic_error("coeff_theorem3: set of 0s and 1s passed the gate without being constant");
    const int pinned = s.high.back();
    std::vector<int> rest(s.high.begin(), s.high.end() - 1);

    // Number of labelings of the repeated values among the p free positions.
    BigInt labelings = exact_div(high_factorials(s), BigInt(s.M[pinned]), "theorem3 labelings");

    BigInt sum = 0;
    for_each_multiset_partition(rest, [&](const SetPartition& theta) {
        BigInt stabilizer = 1;
        BigInt shape_factor = 1;
        std::vector<Block> blocks;
        for (const Part& part : theta.parts) {
            BigInt inner = 1;
            for (auto [value, m] : part.element_multiplicities()) inner *= factorial(m);
            stabilizer *= factorial(part.copies) * ipow(inner, static_cast<unsigned>(part.copies));
            int X = part_residue(part.elements, s.N);
            for (int c = 0; c < part.copies; ++c) {
                shape_factor *= factorial(part.size() - 1);
                blocks.push_back(Block{X, part.size(), binomial(X + part.size() - 1, part.size() - 1)});
            }
        }
        BigInt masked = MaskedSum(sorted_blocks(std::move(blocks)), s.N, s.M0, s.M1).run();
        if (masked == 0) return;
        BigInt weight = exact_div(labelings, stabilizer, "theorem3 partition weight");
        sum += weight * shape_factor * masked;
    });
    return finish(s, sum, "theorem3");
}

BigInt coeff_eq10d(const IndexSet& a) {
    if (!satisfies_condition_8(a)) return 0;
    if (a.all_equal()) return coeff_all_equal(a);
    Shape s = shape_of(a);
    if (s.high.empty())
        throw std::logic_error("coeff_eq10d: set of 0s and 1s passed the gate without being constant");
    std::vector<int> rest(s.high.begin(), s.high.end() - 1);
    const int p = static_cast<int>(rest.size());

    BigInt sum = 0;
    for_each_labeled_partition(p, [&](const std::vector<std::vector<int>>& blocks_of_positions) {
        if (blocks_of_positions.empty()) return;
        BigInt shape_factor = 1;
        std::vector<Block> blocks;
        for (const auto& positions : blocks_of_positions) {
            long tr = 0;
            for (int pos : positions) tr += rest[pos];
            int X = static_cast<int>(mod(-tr, s.N));
            int z = static_cast<int>(positions.size());
            shape_factor *= factorial(z - 1);
            blocks.push_back(Block{X, z, binomial(X + z - 1, z - 1)});
        }
        sum += shape_factor * MaskedSum(sorted_blocks(std::move(blocks)), s.N, s.M0, s.M1).run();
    });
    return finish(s, sum, "eq10d");
}

namespace {

struct ABShape {
    int a;
    int Ma;
    int Mb;
};

bool ab_shape(const IndexSet& set, ABShape& out) {
    std::vector<std::pair<int, int>> values;  // (value, multiplicity) for values >= 2
    auto M = set.multiplicities();
    for (int v = 2; v < set.N(); ++v)
        if (M[v]) values.emplace_back(v, M[v]);
    if (values.size() == 1) {
        out = {values[0].first, values[0].second, 0};
        return true;
    }
    if (values.size() == 2) {
        auto [v0, m0] = values[0];
        auto [v1, m1] = values[1];
        if (m1 == 1) {
            out = {v0, m0, 1};
            return true;
        }
        if (m0 == 1) {
            out = {v1, m1, 1};
            return true;
        }
    }
    return false;
}

}  // namespace

bool special_ab_applicable(const IndexSet& a) {
    ABShape sh{};
    return !a.all_equal() && ab_shape(a, sh);
}

BigInt coeff_special_ab(const IndexSet& set) {
    ABShape sh{};
    if (set.all_equal() || !ab_shape(set, sh))
        throw std::invalid_argument("coeff_special_ab: index set " + set.str() +
                                    " is not of the form 0..0 1..1 a..a [b]");
    if (!satisfies_condition_8(set)) return 0;
    const int N = set.N();
    const int M0 = set.multiplicity(0);
    const int M1 = N > 1 ? set.multiplicity(1) : 0;
    const int p = N - M0 - M1 - 1;

    std::vector<int> X(p + 1, 0);
    std::vector<BigInt> w(p + 1);
    for (int t = 1; t <= p; ++t) {
        X[t] = static_cast<int>(mod(-static_cast<long>(t) * sh.a, N));
        w[t] = binomial(X[t] + t - 1, t - 1);
    }

    // Every beta term carries p!/prod(t^beta_t beta_t!), an integer; the whole
    // brace is therefore scaled by p! to stay in integers.
    const BigInt pfact = factorial(p);
    BigInt sum = binomial(N - M0 - 1, M1) * pfact;
    std::vector<int> beta(p + 1, 0);
    // beta_t only matters while sum t*beta_t <= p; beyond that the binomial vanishes.
    auto rec = [&](auto&& self, int t, int weighted, long sum_x, long sum_xt, int mu, BigInt prod,
                   BigInt denom) -> void {
        if (t > p) {
            if (mu == 0 || sum_x > M1) return;
            BigInt term = binomial(N - M0 - 1 - sum_xt, M1 - sum_x);
            if (term == 0) return;
            term *= ipow(BigInt(N), static_cast<unsigned>(mu)) * prod *
                    exact_div(pfact, denom, "special_ab beta weight");
            if (mu & 1)
                sum -= term;
            else
                sum += term;
            return;
        }
        for (int b = 0; weighted + b * t <= p; ++b) {
            if (sum_x + static_cast<long>(b) * X[t] > M1) break;
            BigInt d = denom * ipow(BigInt(t), static_cast<unsigned>(b)) * factorial(b);
            self(self, t + 1, weighted + b * t, sum_x + static_cast<long>(b) * X[t],
                 sum_xt + static_cast<long>(b) * (X[t] + t), mu + b, prod * ipow(w[t], static_cast<unsigned>(b)), d);
        }
    };
    rec(rec, 1, 0, 0, 0, 0, BigInt(1), BigInt(1));

    BigInt num = BigInt(N) * sum;
    BigInt c = exact_div(num, factorial(sh.Ma) * factorial(sh.Mb), "special_ab");
    return ((N - M0 - 1) % 2 == 0) ? c : BigInt(-c);
}

bool corollary6_direct(const IndexSet& a) {
    const int N = a.N();
    if (N < 5) return false;
    const int M0 = a.multiplicity(0);
    const int M1 = a.multiplicity(1);
    if (M0 < 1 || M1 < 1 || M0 + M1 + 3 != N) return false;
    const int A1 = a[N - 3], A2 = a[N - 2], A3 = a[N - 1];
    if (A1 < 2) return false;
    const long r1 = static_cast<long>(M1 + 2) * (M1 + 1);
    if (r1 % N != 0) return false;
    const long q1 = r1 / N;
    const long q0 = static_cast<long>(M0 + 2) * (M0 + 1) / N;
    bool branch1 = A2 < N - M1 && A1 + A2 == N + 1 - q1 && A3 == M0 + 2 + q1;
    bool branch2 = N - M1 <= A2 && A2 + A3 == N + 1 + q0 && A1 == M0 + 2 - q0;
    return branch1 || branch2;
}

bool zero_by_corollary6(const IndexSet& a) {
    const int N = a.N();
    for (int b = 1; b < N; ++b) {
        if (gcd(b, N) != 1) continue;
        IndexSet scaled = scale_indices(a, b);
        for (int s = 0; s < N; ++s)
            if (corollary6_direct(shift_indices(scaled, s))) return true;
    }
    return false;
}

std::vector<IndexSet> corollary6_family(int N) {
    std::vector<IndexSet> found;
    for (int M1 = 1; M1 + 4 <= N; ++M1) {
        const int M0 = N - 3 - M1;
        for (int A1 = 2; A1 < N; ++A1)
            for (int A2 = A1; A2 < N; ++A2)
                for (int A3 = A2; A3 < N; ++A3) {
                    std::vector<int> idx(M0, 0);
                    idx.insert(idx.end(), M1, 1);
                    idx.insert(idx.end(), {A1, A2, A3});
                    IndexSet base(N, std::move(idx));
                    if (!corollary6_direct(base)) continue;
                    for (int b = 1; b < N; ++b) {
                        if (gcd(b, N) != 1) continue;
                        IndexSet scaled = scale_indices(base, b);
                        for (int s = 0; s < N; ++s) found.push_back(shift_indices(scaled, s));
                    }
                }
    }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
}

int divisibility_bound(const IndexSet& a) {
    int d = 0;
    for (int m : a.multiplicities()) d = std::gcd(d, m);
    return a.N() / d;
}

IndexSet shift_indices(const IndexSet& a, int n) {
    std::vector<int> idx;
    idx.reserve(a.N());
    for (int v : a.indices()) idx.push_back(static_cast<int>(mod(v + n, a.N())));
    return IndexSet(a.N(), std::move(idx));
}

IndexSet scale_indices(const IndexSet& a, int n) {
    if (gcd(mod(n, a.N()), a.N()) != 1)
        throw std::invalid_argument("scale_indices: multiplier not coprime to N");
    std::vector<int> idx;
    idx.reserve(a.N());
    for (int v : a.indices()) idx.push_back(static_cast<int>(mod(static_cast<long>(v) * n, a.N())));
    return IndexSet(a.N(), std::move(idx));
}

IndexSet psi(const IndexSet& a) { return shift_indices(scale_indices(a, a.N() - 1), 1); }

int shift_sign(int N, int n) {
    long e = mod(n, N) * static_cast<long>(N - 1);
    return (e % 2 == 0) ? 1 : -1;
}

Reduction reduce_representative(const IndexSet& a) {
    const int N = a.N();
    auto score = [](const IndexSet& s) {
        int M0 = s.multiplicity(0);
        int M1 = s.N() > 1 ? s.multiplicity(1) : 0;
        return std::make_tuple(s.N() - M0 - M1 - 1, M1);
    };
    Reduction best{a, 1};
    auto best_score = score(a);
    for (int b = 1; b < N; ++b) {
        if (gcd(b, N) != 1) continue;
        IndexSet scaled = scale_indices(a, b);
        for (int s = 0; s < N; ++s) {
            IndexSet img = shift_indices(scaled, s);
            auto sc = score(img);
            if (sc < best_score || (sc == best_score && img < best.representative)) {
                best = Reduction{img, shift_sign(N, s)};
                best_score = sc;
            }
        }
    }
    return best;
}

std::string to_string(CoeffPath path) {
    switch (path) {
        case CoeffPath::ConditionGate: return "condition-gate";
        case CoeffPath::AllEqual: return "all-equal";
        case CoeffPath::ZeroCriterion: return "zero-criterion";
        case CoeffPath::SpecialAB: return "special-ab";
        case CoeffPath::Theorem3: return "theorem3";
    }
    return "unknown";
}

CoeffResult coefficient_detailed(const IndexSet& a, const CoeffOptions& opts) {
    if (!satisfies_condition_8(a)) return {0, CoeffPath::ConditionGate, a, 1};
    if (a.all_equal()) return {coeff_all_equal(a), CoeffPath::AllEqual, a, 1};
    if (opts.zero_short_circuit && zero_by_corollary6(a)) return {0, CoeffPath::ZeroCriterion, a, 1};
    Reduction r = opts.reduce ? reduce_representative(a) : Reduction{a, 1};
    if (special_ab_applicable(r.representative))
        return {r.sign * coeff_special_ab(r.representative), CoeffPath::SpecialAB, r.representative, r.sign};
    return {r.sign * coeff_theorem3(r.representative), CoeffPath::Theorem3, r.representative, r.sign};
}

BigInt coefficient(const IndexSet& a, const CoeffOptions& opts) { return coefficient_detailed(a, opts).value; }

}  // namespace circdet
