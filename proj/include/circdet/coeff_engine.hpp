#pragma once

#include "circdet/exactmath.hpp"
#include "circdet/index_set.hpp"

#include <string>
#include <vector>

namespace circdet {

// Sum of indices vanishes mod N; necessary for a nonzero coefficient.
bool satisfies_condition_8(const IndexSet& a);

// C_{a...a} = (-1)^{a(N-1)}.
BigInt coeff_all_equal(const IndexSet& a);

// Main closed form: sum over multiset partitions of the indices >= 2 (all but
// the largest), weighted by a masked sum over the parts.
BigInt coeff_theorem3(const IndexSet& a);

// Same value, summing over partitions of the labeled positions instead.
BigInt coeff_eq10d(const IndexSet& a);

// Shape 0^M0 1^M1 a^Ma b^Mb with Mb <= 1 and a, b >= 2.
bool special_ab_applicable(const IndexSet& a);
BigInt coeff_special_ab(const IndexSet& a);

// Direct match of one of the two zero branches for shape 0^M0 1^M1 A1 A2 A3.
bool corollary6_direct(const IndexSet& a);
// Direct match, or the image of a direct match under some shift/multiplier.
bool zero_by_corollary6(const IndexSet& a);
// All sets of the family above for dimension N, sorted.
std::vector<IndexSet> corollary6_family(int N);

// N / gcd(M_0, ..., M_{N-1}); the coefficient is divisible by it.
int divisibility_bound(const IndexSet& a);

// Image of the indices under x -> x + n and x -> n * x (n coprime to N).
IndexSet shift_indices(const IndexSet& a, int n);
IndexSet scale_indices(const IndexSet& a, int n);
// Multiply by N-1, then add 1. Swaps the roles of M0 and M1.
IndexSet psi(const IndexSet& a);
// Sign relating C(a) to C(shift_indices(a, n)).
int shift_sign(int N, int n);

struct Reduction {
    IndexSet representative;
    int sign;  // C(original) = sign * C(representative)
};
Reduction reduce_representative(const IndexSet& a);

enum class CoeffPath { ConditionGate, AllEqual, ZeroCriterion, SpecialAB, Theorem3 };
std::string to_string(CoeffPath path);

struct CoeffOptions {
    bool zero_short_circuit = false;
    bool reduce = true;
};

struct CoeffResult {
    BigInt value;
    CoeffPath path;
    IndexSet evaluated;  // the representative actually fed to the formula
    int sign;            // value = sign * C(evaluated)
};

CoeffResult coefficient_detailed(const IndexSet& a, const CoeffOptions& opts = {});
BigInt coefficient(const IndexSet& a, const CoeffOptions& opts = {});

}  // namespace circdet
