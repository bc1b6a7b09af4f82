#pragma once

#include "circdet/exactmath.hpp"
#include "circdet/index_set.hpp"
#include "circdet/polynomial.hpp"

#include <complex>
#include <cstdint>
#include <vector>

namespace circdet {

// A[k] = number of distinct rearrangements sigma of the indices with
// sum_q q * sigma_q = k (mod N).
struct KModCounts {
    int N = 0;
    std::vector<BigInt> A;

    BigInt total() const;
    friend bool operator==(const KModCounts&, const KModCounts&) = default;
};

KModCounts kmod_counts(const IndexSet& a);

// sum over d | N of mobius(N/d) * A[d mod N].
BigInt coeff_via_theorem2(const IndexSet& a);

inline constexpr int kLeibnizCap = 9;

// Sum over all N! permutations of the symbolic circulant matrix whose entry
// (r, c) is x_{(r - c) mod N}. Work is split across `jobs` threads.
ExpansionPolynomial leibniz_expansion(int N, int jobs = 1, int cap = kLeibnizCap);

// Product of the N eigenvalues sum_m w^{pm} x_m, w = exp(2 pi i / N).
std::complex<double> eigenvalue_det(const std::vector<std::complex<double>>& x);

// Q(n; X, b | excluded): strictly increasing X-tuples from [1, b], avoiding
// the excluded values, whose sum is n mod N.
struct QQuery {
    long n = 0;
    int X = 0;
    int b = 1;
    std::vector<int> excluded;
};
BigInt q_partition_function(const QQuery& query, int N);

// The same counts as kmod_counts, assembled from Q over injective placements
// of the indices >= 2 (the largest one pinned to position 0). Needs the index
// sum to vanish mod N.
KModCounts kmod_via_q(const IndexSet& a);

// Identity checkers for the auxiliary lemmas behind the closed forms.
bool lemma1_check(int N, const std::vector<int>& q, int M1);
bool lemma2_check(int p, int M, int trials, std::uint64_t seed = 20240607);
bool lemma3_check(int p);
bool lemma6_check(int m, int X);

// Elementary identities used in the counting arguments.
bool pascal_sum_check(int n_max);       // sum_m C(m,l) C(n-m,k-l) = C(n+1,k+1)
bool mobius_phi_check(int m_max);       // sum_{d|m} (m/d) mu(m/d) phi(d) = mu(m)
bool phi_product_check(int m_max);      // phi(m) = m sum_{d|m} mu(d)/d
bool q_generating_check(int N);         // sum_n Q(n; X, N-1) w^n = (-1)^X, all X < N

}  // namespace circdet
