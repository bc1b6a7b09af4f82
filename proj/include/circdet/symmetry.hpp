#pragma once

#include "circdet/exactmath.hpp"
#include "circdet/index_set.hpp"

#include <string>
#include <vector>

namespace circdet {

// Element (a, b) of Z_N^+ x Z_N^*. Acts on index sets by x -> b*x + a, so
// (a, 1) is the cyclic shift P^{-a} and (1, N-1) is the psi map.
struct GroupElement {
    int N;
    int shift;       // a in [0, N-1]
    int multiplier;  // b in [1, N-1], coprime to N

    GroupElement(int N, int shift, int multiplier);
    static GroupElement identity(int N) { return {N, 0, 1}; }

    // Componentwise product (a + c, b d).
    GroupElement compose(const GroupElement& other) const;
    // Sign picked up by a coefficient under this element: (-1)^{a(N-1)}.
    int sign() const;

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

std::vector<GroupElement> group_elements(int N);

MultiplicityVector act(const GroupElement& g, const MultiplicityVector& M);

// All multiplicity vectors with sum N and vanishing weighted sum mod N, in
// lexicographic order.
std::vector<MultiplicityVector> condition8_vectors(int N);

enum class MultipletKind { Additive, Super };

struct MultipletMember {
    MultiplicityVector M;
    int sign;
};

struct MultipletRecord {
    MultipletKind kind;
    MultiplicityVector representative;  // lexicographically smallest member
    int n;
    std::vector<MultipletMember> members;  // sorted by vector
    BigInt value;                          // coefficient of the representative
    bool self_negating = false;            // some member is reached with both signs; value must be 0
};

// Orbit under cyclic shifts. With `with_value` the representative's
// coefficient is computed and sign conflicts are checked against it.
MultipletRecord additive_multiplet(const MultiplicityVector& M, bool with_value = true);
MultipletRecord super_multiplet(const MultiplicityVector& M, bool with_value = true);

struct Classification {
    int N;
    std::vector<MultipletRecord> additive;
    std::vector<MultipletRecord> super;
};

Classification classify(int N, int jobs = 1);

// Counting formulas.
BigInt count_solutions_F(int N);
BigInt additive_multiplet_count_g(int N, int n);
BigInt supermultiplet_count(int N);  // N = p or 2p, p an odd prime

// Number of (8b,c) vectors fixed by g (hence by the cyclic group it generates).
BigInt invariant_count_K(const GroupElement& g);

// Closed forms for invariant counts under a multiplier of order d > 1.
BigInt k_closed_form_prime(int p, int d);
BigInt k_closed_form_twice_prime(int p, int d);

// Enumeration counterparts of the formulas above.
long long enumerate_condition8_count(int N);
long long enumerate_orbit_count(int N, bool additive_only);

int multiplicative_order(int b, int N);
bool is_odd_prime(int n);

}  // namespace circdet
