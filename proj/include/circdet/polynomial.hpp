#pragma once

#include "circdet/exactmath.hpp"
#include "circdet/index_set.hpp"

#include <map>
#include <vector>

namespace circdet {

// det[x_0, ..., x_{N-1}] as a map from exponent vectors to coefficients.
// Zero coefficients may be stored; equality ignores them.
struct ExpansionPolynomial {
    int N = 0;
    std::map<MultiplicityVector, BigInt> terms;

    BigInt coefficient(const MultiplicityVector& M) const;
    void add(const MultiplicityVector& M, const BigInt& value);

    std::size_t nonzero_count() const;
    ExpansionPolynomial without_zeros() const;

    friend bool operator==(const ExpansionPolynomial& a, const ExpansionPolynomial& b);
};

}  // namespace circdet
