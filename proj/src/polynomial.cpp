#include "circdet/polynomial.hpp"

#include <stdexcept>

namespace circdet {

BigInt ExpansionPolynomial::coefficient(const MultiplicityVector& M) const {
    auto it = terms.find(M);
    return it == terms.end() ? BigInt(0) : it->second;
}

void ExpansionPolynomial::add(const MultiplicityVector& M, const BigInt& value) {
    if (M.N() != N) throw std::invalid_argument("polynomial: term dimension mismatch");
    terms[M] += value;
}

std::size_t ExpansionPolynomial::nonzero_count() const {
    std::size_t n = 0;
    for (const auto& [M, c] : terms)
        if (c != 0) ++n;
    return n;
}

ExpansionPolynomial ExpansionPolynomial::without_zeros() const {
    ExpansionPolynomial out;
    out.N = N;
    for (const auto& [M, c] : terms)
        if (c != 0) out.terms.emplace(M, c);
    return out;
}

bool operator==(const ExpansionPolynomial& a, const ExpansionPolynomial& b) {
    return a.N == b.N && a.without_zeros().terms == b.without_zeros().terms;
}

}  // namespace circdet
