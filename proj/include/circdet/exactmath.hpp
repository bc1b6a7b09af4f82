#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace circdet {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Raised when an exact division or integrality check fails. Indicates a bug
// in a formula, never a user error.
class ArithmeticError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

std::string to_string(const BigInt& v);

// Non-negative residue of a modulo n (n >= 1).
long mod(long a, long n);

std::vector<long> divisors(long n);

// n! for n >= 0. Values up to the memo cap come from a table built once.
BigInt factorial(int n);
inline constexpr int kFactorialMemoCap = 64;

// C(n,k); zero outside 0 <= k <= n.
BigInt binomial(long n, long k);

// p! / prod_i (i^{k_i} k_i!), where k[i-1] is the number of parts equal to i.
BigInt multinomial_star(int p, const std::vector<int>& k);

int mobius(long n);
long euler_phi(long n);
long mod_inverse(long n, long modulus);
long gcd(long a, long b);

inline int heaviside(long n) { return n >= 0 ? 1 : 0; }
inline int delta_mod(long d, long n) { return mod(d, n) == 0 ? 1 : 0; }

// num / den, throwing ArithmeticError unless den divides num.
BigInt exact_div(const BigInt& num, const BigInt& den, const char* what);

// Converts a rational known to be integral; throws ArithmeticError otherwise.
BigInt to_integer(const Rational& q, const char* what);

BigInt ipow(BigInt base, unsigned exp);

}  // namespace circdet
