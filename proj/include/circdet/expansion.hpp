#pragma once

#include "circdet/exactmath.hpp"
#include "circdet/polynomial.hpp"

#include <string>
#include <vector>

namespace circdet {

enum class Strategy { Direct, Reduced };

Strategy parse_strategy(const std::string& name);
std::string to_string(Strategy s);

inline constexpr int kExpandCap = 12;

// Every coefficient of det[x_0..x_{N-1}], zeros included. `Direct` evaluates
// each candidate key; `Reduced` evaluates one key per super-multiplet and
// fills in the rest by sign.
ExpansionPolynomial expand(int N, Strategy strategy = Strategy::Reduced, int jobs = 1, int cap = kExpandCap);

BigInt evaluate(const ExpansionPolynomial& poly, const std::vector<BigInt>& x);
BigInt evaluate(const ExpansionPolynomial& poly, const std::vector<long>& x);

// det[x_0, 0.., x_d, 0.., ...] == det[x_0, x_d, ...]^d as exact polynomials.
bool power_identity_check(int N, int d, int jobs = 1);

}  // namespace circdet
