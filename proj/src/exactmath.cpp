#include "circdet/exactmath.hpp"

#include <array>
#include <numeric>

namespace circdet {

std::string to_string(const BigInt& v) { return v.str(); }

long mod(long a, long n) {
    long r = a % n;
    return r < 0 ? r + n : r;
}

std::vector<long> divisors(long n) {
    if (n < 1) throw std::invalid_argument("divisors: n must be positive");
    std::vector<long> out;
    for (long d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

namespace {

const std::array<BigInt, kFactorialMemoCap + 1>& factorial_table() {
    static const auto table = [] {
        std::array<BigInt, kFactorialMemoCap + 1> t;
        t[0] = 1;
        for (int i = 1; i <= kFactorialMemoCap; ++i) t[i] = t[i - 1] * i;
        return t;
    }();
    return table;
}

}  // namespace

BigInt factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    if (n <= kFactorialMemoCap) return factorial_table()[n];
    BigInt big = factorial_table()[kFactorialMemoCap];
    for (int i = kFactorialMemoCap + 1; i <= n; ++i) big *= i;
    return big;
}

BigInt binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

BigInt multinomial_star(int p, const std::vector<int>& k) {
    if (p < 0) throw std::invalid_argument("multinomial_star: negative p");
    long weighted = 0;
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (k[i] < 0) throw std::invalid_argument("multinomial_star: negative multiplicity");
        weighted += static_cast<long>(i + 1) * k[i];
    }
    if (weighted != p)
        throw std::invalid_argument("multinomial_star: sum of i*k_i must equal p");
    BigInt den = 1;
    for (std::size_t i = 0; i < k.size(); ++i)
        den *= ipow(BigInt(i + 1), static_cast<unsigned>(k[i])) * factorial(k[i]);
    return exact_div(factorial(p), den, "multinomial_star");
}

int mobius(long n) {
    if (n < 1) throw std::invalid_argument("mobius: n must be positive");
    int sign = 1;
    for (long q = 2; q * q <= n; ++q) {
        if (n % q) continue;
        n /= q;
        if (n % q == 0) return 0;
        sign = -sign;
    }
    if (n > 1) sign = -sign;
    return sign;
}

long euler_phi(long n) {
    if (n < 1) throw std::invalid_argument("euler_phi: n must be positive");
    long result = n;
    for (long q = 2; q * q <= n; ++q) {
        if (n % q) continue;
        while (n % q == 0) n /= q;
        result -= result / q;
    }
    if (n > 1) result -= result / n;
    return result;
}

long gcd(long a, long b) { return std::gcd(a, b); }

long mod_inverse(long n, long modulus) {
    if (modulus < 1) throw std::invalid_argument("mod_inverse: modulus must be positive");
    if (modulus == 1) return 0;
    long a = mod(n, modulus);
    if (std::gcd(a, modulus) != 1)
        throw std::invalid_argument("mod_inverse: argument not coprime to modulus");
    // extended Euclid
    long old_r = a, r = modulus, old_s = 1, s = 0;
    while (r != 0) {
        long q = old_r / r;
        long t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    return mod(old_s, modulus);
}

BigInt exact_div(const BigInt& num, const BigInt& den, const char* what) {
    if (den == 0) throw ArithmeticError(std::string(what) + ": division by zero");
    BigInt q, r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (r != 0)
        throw ArithmeticError(std::string(what) + ": " + num.str() + " not divisible by " +
                              den.str());
    return q;
}

BigInt to_integer(const Rational& q, const char* what) {
    if (boost::multiprecision::denominator(q) != 1)
        throw ArithmeticError(std::string(what) + ": non-integral value " + q.str());
    return boost::multiprecision::numerator(q);
}

BigInt ipow(BigInt base, unsigned exp) {
    BigInt r = 1;
    while (exp) {
        if (exp & 1u) r *= base;
        base *= base;
        exp >>= 1u;
    }
    return r;
}

}  // namespace circdet
