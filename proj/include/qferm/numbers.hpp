#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace qferm {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Error type for all contract violations (division by zero, pole
/// evaluation, malformed input, exceeded budgets, ...).
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(a, b);
}

inline BigInt big_pow(const BigInt& b, unsigned e) {
    return boost::multiprecision::pow(b, e);
}

inline BigInt factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

/// Moebius function; n >= 1.
inline int mobius(int n) {
    if (n < 1) throw error("mobius: argument must be positive");
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            result = -result;
        }
    }
    if (n > 1) result = -result;
    return result;
}

}  // namespace qferm
