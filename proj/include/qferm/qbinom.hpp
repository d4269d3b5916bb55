#pragma once

// Gaussian binomial coefficients for arbitrary integer upper index, their
// m -> infinity limits, and finite q-Pochhammer products.

#include <span>
#include <vector>

#include "qferm/ratq.hpp"

namespace qferm {

/// [n, m] = prod_{k=1..m} (1 - q^{n+k}) / (1 - q^k).  n may be negative;
/// the value is 0 exactly when -m <= n <= -1.
inline RatQ qbinomial(int n, int m) {
    if (m < 0) throw error("qbinomial: lower index must be nonnegative");
    Laurent num(1), den(1);
    for (int k = 1; k <= m; ++k) {
        if (n + k == 0) return RatQ();
        num *= Laurent::one_minus_qpow(n + k);
        den *= Laurent::one_minus_qpow(k);
    }
    return RatQ::fraction(std::move(num), std::move(den));
}

/// [infinity, m] = 1 / prod_{k=1..m} (1 - q^k).
inline RatQ qbinomial_inf(int m) {
    if (m < 0) throw error("qbinomial: lower index must be nonnegative");
    Laurent den(1);
    for (int k = 1; k <= m; ++k) den *= Laurent::one_minus_qpow(k);
    return RatQ::fraction(Laurent(1), std::move(den));
}

/// Componentwise product of q-binomials; a negative component of alpha makes
/// the bracket vanish.
inline RatQ bracket(std::span<const int> nu, std::span<const int> alpha) {
    if (nu.size() != alpha.size()) throw error("bracket: length mismatch");
    RatQ r(1);
    for (size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] < 0) return RatQ();
        RatQ f = qbinomial(nu[i], alpha[i]);
        if (f.is_zero()) return RatQ();
        r *= f;
    }
    return r;
}

inline RatQ bracket_inf(std::span<const int> alpha) {
    RatQ r(1);
    for (int a : alpha) {
        if (a < 0) return RatQ();
        r *= qbinomial_inf(a);
    }
    return r;
}

/// (a; q)_n.  For n >= 0 the product prod_{k=0..n-1} (1 - q^k a); for n < 0
/// the reciprocal prod_{k=n..-1} (1 - q^k a)^{-1}, which requires every
/// factor to be nonzero.
inline RatQ pochhammer(const RatQ& a, int n) {
    RatQ r(1);
    if (n >= 0) {
        for (int k = 0; k < n; ++k) r *= RatQ(1) - RatQ::q_pow(k) * a;
    } else {
        for (int k = n; k < 0; ++k) {
            RatQ f = RatQ(1) - RatQ::q_pow(k) * a;
            if (f.is_zero())
                throw error("pochhammer: zero factor at k=" + std::to_string(k));
            r /= f;
        }
    }
    return r;
}

}  // namespace qferm
