#pragma once

// Laurent polynomials in one variable q over arbitrary-precision integers.
// Sparse map representation, exponent -> nonzero coefficient.

#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "qferm/numbers.hpp"

namespace qferm {

class Laurent {
public:
    Laurent() = default;
    Laurent(long long n) {
        if (n != 0) c_[0] = n;
    }
    Laurent(BigInt n) {
        if (n != 0) c_[0] = std::move(n);
    }

    static Laurent monomial(BigInt coeff, int exp) {
        Laurent r;
        if (coeff != 0) r.c_[exp] = std::move(coeff);
        return r;
    }
    static Laurent var() { return monomial(1, 1); }
    /// 1 - q^j; the zero polynomial when j == 0.
    static Laurent one_minus_qpow(int j) {
        Laurent r(1);
        r += monomial(-1, j);
        return r;
    }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second == 1; }

    int low() const {
        if (is_zero()) throw error("Laurent: low of zero polynomial");
        return c_.begin()->first;
    }
    int high() const {
        if (is_zero()) throw error("Laurent: high of zero polynomial");
        return c_.rbegin()->first;
    }
    /// Degree of an ordinary polynomial; -1 for zero.
    int degree() const { return is_zero() ? -1 : high(); }
    const BigInt& lead() const {
        if (is_zero()) throw error("Laurent: lead of zero polynomial");
        return c_.rbegin()->second;
    }

    BigInt coeff(int e) const {
        auto it = c_.find(e);
        return it == c_.end() ? BigInt(0) : it->second;
    }
    const std::map<int, BigInt>& coeffs() const { return c_; }

    bool operator==(const Laurent& o) const = default;

    Laurent& operator+=(const Laurent& o) {
        for (const auto& [e, c] : o.c_) {
            auto it = c_.find(e);
            if (it == c_.end()) {
                c_.emplace(e, c);
            } else {
                it->second += c;
                if (it->second == 0) c_.erase(it);
            }
        }
        return *this;
    }
    Laurent& operator-=(const Laurent& o) { return *this += -o; }
    Laurent operator-() const {
        Laurent r = *this;
        for (auto& [e, c] : r.c_) c = -c;
        return r;
    }
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent r;
        for (const auto& [ea, ca] : a.c_)
            for (const auto& [eb, cb] : b.c_) {
                auto it = r.c_.find(ea + eb);
                if (it == r.c_.end()) {
                    r.c_.emplace(ea + eb, ca * cb);
                } else {
                    it->second += ca * cb;
                }
            }
        r.trim();
        return r;
    }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

    /// Multiply by q^k.
    Laurent shifted(int k) const {
        Laurent r;
        for (const auto& [e, c] : c_) r.c_.emplace(e + k, c);
        return r;
    }

    /// Substitute q -> q^k; k must be nonzero.
    Laurent subst_qpow(int k) const {
        if (k == 0) throw error("Laurent: substitution exponent must be nonzero");
        Laurent r;
        for (const auto& [e, c] : c_) r.c_.emplace(e * k, c);
        return r;
    }

    /// gcd of |coefficients|; 0 for the zero polynomial.
    BigInt content() const {
        BigInt g = 0;
        for (const auto& [e, c] : c_) {
            g = big_gcd(g, c);
            if (g == 1) break;
        }
        return g;
    }

    /// Exact division by a nonzero integer.
    Laurent divided_by(const BigInt& d) const {
        if (d == 0) throw error("Laurent: division by zero integer");
        Laurent r;
        for (const auto& [e, c] : c_) {
            if (c % d != 0) throw error("Laurent: inexact integer division");
            r.c_.emplace(e, c / d);
        }
        return r;
    }

    Laurent scaled(const BigInt& s) const {
        if (s == 0) return Laurent();
        Laurent r;
        for (const auto& [e, c] : c_) r.c_.emplace(e, c * s);
        return r;
    }

    /// Evaluate at a rational point. Throws when a negative exponent meets 0.
    BigRat eval(const BigRat& v) const {
        BigRat acc = 0;
        for (const auto& [e, c] : c_) {
            if (e < 0 && v == 0)
                throw error("Laurent: negative exponent evaluated at q=0");
            BigRat p = 1;
            if (e >= 0) {
                for (int i = 0; i < e; ++i) p *= v;
            } else {
                for (int i = 0; i < -e; ++i) p *= v;
                p = 1 / p;
            }
            acc += BigRat(c) * p;
        }
        return acc;
    }

private:
    std::map<int, BigInt> c_;

    void trim() {
        for (auto it = c_.begin(); it != c_.end();)
            it = (it->second == 0) ? c_.erase(it) : std::next(it);
    }
};

namespace detail {

/// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b, ordinary polynomials.
inline Laurent pseudo_rem(Laurent a, const Laurent& b) {
    int e = a.degree() - b.degree() + 1;
    const BigInt& lb = b.lead();
    while (!a.is_zero() && a.degree() >= b.degree()) {
        Laurent s = Laurent::monomial(a.lead(), a.degree() - b.degree()) * b;
        a = a.scaled(lb) - s;
        --e;
    }
    for (; e > 0; --e) a = a.scaled(lb);
    return a;
}

/// Exact quotient of ordinary polynomials; throws when division leaves a remainder.
inline Laurent divexact(Laurent a, const Laurent& b) {
    if (b.is_zero()) throw error("Laurent: division by zero polynomial");
    Laurent q;
    while (!a.is_zero() && a.degree() >= b.degree()) {
        if (a.lead() % b.lead() != 0) throw error("Laurent: inexact polynomial division");
        Laurent t = Laurent::monomial(a.lead() / b.lead(), a.degree() - b.degree());
        q += t;
        a -= t * b;
    }
    if (!a.is_zero()) throw error("Laurent: inexact polynomial division");
    return q;
}

}  // namespace detail

/// gcd of two Laurent polynomials up to a unit, returned as an ordinary
/// polynomial with nonzero constant term and positive leading coefficient.
/// Subresultant polynomial remainder sequence keeps intermediate
/// coefficients integral without blowing up.
inline Laurent gcd_poly(Laurent a, Laurent b) {
    if (a.is_zero() && b.is_zero()) return Laurent();
    if (a.is_zero() || b.is_zero()) {
        Laurent r = a.is_zero() ? b : a;
        r = r.shifted(-r.low());
        if (r.lead() < 0) r = -r;
        return r;
    }
    a = a.shifted(-a.low());
    b = b.shifted(-b.low());
    BigInt ca = a.content(), cb = b.content();
    BigInt c = big_gcd(ca, cb);
    a = a.divided_by(ca);
    b = b.divided_by(cb);
    if (a.degree() < b.degree()) std::swap(a, b);
    BigInt g = 1, h = 1;
    while (true) {
        int d = a.degree() - b.degree();
        Laurent r = detail::pseudo_rem(a, b);
        if (r.is_zero()) break;
        if (r.degree() == 0) {
            b = Laurent(1);
            break;
        }
        a = std::move(b);
        BigInt div = g * big_pow(h, static_cast<unsigned>(d));
        b = r.divided_by(div);
        g = a.lead();
        if (d > 0)
            h = big_pow(g, static_cast<unsigned>(d)) / big_pow(h, static_cast<unsigned>(d - 1));
    }
    b = b.shifted(-b.low());
    b = b.divided_by(b.content());
    if (b.lead() < 0) b = -b;
    return b.scaled(c);
}

}  // namespace qferm
