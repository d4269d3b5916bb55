#pragma once

// Rational functions in q with exact integer arithmetic, kept in a canonical
// form: denominator has lowest exponent 0 and positive constant coefficient,
// numerator and denominator share no polynomial factor, and the integer
// contents of the two are coprime.  Equality is plain structural equality.

#include <cctype>
#include <string>
#include <string_view>
#include <utility>

#include "qferm/laurent.hpp"

namespace qferm {

class RatQ {
public:
    RatQ() : num_(), den_(1) {}
    RatQ(long long n) : num_(n), den_(1) {}
    RatQ(BigInt n) : num_(std::move(n)), den_(1) {}

    static RatQ fraction(Laurent num, Laurent den) {
        RatQ r;
        r.assign(std::move(num), std::move(den));
        return r;
    }
    static RatQ from_laurent(Laurent num) { return fraction(std::move(num), Laurent(1)); }
    /// c * q^e
    static RatQ monomial(BigInt c, int e) {
        return from_laurent(Laurent::monomial(std::move(c), e));
    }
    static RatQ q_pow(int e) { return monomial(1, e); }

    const Laurent& num() const { return num_; }
    const Laurent& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    /// True when the value is a polynomial in q with integer coefficients.
    bool is_polynomial() const { return den_.is_one() && (num_.is_zero() || num_.low() >= 0); }
    bool is_laurent() const { return den_.is_one(); }

    bool operator==(const RatQ& o) const = default;

    friend RatQ operator+(const RatQ& a, const RatQ& b) {
        return fraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatQ operator-(const RatQ& a, const RatQ& b) {
        return fraction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    RatQ operator-() const {
        RatQ r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RatQ operator*(const RatQ& a, const RatQ& b) {
        return fraction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatQ operator/(const RatQ& a, const RatQ& b) {
        if (b.is_zero()) throw error("RatQ: division by zero");
        return fraction(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatQ& operator+=(const RatQ& o) { return *this = *this + o; }
    RatQ& operator-=(const RatQ& o) { return *this = *this - o; }
    RatQ& operator*=(const RatQ& o) { return *this = *this * o; }
    RatQ& operator/=(const RatQ& o) { return *this = *this / o; }

    RatQ inverse() const {
        if (is_zero()) throw error("RatQ: inverse of zero");
        return fraction(den_, num_);
    }

    /// q -> q^k for nonzero integer k; a ring automorphism of the field.
    RatQ adams(int k) const {
        if (k == 0) throw error("RatQ: Adams index must be nonzero");
        return fraction(num_.subst_qpow(k), den_.subst_qpow(k));
    }
    /// q -> q^-1.
    RatQ conj() const { return adams(-1); }

    /// Exact evaluation; names the vanishing denominator on a pole.
    BigRat eval(const BigRat& v) const {
        BigRat d = den_.eval(v);
        if (d == 0)
            throw error("RatQ: pole at q=" + rat_str(v) + ", denominator " +
                        poly_string(den_) + " vanishes");
        return num_.eval(v) / d;
    }

    std::string str() const {
        if (num_.is_zero()) return "0";
        if (den_.is_one()) return poly_string(num_);
        std::string n = wrap(num_), d = wrap(den_);
        return n + "/" + d;
    }

    static RatQ parse(std::string_view s);

private:
    Laurent num_, den_;

    void assign(Laurent n, Laurent d) {
        if (d.is_zero()) throw error("RatQ: denominator is zero");
        if (n.is_zero()) {
            num_ = Laurent();
            den_ = Laurent(1);
            return;
        }
        int shift = d.low();
        d = d.shifted(-shift);
        n = n.shifted(-shift);
        int val = n.low();
        Laurent n0 = n.shifted(-val);
        BigInt cn = n0.content(), cd = d.content();
        n0 = n0.divided_by(cn);
        d = d.divided_by(cd);
        Laurent g = gcd_poly(n0, d);
        if (!g.is_one()) {
            n0 = detail::divexact(n0, g);
            d = detail::divexact(d, g);
        }
        BigInt c = big_gcd(cn, cd);
        cn /= c;
        cd /= c;
        num_ = n0.scaled(cn).shifted(val);
        den_ = d.scaled(cd);
        if (den_.coeff(0) < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }

    static std::string rat_str(const BigRat& v) {
        std::ostringstream os;
        os << v;
        return os.str();
    }

    static std::string poly_string(const Laurent& p) {
        // ascending exponents, "q^-3", no '*' between coefficient and power
        std::string out;
        bool first = true;
        for (const auto& [e, c] : p.coeffs()) {
            BigInt a = c;
            if (first) {
                if (a < 0) {
                    out += "-";
                    a = -a;
                }
            } else {
                out += (a < 0) ? "-" : "+";
                if (a < 0) a = -a;
            }
            if (a != 1 || e == 0) out += a.str();
            if (e != 0) {
                out += "q";
                if (e != 1) out += "^" + std::to_string(e);
            }
            first = false;
        }
        return out;
    }

    static std::string wrap(const Laurent& p) {
        std::string s = poly_string(p);
        return p.coeffs().size() > 1 ? "(" + s + ")" : s;
    }
};

namespace detail {

struct RatQParser {
    std::string_view s;
    size_t i = 0;

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    char peek() {
        skip();
        return i < s.size() ? s[i] : '\0';
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw error("RatQ parse: " + msg + " at offset " + std::to_string(i));
    }

    BigInt integer() {
        skip();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) fail("expected integer");
        return BigInt(std::string(s.substr(start, i - start)));
    }

    int exponent() {
        bool neg = eat('-');
        BigInt e = integer();
        if (e > 1000000) fail("exponent out of range");
        int v = static_cast<int>(e);
        return neg ? -v : v;
    }

    // coefficient ['*'] q-power | q-power | coefficient
    Laurent term() {
        skip();
        BigInt c = 1;
        bool have_coeff = false;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            c = integer();
            have_coeff = true;
            eat('*');
        }
        int e = 0;
        if (peek() == 'q') {
            ++i;
            e = eat('^') ? exponent() : 1;
        } else if (!have_coeff) {
            fail("expected term");
        }
        return Laurent::monomial(c, e);
    }

    Laurent sum() {
        Laurent acc;
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        acc += neg ? -term() : term();
        while (true) {
            char c = peek();
            if (c == '+' || c == '-') {
                ++i;
                Laurent t = term();
                acc += (c == '-') ? -t : t;
            } else {
                break;
            }
        }
        return acc;
    }

    Laurent poly() {
        if (eat('(')) {
            Laurent p = sum();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        return sum();
    }

    RatQ run() {
        Laurent n = poly();
        skip();
        if (eat('/')) {
            Laurent d = poly();
            skip();
            if (i != s.size()) fail("trailing input");
            return RatQ::fraction(std::move(n), std::move(d));
        }
        if (i != s.size()) fail("trailing input");
        return RatQ::from_laurent(std::move(n));
    }
};

}  // namespace detail

inline RatQ RatQ::parse(std::string_view s) {
    detail::RatQParser p{s};
    return p.run();
}

}  // namespace qferm
