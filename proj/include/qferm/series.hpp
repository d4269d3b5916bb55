#pragma once

// Sparse multivariate power series with RatQ coefficients, truncated to a
// box: operations silently discard every term whose degree leaves the box.
// Two series are comparable only over the same box; mixing boxes is an error.

#include <map>
#include <sstream>

#include "qferm/grading.hpp"
#include "qferm/ratq.hpp"

namespace qferm {

class Series {
public:
    explicit Series(Box box) : box_(std::move(box)) {}

    static Series constant(Box box, RatQ c) {
        Series s(std::move(box));
        if (!c.is_zero()) s.t_.emplace(s.box_.zero_degree(), std::move(c));
        return s;
    }
    static Series one(Box box) { return constant(std::move(box), RatQ(1)); }
    static Series monomial(Box box, Degree d, RatQ c) {
        Series s(std::move(box));
        s.set(std::move(d), std::move(c));
        return s;
    }

    const Box& box() const { return box_; }
    const std::map<Degree, RatQ>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    bool operator==(const Series&) const = default;

    RatQ coefficient(const Degree& d) const {
        if (!box_.contains(d)) throw error("Series: degree outside box");
        auto it = t_.find(d);
        return it == t_.end() ? RatQ(0) : it->second;
    }
    RatQ coefficient_x(std::vector<int> a) const {
        return coefficient(Degree{std::move(a), std::vector<int>(box_.y.size(), 0)});
    }

    void set(Degree d, RatQ c) {
        if (!box_.contains(d)) throw error("Series: degree outside box");
        if (c.is_zero())
            t_.erase(d);
        else
            t_[std::move(d)] = std::move(c);
    }

    /// Accumulating insert; degrees outside the box are discarded.
    void add_term(const Degree& d, const RatQ& c) {
        if (c.is_zero() || !box_.contains(d)) return;
        auto it = t_.find(d);
        if (it == t_.end()) {
            t_.emplace(d, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    Series& operator+=(const Series& o) {
        require_same_box(o);
        for (const auto& [d, c] : o.t_) add_term(d, c);
        return *this;
    }
    Series& operator-=(const Series& o) {
        require_same_box(o);
        for (const auto& [d, c] : o.t_) add_term(d, -c);
        return *this;
    }
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    Series operator-() const {
        Series r(box_);
        for (const auto& [d, c] : t_) r.t_.emplace(d, -c);
        return r;
    }

    friend Series operator*(const Series& a, const Series& b) {
        a.require_same_box(b);
        Series r(a.box_);
        for (const auto& [da, ca] : a.t_)
            for (const auto& [db, cb] : b.t_) {
                Degree d = da;
                bool ok = true;
                for (size_t i = 0; i < d.x.size(); ++i) {
                    d.x[i] += db.x[i];
                    if (d.x[i] > a.box_.x[i]) { ok = false; break; }
                }
                if (ok)
                    for (size_t i = 0; i < d.y.size(); ++i) {
                        d.y[i] += db.y[i];
                        if (d.y[i] > a.box_.y[i]) { ok = false; break; }
                    }
                if (ok) r.add_term(d, ca * cb);
            }
        return r;
    }
    Series& operator*=(const Series& o) { return *this = *this * o; }

    Series scaled(const RatQ& c) const {
        Series r(box_);
        if (c.is_zero()) return r;
        for (const auto& [d, cc] : t_) r.t_.emplace(d, cc * c);
        return r;
    }

    /// Multiplicative inverse; requires an invertible constant term.
    Series inverse() const {
        RatQ c0 = coefficient(box_.zero_degree());
        if (c0.is_zero()) throw error("Series: inverse requires nonzero constant term");
        RatQ c0inv = c0.inverse();
        Series g(box_);
        g.set(box_.zero_degree(), c0inv);
        for (const Degree& d : box_.all_degrees()) {
            if (d.is_zero()) continue;
            RatQ acc;
            for (const auto& [e, fe] : t_) {
                if (e.is_zero()) continue;
                Degree rest = d;
                bool ok = true;
                for (size_t i = 0; i < rest.x.size() && ok; ++i) {
                    rest.x[i] -= e.x[i];
                    if (rest.x[i] < 0) ok = false;
                }
                for (size_t i = 0; i < rest.y.size() && ok; ++i) {
                    rest.y[i] -= e.y[i];
                    if (rest.y[i] < 0) ok = false;
                }
                if (!ok) continue;
                auto it = g.t_.find(rest);
                if (it != g.t_.end()) acc += fe * it->second;
            }
            if (!acc.is_zero()) g.set(d, -c0inv * acc);
        }
        return g;
    }

    /// One line per term, lexicographic degree order:
    /// "x^[a1,a2] y^[b1,b2] : <coefficient>".  Empty for the zero series.
    std::string to_lines() const {
        std::ostringstream os;
        for (const auto& [d, c] : t_) {
            os << "x^" << vec_str(d.x);
            if (box_.has_y()) os << " y^" << vec_str(d.y);
            os << " : " << c.str() << "\n";
        }
        return os.str();
    }

private:
    Box box_;
    std::map<Degree, RatQ> t_;

    void require_same_box(const Series& o) const {
        if (!(box_ == o.box_)) throw error("Series: box mismatch");
    }

    static std::string vec_str(const std::vector<int>& v) {
        std::string s = "[";
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(v[i]);
        }
        return s + "]";
    }
};

}  // namespace qferm
