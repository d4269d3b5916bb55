#pragma once

// Lambda-ring structure on truncated series: Adams substitutions
// psi_k f(q, x) = f(q^k, x^k), the plethystic exponential
// Exp(f) = exp(sum_k psi_k(f)/k) and its Moebius-inverted logarithm.

#include <optional>

#include "qferm/qbinom.hpp"
#include "qferm/series.hpp"

namespace qferm {

/// psi_k: q -> q^k and every variable to its k-th power; k >= 1.
inline Series adams(const Series& f, int k) {
    if (k < 1) throw error("adams: series substitution needs k >= 1");
    Series r(f.box());
    for (const auto& [d, c] : f.terms()) {
        Degree e = d;
        for (int& v : e.x) v *= k;
        for (int& v : e.y) v *= k;
        r.add_term(e, c.adams(k));
    }
    return r;
}

/// q -> q^-1 on every coefficient; degrees unchanged.
inline Series conj(const Series& f) {
    Series r(f.box());
    for (const auto& [d, c] : f.terms()) r.add_term(d, c.conj());
    return r;
}

namespace detail {

inline Series exp_truncated(const Series& g) {
    int bound = g.box().total();
    Series acc = Series::one(g.box());
    Series pw = Series::one(g.box());
    BigInt fact = 1;
    for (int n = 1; n <= bound; ++n) {
        pw *= g;
        if (pw.is_zero()) break;
        fact *= n;
        acc += pw.scaled(RatQ::fraction(Laurent(1), Laurent(fact)));
    }
    return acc;
}

inline Series log_truncated(const Series& f) {
    Series u = f - Series::one(f.box());
    int bound = f.box().total();
    Series acc(f.box());
    Series pw = Series::one(f.box());
    for (int n = 1; n <= bound; ++n) {
        pw *= u;
        if (pw.is_zero()) break;
        RatQ c = RatQ::fraction(Laurent(n % 2 == 1 ? 1 : -1), Laurent(n));
        acc += pw.scaled(c);
    }
    return acc;
}

}  // namespace detail

/// Exp(f) for f with zero constant term.
inline Series plethystic_exp(const Series& f) {
    if (!f.coefficient(f.box().zero_degree()).is_zero())
        throw error("Exp: constant term must vanish");
    int kmax = f.box().max_component();
    Series g(f.box());
    for (int k = 1; k <= kmax; ++k) {
        Series a = adams(f, k);
        if (a.is_zero()) continue;
        g += a.scaled(RatQ::fraction(Laurent(1), Laurent(k)));
    }
    return detail::exp_truncated(g);
}

/// Log(f) for f with constant term 1; inverse of plethystic_exp.
inline Series plethystic_log(const Series& f) {
    if (!f.coefficient(f.box().zero_degree()).is_one())
        throw error("Log: constant term must be 1");
    Series lg = detail::log_truncated(f);
    int kmax = f.box().max_component();
    Series acc(f.box());
    for (int k = 1; k <= kmax; ++k) {
        int mu = mobius(k);
        if (mu == 0) continue;
        Series a = adams(lg, k);
        if (a.is_zero()) continue;
        acc += a.scaled(RatQ::fraction(Laurent(mu), Laurent(k)));
    }
    return acc;
}

/// Rank-1 series sum_k [n, k] x^k, or sum_k [infinity, k] x^k when n is
/// absent, truncated at x^cap.
inline Series heine_series(std::optional<int> n, int cap) {
    if (cap < 0) throw error("heine_series: negative truncation");
    Series s(xbox({cap}));
    for (int k = 0; k <= cap; ++k)
        s.add_term(xdeg({k}), n ? qbinomial(*n, k) : qbinomial_inf(k));
    return s;
}

}  // namespace qferm
