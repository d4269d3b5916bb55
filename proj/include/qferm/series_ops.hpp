#pragma once

// Operators on the two-block series ring: the y-twists S_nu and T, the
// transfer X of y-degrees into x-degrees, and the specialization Phi_nu that
// erases the y-grading against a weight.

#include "qferm/quiver.hpp"
#include "qferm/series.hpp"

namespace qferm {

namespace detail {
inline void require_y(const Series& f, const char* who) {
    if (!f.box().has_y()) throw error(std::string(who) + ": series has no y block");
}
}  // namespace detail

/// S_nu: multiply the coefficient at y-degree alpha by q^{(nu, alpha)}.
inline Series scale_by_pairing(const Series& f, std::span<const int> nu) {
    detail::require_y(f, "scale_by_pairing");
    if (nu.size() != f.box().y.size())
        throw error("scale_by_pairing: weight length mismatch");
    Series r(f.box());
    for (const auto& [d, c] : f.terms()) {
        long long e = RootData::pairing(nu, d.y);
        r.add_term(d, c * RatQ::q_pow(static_cast<int>(e)));
    }
    return r;
}

/// T (sign +1) or T^{-1} (sign -1): multiply the coefficient at y-degree
/// alpha by q^{+-T(alpha)} for the Tits form of rd.
inline Series tits_twist(const Series& f, const RootData& rd, int sign) {
    detail::require_y(f, "tits_twist");
    if (sign != 1 && sign != -1) throw error("tits_twist: sign must be +-1");
    if (rd.rank() != static_cast<int>(f.box().y.size()))
        throw error("tits_twist: rank mismatch");
    Series r(f.box());
    for (const auto& [d, c] : f.terms()) {
        long long t = rd.tits(d.y);
        r.add_term(d, c * RatQ::q_pow(sign * static_cast<int>(t)));
    }
    return r;
}

/// X: each term's x-degree grows by its y-degree; overflowing terms drop.
inline Series x_mark(const Series& f) {
    detail::require_y(f, "x_mark");
    if (f.box().x.size() != f.box().y.size())
        throw error("x_mark: x and y blocks have different rank");
    Series r(f.box());
    for (const auto& [d, c] : f.terms()) {
        Degree e = d;
        for (size_t i = 0; i < e.x.size(); ++i) e.x[i] += e.y[i];
        r.add_term(e, c);
    }
    return r;
}

/// Phi_nu: y^beta collapses to the scalar q^{-(nu, beta)}; output is x-only.
inline Series specialize_phi(const Series& f, std::span<const int> nu) {
    detail::require_y(f, "specialize_phi");
    if (nu.size() != f.box().y.size())
        throw error("specialize_phi: weight length mismatch");
    Series r(xbox(f.box().x));
    for (const auto& [d, c] : f.terms()) {
        long long e = -RootData::pairing(nu, d.y);
        r.add_term(xdeg(d.x), c * RatQ::q_pow(static_cast<int>(e)));
    }
    return r;
}

}  // namespace qferm
