#pragma once

// Hua's series r(nu,q), Kac polynomial tables via the plethystic logarithm,
// and the Hausel ratio with its Poincare polynomials.

#include <map>

#include "qferm/partitions.hpp"
#include "qferm/plethysm.hpp"
#include "qferm/qbinom.hpp"
#include "qferm/quiver.hpp"

namespace qferm {

/// r(nu,q): enumerates r(nu,q^{-1}) = sum_tau x^{|tau|} q^{-(nu,tau_1)}
/// prod_k q^{T(tau_k)} [infinity, tau_k - tau_{k+1}] over the box and
/// conjugates once at the end.  typo_bracket switches the difference to
/// tau_k - tau_{k-1} (with tau_0 = 0), the variant reading kept around for
/// the discrimination test; there only constant column sequences survive.
inline Series r_series(const RootData& rd, std::span<const int> nu, Box box,
                       bool typo_bracket = false) {
    if (box.has_y() || static_cast<int>(box.x.size()) != rd.rank())
        throw error("r_series: expected an x-only box of matching rank");
    if (static_cast<int>(nu.size()) != rd.rank())
        throw error("r_series: weight length does not match rank");
    int n = rd.rank();
    Series acc(box);
    for_each_partition_tuple(box.x, [&](const PartitionTuple& t) {
        auto cols = t.columns();
        RatQ f(1);
        if (!cols.empty())
            f = RatQ::q_pow(static_cast<int>(-RootData::pairing(nu, cols[0])));
        for (size_t k = 0; k < cols.size(); ++k) {
            std::vector<int> diff = cols[k];
            if (typo_bracket) {
                if (k > 0)
                    for (int i = 0; i < n; ++i) diff[i] -= cols[k - 1][i];
            } else if (k + 1 < cols.size()) {
                for (int i = 0; i < n; ++i) diff[i] -= cols[k + 1][i];
            }
            RatQ br = bracket_inf(diff);
            if (br.is_zero()) {
                f = RatQ();
                break;
            }
            f *= RatQ::q_pow(static_cast<int>(rd.tits(cols[k]))) * br;
        }
        acc.add_term(Degree{t.weight(), {}}, f);
    });
    return conj(acc);
}

/// Kac polynomial tables: the a block counts absolutely indecomposable
/// representations, the m block isomorphism classes, both as polynomials in
/// the field size.
struct KacTable {
    std::map<std::vector<int>, RatQ> a;  // indexed by 0 < alpha <= box
    std::map<std::vector<int>, RatQ> m;  // indexed by 0 <= alpha <= box
};

namespace detail {
inline void require_polynomial(const RatQ& v, const std::vector<int>& alpha,
                               const char* what) {
    if (!v.is_polynomial())
        throw error(std::string(what) + ": entry at " + [&] {
            std::string s = "(";
            for (size_t i = 0; i < alpha.size(); ++i)
                s += (i ? "," : "") + std::to_string(alpha[i]);
            return s + ")";
        }() + " is not a polynomial: " + v.str());
}
}  // namespace detail

/// a = (q-1) Log(r(0,q)) coefficientwise; every entry must canonicalize to an
/// integer polynomial, anything else signals an arithmetic bug.
inline KacTable kac_a_series(const RootData& rd, Box box, bool typo_bracket = false) {
    std::vector<int> zero(rd.rank(), 0);
    Series r0 = r_series(rd, zero, box, typo_bracket);
    Series lg = plethystic_log(r0);
    RatQ qm1 = RatQ::q_pow(1) - RatQ(1);
    KacTable t;
    for (const Degree& d : box.all_degrees()) {
        if (d.is_zero()) continue;
        RatQ a = lg.coefficient(d) * qm1;
        detail::require_polynomial(a, d.x, "kac_a_series");
        t.a[d.x] = a;
    }
    return t;
}

/// m = Exp(a); fills both blocks.
inline KacTable rep_count_series(const RootData& rd, Box box) {
    KacTable t = kac_a_series(rd, box);
    Series av(box);
    for (const auto& [alpha, val] : t.a) av.add_term(Degree{alpha, {}}, val);
    Series m = plethystic_exp(av);
    for (const Degree& d : box.all_degrees()) {
        RatQ v = m.coefficient(d);
        detail::require_polynomial(v, d.x, "rep_count_series");
        t.m[d.x] = v;
    }
    return t;
}

/// r(nu,q)/r(0,q); the generating series of Poincare polynomials of the
/// framed quiver varieties once twisted by q^{d(alpha,nu)}.
inline Series hausel_ratio(const RootData& rd, std::span<const int> nu, Box box,
                           bool typo_bracket = false) {
    std::vector<int> zero(rd.rank(), 0);
    return r_series(rd, nu, box, typo_bracket) *
           r_series(rd, zero, box, typo_bracket).inverse();
}

struct PoincareEntry {
    std::vector<int> alpha;
    int d = 0;
    RatQ poly;
};

/// q^{d(alpha,nu)} times the Hausel ratio coefficient; asserts the counting
/// polynomial facts: nonnegative integer coefficients, degree <= 2 d(alpha,nu).
inline PoincareEntry poincare_polynomial(const RootData& rd, std::span<const int> alpha,
                                         std::span<const int> nu, Box box) {
    for (int v : nu)
        if (v < 0) throw error("poincare_polynomial: weight is not dominant");
    Series ratio = hausel_ratio(rd, nu, box);
    std::vector<int> av(alpha.begin(), alpha.end());
    RatQ c = ratio.coefficient(Degree{av, {}});
    int d = static_cast<int>(rd.d_exponent(alpha, nu));
    PoincareEntry e{av, d, RatQ::q_pow(d) * c};
    if (!e.poly.is_zero()) {
        detail::require_polynomial(e.poly, av, "poincare_polynomial");
        for (const auto& [expn, coeff] : e.poly.num().coeffs()) {
            if (coeff < 0)
                throw error("poincare_polynomial: negative coefficient at q^" +
                            std::to_string(expn));
        }
        if (e.poly.num().degree() > 2 * d)
            throw error("poincare_polynomial: degree exceeds twice the exponent");
    }
    return e;
}

}  // namespace qferm
