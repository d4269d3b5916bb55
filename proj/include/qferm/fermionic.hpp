#pragma once

// Fermionic forms m and n, their generating series, the two-block series
// s(nu) and s, the binomial series p(nu) and p, the recursive computation of
// s(nu), and the multiplicity-sequence (standard) form of m.
//
// All sums run over tuples of partitions, one per vertex; tau_k denotes the
// vector of k-th parts.  The summand for a tuple with columns tau_1..tau_K is
//     prod_k q^{T(tau_k)} [nu - C(tau_1+..+tau_k), tau_k - tau_{k+1}]
// with tau_{K+1} = 0, or the [infinity, .] bracket in the unframed variants.
// m additionally requires every partial weight nu - C(tau_1+..+tau_k) to be
// dominant, and both m and n carry the prefactor q^{-(nu, tau_1)}.

#include <optional>

#include "qferm/partitions.hpp"
#include "qferm/qbinom.hpp"
#include "qferm/series_ops.hpp"

namespace qferm {

namespace detail {

/// Bracket-and-twist product for a full column sequence.  nu == nullptr
/// selects the [infinity, .] bracket.  No q^{-(nu,tau_1)} prefactor.
inline RatQ column_factor(const RootData& rd,
                          const std::vector<std::vector<int>>& cols,
                          const std::vector<int>* nu) {
    RatQ f(1);
    std::vector<int> w = nu ? *nu : std::vector<int>();
    std::vector<int> zero(rd.rank(), 0);
    for (size_t k = 0; k < cols.size(); ++k) {
        const std::vector<int>& col = cols[k];
        const std::vector<int>& next = (k + 1 < cols.size()) ? cols[k + 1] : zero;
        std::vector<int> diff(col.size());
        for (size_t i = 0; i < col.size(); ++i) diff[i] = col[i] - next[i];
        RatQ br;
        if (nu) {
            w = rd.weight_sub_root(w, col);
            br = bracket(w, diff);
        } else {
            br = bracket_inf(diff);
        }
        if (br.is_zero()) return RatQ();
        f *= RatQ::q_pow(static_cast<int>(rd.tits(col))) * br;
    }
    return f;
}

/// Shared enumeration engine for the framed fermionic forms.  Walks column
/// sequences recursively; the bracket for a column closes when the next
/// column is chosen.  dominant_only prunes branches whose partial weight
/// leaves the dominant cone.
struct FermionicSum {
    const RootData& rd;
    std::vector<int> nu;
    bool dominant_only;
    RatQ acc;

    void run(std::span<const int> beta) {
        std::vector<int> remaining(beta.begin(), beta.end());
        bool done = true;
        for (int b : remaining) done = done && b == 0;
        if (done) {
            acc += RatQ(1);  // empty tuple
            return;
        }
        descend(std::nullopt, nu, remaining, RatQ(1));
    }

    void descend(const std::optional<std::vector<int>>& pending,
                 const std::vector<int>& w, const std::vector<int>& remaining,
                 const RatQ& factor) {
        bool finished = true;
        for (int r : remaining) finished = finished && r == 0;
        if (finished) {
            // close the last column against tau_{K+1} = 0
            RatQ br = bracket(w, *pending);
            if (!br.is_zero())
                acc += factor * RatQ::q_pow(static_cast<int>(rd.tits(*pending))) * br;
            return;
        }
        int n = rd.rank();
        std::vector<int> cur(n, 0);
        enumerate(pending, w, remaining, factor, cur, 0);
    }

    void enumerate(const std::optional<std::vector<int>>& pending,
                   const std::vector<int>& w, const std::vector<int>& remaining,
                   const RatQ& factor, std::vector<int>& cur, size_t i) {
        int n = rd.rank();
        if (i == static_cast<size_t>(n)) {
            RatQ f = factor;
            if (pending) {
                // bracket of the previous column, now that its successor is known
                std::vector<int> diff(n);
                for (int j = 0; j < n; ++j) diff[j] = (*pending)[j] - cur[j];
                RatQ br = bracket(w, diff);
                if (br.is_zero()) return;
                f = f * RatQ::q_pow(static_cast<int>(rd.tits(*pending))) * br;
            } else {
                f = f * RatQ::q_pow(static_cast<int>(-RootData::pairing(nu, cur)));
            }
            std::vector<int> w2 = rd.weight_sub_root(w, cur);
            if (dominant_only)
                for (int v : w2)
                    if (v < 0) return;
            std::vector<int> rem2(n);
            for (int j = 0; j < n; ++j) rem2[j] = remaining[j] - cur[j];
            descend(cur, w2, rem2, f);
            return;
        }
        // a vertex with remaining weight needs a positive entry: columns are
        // weakly decreasing, so a zero here would strand the remainder
        int lo = remaining[i] >= 1 ? 1 : 0;
        int hi = std::min(remaining[i], pending ? (*pending)[i] : remaining[i]);
        for (int v = lo; v <= hi; ++v) {
            cur[i] = v;
            enumerate(pending, w, remaining, factor, cur, i + 1);
        }
        cur[i] = 0;
    }
};

}  // namespace detail

/// n(nu, lambda) with beta = nu - lambda in root coordinates: the sum over
/// all tuples with |tau| = beta, no positivity constraint on nu.
inline RatQ fermionic_n(const RootData& rd, std::span<const int> nu,
                        std::span<const int> beta) {
    if (static_cast<int>(nu.size()) != rd.rank() ||
        static_cast<int>(beta.size()) != rd.rank())
        throw error("fermionic_n: vector length does not match rank");
    for (int b : beta)
        if (b < 0) throw error("fermionic_n: root vector must be nonnegative");
    detail::FermionicSum sum{rd, {nu.begin(), nu.end()}, false, RatQ()};
    sum.run(beta);
    return sum.acc;
}

/// m(nu, lambda): as fermionic_n but only over tuples whose partial weights
/// nu - C(tau_1+..+tau_k) all stay dominant.  nu itself must be dominant.
inline RatQ fermionic_m(const RootData& rd, std::span<const int> nu,
                        std::span<const int> beta) {
    if (static_cast<int>(nu.size()) != rd.rank() ||
        static_cast<int>(beta.size()) != rd.rank())
        throw error("fermionic_m: vector length does not match rank");
    for (int v : nu)
        if (v < 0) throw error("fermionic_m: weight is not dominant");
    for (int b : beta)
        if (b < 0) throw error("fermionic_m: root vector must be nonnegative");
    detail::FermionicSum sum{rd, {nu.begin(), nu.end()}, true, RatQ()};
    sum.run(beta);
    return sum.acc;
}

/// Solve C beta = nu - lambda for the root coordinates of a weight pair.
inline std::vector<int> beta_from_lambda(const RootData& rd,
                                         std::span<const int> nu,
                                         std::span<const int> lambda) {
    if (nu.size() != lambda.size())
        throw error("beta_from_lambda: length mismatch");
    std::vector<int> diff(nu.size());
    for (size_t i = 0; i < nu.size(); ++i) diff[i] = nu[i] - lambda[i];
    auto beta = rd.solve_root_coords(diff);
    if (!beta)
        throw error("beta_from_lambda: nu - lambda is not an integral root vector");
    for (int b : *beta)
        if (b < 0) throw error("beta_from_lambda: nu - lambda is not in the positive cone");
    return *beta;
}

/// Generating series of n over all beta <= box.
inline Series gen_n(const RootData& rd, std::span<const int> nu, Box box) {
    if (box.has_y() || static_cast<int>(box.x.size()) != rd.rank())
        throw error("gen_n: expected an x-only box of matching rank");
    Series s(box);
    std::vector<int> beta(rd.rank(), 0);
    for (const Degree& d : box.all_degrees())
        s.add_term(d, fermionic_n(rd, nu, d.x));
    return s;
}

/// Two-block series s(nu) (finite nu) or s (nu absent): terms
/// x^{|tau|} y^{tau_1} column_factor(tau); no q^{-(nu,tau_1)} prefactor.
inline Series gen_s(const RootData& rd, std::optional<std::vector<int>> nu, Box box) {
    if (!box.has_y() || static_cast<int>(box.x.size()) != rd.rank() ||
        static_cast<int>(box.y.size()) != rd.rank())
        throw error("gen_s: expected x and y blocks of matching rank");
    if (nu && static_cast<int>(nu->size()) != rd.rank())
        throw error("gen_s: weight length does not match rank");
    Series s(box);
    for_each_partition_tuple(box.x, [&](const PartitionTuple& t) {
        auto cols = t.columns();
        Degree d{t.weight(), t.column(1)};
        if (!box.contains(d)) return;
        RatQ f = detail::column_factor(rd, cols, nu ? &*nu : nullptr);
        s.add_term(d, f);
    });
    return s;
}

/// p(nu) = prod_i (sum_k [nu_i, k] y_i^k), or p with the infinite bracket;
/// a y-block-only value living in the full box ring.
inline Series gen_p(const RootData& rd, std::optional<std::vector<int>> nu, Box box) {
    if (!box.has_y() || static_cast<int>(box.y.size()) != rd.rank())
        throw error("gen_p: expected a y block of matching rank");
    if (nu && static_cast<int>(nu->size()) != rd.rank())
        throw error("gen_p: weight length does not match rank");
    Series s(box);
    std::vector<int> alpha(rd.rank(), 0);
    std::vector<int> xzero(box.x.size(), 0);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == rd.rank()) {
            RatQ c = nu ? bracket(*nu, alpha) : bracket_inf(alpha);
            s.add_term(Degree{xzero, alpha}, c);
            return;
        }
        for (alpha[i] = 0; alpha[i] <= box.y[i]; ++alpha[i]) self(self, i + 1);
        alpha[i] = 0;
    };
    rec(rec, 0);
    return s;
}

/// s(nu) computed by the recursion s(nu)_alpha = q^{T(alpha)} x^alpha
/// (p(nu - C alpha) s(nu - C alpha))_alpha, seeded by s(.)_0 = 1, instead of
/// by tuple enumeration.  With nu absent this is the unframed fixed point
/// s_alpha = q^{T(alpha)} x^alpha (p s)_alpha.  Must agree with gen_s exactly.
inline Series kleber_recursion(const RootData& rd, std::optional<std::vector<int>> nu,
                               Box box) {
    if (!box.has_y() || static_cast<int>(box.x.size()) != rd.rank() ||
        static_cast<int>(box.y.size()) != rd.rank())
        throw error("kleber_recursion: expected x and y blocks of matching rank");
    if (nu && static_cast<int>(nu->size()) != rd.rank())
        throw error("kleber_recursion: weight length does not match rank");
    int n = rd.rank();
    Box xb = xbox(box.x);
    int budget0 = 0;
    for (int v : box.x) budget0 += v;

    // x-part of s(w)_alpha, correct up to total x-degree <= budget
    std::map<std::tuple<std::vector<int>, std::vector<int>, int>, Series> memo;
    auto slice = [&](auto&& self, const std::vector<int>& w,
                     const std::vector<int>& alpha, int budget) -> Series {
        bool zero = true;
        for (int a : alpha) zero = zero && a == 0;
        if (zero) return Series::one(xb);
        int height = 0;
        for (int a : alpha) height += a;
        if (height > budget) return Series(xb);
        auto key = std::make_tuple(w, alpha, budget);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        std::vector<int> w2 = nu ? rd.weight_sub_root(w, alpha) : w;
        // (p(w2) s(w2))_alpha = sum_{gamma <= alpha} [w2, alpha-gamma] s(w2)_gamma
        Series acc(xb);
        std::vector<int> gamma(n, 0);
        auto loop = [&](auto&& lself, int i) -> void {
            if (i == n) {
                std::vector<int> diff(n);
                for (int j = 0; j < n; ++j) diff[j] = alpha[j] - gamma[j];
                RatQ c = nu ? bracket(w2, diff) : bracket_inf(diff);
                if (!c.is_zero())
                    acc += self(self, w2, gamma, budget - height).scaled(c);
                return;
            }
            for (gamma[i] = 0; gamma[i] <= alpha[i]; ++gamma[i]) lself(lself, i + 1);
            gamma[i] = 0;
        };
        loop(loop, 0);
        // multiply by q^{T(alpha)} x^alpha
        Series out(xb);
        RatQ tw = RatQ::q_pow(static_cast<int>(rd.tits(alpha)));
        for (const auto& [d, c] : acc.terms()) {
            Degree e = d;
            for (int j = 0; j < n; ++j) e.x[j] += alpha[j];
            out.add_term(e, c * tw);
        }
        memo.emplace(std::move(key), out);
        return out;
    };

    Series s(box);
    std::vector<int> alpha(n, 0);
    std::vector<int> seed = nu ? *nu : std::vector<int>(n, 0);
    auto assemble = [&](auto&& self, int i) -> void {
        if (i == n) {
            Series part = slice(slice, seed, alpha, budget0);
            for (const auto& [d, c] : part.terms()) s.add_term(Degree{d.x, alpha}, c);
            return;
        }
        for (alpha[i] = 0; alpha[i] <= box.y[i]; ++alpha[i]) self(self, i + 1);
        alpha[i] = 0;
    };
    assemble(assemble, 0);
    return s;
}

/// Multiplicity-sequence form of m: nu is a finite sequence of dominant
/// weights, and the sum runs over sequences (m_k) of root vectors with
/// sum_k k (nu_k - C m_k) = lambda, all partial combinations
/// p_k = sum_l min(k,l)(nu_l - C m_l) dominant, weighted by
/// q^{c(m)} prod_k [p_k, m_k] with
/// c(m) = sum_{k,l} min(k,l) ( (m_k, m_l)/2 - (nu_k, m_l) ).
inline RatQ standard_form_m(const RootData& rd,
                            const std::vector<std::vector<int>>& nuseq,
                            std::span<const int> lambda) {
    int n = rd.rank();
    for (const auto& nk : nuseq) {
        if (static_cast<int>(nk.size()) != n)
            throw error("standard_form_m: weight length does not match rank");
        for (int v : nk)
            if (v < 0) throw error("standard_form_m: sequence entries must be dominant");
    }
    for (int v : lambda)
        if (v < 0) throw error("standard_form_m: lambda must be dominant");
    if (static_cast<int>(lambda.size()) != n)
        throw error("standard_form_m: weight length does not match rank");

    // C gamma = sum_k k nu_k - lambda determines gamma = sum_k k m_k
    std::vector<int> target(n, 0);
    for (size_t k = 0; k < nuseq.size(); ++k)
        for (int i = 0; i < n; ++i) target[i] += static_cast<int>(k + 1) * nuseq[k][i];
    for (int i = 0; i < n; ++i) target[i] -= lambda[i];
    {
        std::vector<std::vector<BigRat>> cm(n, std::vector<BigRat>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) cm[i][j] = rd.cartan()[i][j];
        BigRat d = 1;
        for (int col = 0; col < n; ++col) {
            int piv = -1;
            for (int r = col; r < n; ++r)
                if (cm[r][col] != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) { d = 0; break; }
            if (piv != col) {
                std::swap(cm[piv], cm[col]);
                d = -d;
            }
            d *= cm[col][col];
            for (int r = col + 1; r < n; ++r) {
                BigRat f = cm[r][col] / cm[col][col];
                for (int j = col; j < n; ++j) cm[r][j] -= f * cm[col][j];
            }
        }
        if (d == 0)
            throw error("standard_form_m: singular Cartan matrix, gamma undetermined");
    }
    auto gamma = rd.solve_root_coords(target);
    if (!gamma) return RatQ();
    for (int g : *gamma)
        if (g < 0) return RatQ();

    // per-vertex partitions of gamma^i give the multiplicity vectors m_k^i
    int kmax = 0;
    for (int g : *gamma) kmax = std::max(kmax, g);
    kmax = std::max(kmax, static_cast<int>(nuseq.size()));
    std::vector<std::vector<Partition>> lists;
    for (int g : *gamma) lists.push_back(partitions_of(g));

    auto nu_at = [&](int k) -> std::vector<int> {  // 1-based
        if (k >= 1 && k <= static_cast<int>(nuseq.size())) return nuseq[k - 1];
        return std::vector<int>(n, 0);
    };

    RatQ acc;
    std::vector<const Partition*> choice(n);
    auto rec = [&](auto&& self, int i) -> void {
        if (i < n) {
            for (const Partition& p : lists[i]) {
                choice[i] = &p;
                self(self, i + 1);
            }
            return;
        }
        // m_k^i = multiplicity of part k in the partition at vertex i
        std::vector<std::vector<int>> m(kmax + 1, std::vector<int>(n, 0));
        for (int v = 0; v < n; ++v)
            for (int part : *choice[v]) ++m[part][v];
        // partial weights p_k, dominance check
        std::vector<std::vector<int>> pw(kmax + 1, std::vector<int>(n, 0));
        for (int k = 1; k <= kmax; ++k) {
            for (int l = 1; l <= kmax; ++l) {
                std::vector<int> term = nu_at(l);
                std::vector<int> cm = rd.root_to_weight(m[l]);
                int w = std::min(k, l);
                for (int i2 = 0; i2 < n; ++i2) pw[k][i2] += w * (term[i2] - cm[i2]);
            }
            for (int v : pw[k])
                if (v < 0) return;
        }
        // exponent c(m); accumulate twice the value, the total is integral
        // even though single (m_k, C m_l)/2 terms need not be
        long long c2 = 0;
        for (int k = 1; k <= kmax; ++k)
            for (int l = 1; l <= kmax; ++l) {
                long long w = std::min(k, l);
                std::vector<int> cml = rd.root_to_weight(m[l]);
                c2 += w * RootData::pairing(cml, m[k]);
                c2 -= 2 * w * RootData::pairing(nu_at(k), m[l]);
            }
        if (c2 % 2 != 0) throw error("standard_form_m: non-integral exponent");
        RatQ f = RatQ::q_pow(static_cast<int>(c2 / 2));
        for (int k = 1; k <= kmax; ++k) {
            RatQ br = bracket(pw[k], m[k]);
            if (br.is_zero()) return;
            f *= br;
        }
        acc += f;
    };
    rec(rec, 0);
    return acc;
}

}  // namespace qferm
