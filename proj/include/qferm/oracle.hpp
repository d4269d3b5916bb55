#pragma once

// Brute-force counting of isomorphism classes of quiver representations over
// small prime fields.  Independent of the generating-series machinery, so the
// two can cross-check each other at prime evaluations.

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qferm/hua.hpp"
#include "qferm/numbers.hpp"
#include "qferm/quiver.hpp"
#include "qferm/report.hpp"

namespace qferm {

/// |GL_{a_1}(F_p)| * ... * |GL_{a_n}(F_p)| as an exact integer.
inline BigInt gl_order(std::span<const int> alpha, int p) {
    if (p < 2) throw error("gl_order: modulus must be at least 2");
    BigInt total = 1;
    for (int a : alpha) {
        if (a < 0) throw error("gl_order: negative dimension");
        BigInt pn = big_pow(p, static_cast<unsigned>(a));
        for (int k = 0; k < a; ++k) total *= pn - big_pow(p, static_cast<unsigned>(k));
    }
    return total;
}

namespace detail {

// Dense row-major matrices with entries reduced into [0, p).
using FpMat = std::vector<int>;

inline int fp_inverse(int a, int p) {
    a %= p;
    if (a < 0) a += p;
    for (int x = 1; x < p; ++x)
        if (a * x % p == 1) return x;
    throw error("fp_inverse: zero has no inverse");
}

// a is n x m, b is m x k.
inline FpMat fp_mul(const FpMat& a, const FpMat& b, int n, int m, int k, int p) {
    FpMat out(static_cast<size_t>(n) * k, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            int f = a[i * m + j];
            if (!f) continue;
            for (int l = 0; l < k; ++l)
                out[i * k + l] = (out[i * k + l] + f * b[j * k + l]) % p;
        }
    return out;
}

inline int fp_rank(FpMat m, int rows, int cols, int p) {
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r * cols + col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        for (int j = 0; j < cols; ++j) std::swap(m[rank * cols + j], m[piv * cols + j]);
        int inv = fp_inverse(m[rank * cols + col], p);
        for (int j = col; j < cols; ++j) m[rank * cols + j] = m[rank * cols + j] * inv % p;
        for (int r = 0; r < rows; ++r) {
            if (r == rank) continue;
            int f = m[r * cols + col];
            if (!f) continue;
            for (int j = col; j < cols; ++j)
                m[r * cols + j] = (m[r * cols + j] + (p - f) * m[rank * cols + j]) % p;
        }
        ++rank;
    }
    return rank;
}

inline FpMat fp_mat_inverse(FpMat m, int n, int p) {
    FpMat inv(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) inv[i * n + i] = 1;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (m[r * n + col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw error("fp_mat_inverse: singular matrix");
        for (int j = 0; j < n && piv != col; ++j) {
            std::swap(m[col * n + j], m[piv * n + j]);
            std::swap(inv[col * n + j], inv[piv * n + j]);
        }
        int f = fp_inverse(m[col * n + col], p);
        for (int j = 0; j < n; ++j) {
            m[col * n + j] = m[col * n + j] * f % p;
            inv[col * n + j] = inv[col * n + j] * f % p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            int g = m[r * n + col];
            if (!g) continue;
            for (int j = 0; j < n; ++j) {
                m[r * n + j] = (m[r * n + j] + (p - g) * m[col * n + j]) % p;
                inv[r * n + j] = (inv[r * n + j] + (p - g) * inv[col * n + j]) % p;
            }
        }
    }
    return inv;
}

// All invertible n x n matrices over F_p, in odometer order.  Callers have
// already checked the group-order budget, which bounds p^(n^2) as well.
inline std::vector<FpMat> all_invertible(int n, int p) {
    if (n == 0) return {FpMat{}};
    std::vector<FpMat> out;
    FpMat m(static_cast<size_t>(n) * n, 0);
    while (true) {
        if (fp_rank(m, n, n, p) == n) out.push_back(m);
        int i = 0;
        while (i < n * n && ++m[i] == p) {
            m[i] = 0;
            ++i;
        }
        if (i == n * n) break;
    }
    return out;
}

}  // namespace detail

/// Number of GL_alpha(F_p)-orbits on the space of representations of q with
/// dimension vector alpha.  Default path: Burnside averaging, with the fixed
/// points of g counted as p^(dim ker(x -> g_t x - x g_s)) per arrow.  With
/// naive = true: direct orbit partition of the whole state space instead, as a
/// slower sanity check of the averaging path.
inline BigInt burnside_iso_classes(const Quiver& q, std::span<const int> alpha, int p,
                                   bool naive = false, long long state_budget = 1000000,
                                   long long group_budget = 100000) {
    if (p != 2 && p != 3 && p != 5) throw error("burnside: prime must be 2, 3 or 5");
    if (static_cast<int>(alpha.size()) != q.rank())
        throw error("burnside: dimension vector length does not match quiver rank");
    for (int a : alpha)
        if (a < 0) throw error("burnside: negative dimension");

    long long digits = 0;
    for (auto [s, t] : q.arrows()) digits += static_cast<long long>(alpha[s]) * alpha[t];
    long long nstates = 1;
    for (long long i = 0; i < digits; ++i) {
        nstates *= p;
        if (nstates > state_budget)
            throw error("burnside: state space " + std::to_string(p) + "^" +
                        std::to_string(digits) + " exceeds budget " +
                        std::to_string(state_budget));
    }
    BigInt g = gl_order(alpha, p);
    if (g > group_budget)
        throw error("burnside: group order " + g.str() + " exceeds budget " +
                    std::to_string(group_budget));

    int n = q.rank();
    const auto& arrows = q.arrows();
    std::vector<std::vector<detail::FpMat>> gl(n);
    for (int i = 0; i < n; ++i) gl[i] = detail::all_invertible(alpha[i], p);

    if (naive) {
        std::vector<std::vector<detail::FpMat>> glinv(n);
        for (int i = 0; i < n; ++i)
            for (const auto& m : gl[i])
                glinv[i].push_back(detail::fp_mat_inverse(m, alpha[i], p));
        auto decode = [&](long long pt) {
            std::vector<detail::FpMat> mats;
            for (auto [s, t] : arrows) {
                detail::FpMat m(static_cast<size_t>(alpha[t]) * alpha[s]);
                for (auto& e : m) {
                    e = static_cast<int>(pt % p);
                    pt /= p;
                }
                mats.push_back(std::move(m));
            }
            return mats;
        };
        auto encode = [&](const std::vector<detail::FpMat>& mats) {
            long long pt = 0;
            for (size_t h = mats.size(); h-- > 0;)
                for (size_t i = mats[h].size(); i-- > 0;) pt = pt * p + mats[h][i];
            return pt;
        };
        std::vector<char> seen(static_cast<size_t>(nstates), 0);
        BigInt orbits = 0;
        std::vector<long long> stack;
        for (long long start = 0; start < nstates; ++start) {
            if (seen[start]) continue;
            ++orbits;
            seen[start] = 1;
            stack.assign(1, start);
            while (!stack.empty()) {
                auto mats = decode(stack.back());
                stack.pop_back();
                std::vector<size_t> idx(n, 0);
                while (true) {
                    std::vector<detail::FpMat> out;
                    for (size_t h = 0; h < arrows.size(); ++h) {
                        auto [s, t] = arrows[h];
                        detail::FpMat y = detail::fp_mul(gl[t][idx[t]], mats[h], alpha[t],
                                                         alpha[t], alpha[s], p);
                        out.push_back(detail::fp_mul(y, glinv[s][idx[s]], alpha[t], alpha[s],
                                                     alpha[s], p));
                    }
                    long long img = encode(out);
                    if (!seen[img]) {
                        seen[img] = 1;
                        stack.push_back(img);
                    }
                    int i = 0;
                    while (i < n && ++idx[i] == gl[i].size()) {
                        idx[i] = 0;
                        ++i;
                    }
                    if (i == n) break;
                }
            }
        }
        return orbits;
    }

    BigInt fixsum = 0;
    std::vector<size_t> idx(n, 0);
    while (true) {
        BigInt fix = 1;
        for (auto [s, t] : arrows) {
            int rows = alpha[t], cols = alpha[s];
            int dim = rows * cols;
            if (dim == 0) continue;
            const auto& gt = gl[t][idx[t]];
            const auto& gs = gl[s][idx[s]];
            // Matrix of x -> g_t x - x g_s on row-major vec(x).
            detail::FpMat m(static_cast<size_t>(dim) * dim, 0);
            for (int i = 0; i < rows; ++i)
                for (int j = 0; j < cols; ++j)
                    for (int k = 0; k < rows; ++k)
                        for (int l = 0; l < cols; ++l) {
                            int v = 0;
                            if (j == l) v += gt[i * rows + k];
                            if (i == k) v -= gs[l * cols + j];
                            m[static_cast<size_t>(i * cols + j) * dim + (k * cols + l)] =
                                (v % p + p) % p;
                        }
            fix *= big_pow(p, static_cast<unsigned>(dim - detail::fp_rank(m, dim, dim, p)));
        }
        fixsum += fix;
        int i = 0;
        while (i < n && ++idx[i] == gl[i].size()) {
            idx[i] = 0;
            ++i;
        }
        if (i == n) break;
    }
    if (fixsum % g != 0) throw error("burnside: fixed-point sum not divisible by group order");
    return fixsum / g;
}

/// Evaluate the representation-count polynomial m_alpha at each prime and
/// compare with the orbit count over F_p.  End-to-end check of the whole
/// Exp/Log stack against independent linear algebra.
inline VerificationReport verify_m_polynomial(const RootData& rd, std::span<const int> alpha,
                                              std::span<const int> primes) {
    detail::Timer timer;
    VerificationReport rep =
        detail::report_for("m-polynomial", rd, {}, {alpha.begin(), alpha.end()});
    KacTable table = rep_count_series(rd, xbox({alpha.begin(), alpha.end()}));
    const RatQ& m = table.m.at({alpha.begin(), alpha.end()});
    for (int p : primes) {
        rep.extra.emplace_back("p", p);
        BigRat lhs = m.eval(BigRat(p));
        BigInt rhs = burnside_iso_classes(rd.quiver(), alpha, p);
        if (lhs != BigRat(rhs))
            rep.add_mismatch({alpha.begin(), alpha.end()},
                             "m(" + std::to_string(p) + ") = " + lhs.str(),
                             "orbit count " + rhs.str());
    }
    rep.ms = timer.ms();
    return rep;
}

}  // namespace qferm
