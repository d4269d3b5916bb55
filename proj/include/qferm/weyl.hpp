#pragma once

// Positive roots and the Weyl group for finite-type root data, everything in
// weight coordinates (a root alpha in root coordinates has weight C*alpha).

#include <algorithm>
#include <numeric>
#include <set>

#include "qferm/quiver.hpp"

namespace qferm {

/// All positive roots in root coordinates, found by closing the simple roots
/// under adding simple roots while the Tits form stays 1.  Sorted by height
/// then lexicographically.  Requires finite type.
inline std::vector<std::vector<int>> positive_roots(const RootData& rd) {
    if (!rd.is_finite_type()) throw error("positive_roots: not finite type");
    int n = rd.rank();
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> queue;
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(n, 0);
        e[i] = 1;
        seen.insert(e);
        queue.push_back(std::move(e));
    }
    const int height_cap = 64;
    while (!queue.empty()) {
        std::vector<int> a = std::move(queue.back());
        queue.pop_back();
        for (int i = 0; i < n; ++i) {
            std::vector<int> b = a;
            b[i] += 1;
            int h = std::accumulate(b.begin(), b.end(), 0);
            if (h > height_cap)
                throw error("positive_roots: closure did not stabilize");
            if (rd.tits(b) == 1 && seen.insert(b).second) queue.push_back(std::move(b));
        }
    }
    std::vector<std::vector<int>> roots(seen.begin(), seen.end());
    std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
        int ha = std::accumulate(a.begin(), a.end(), 0);
        int hb = std::accumulate(b.begin(), b.end(), 0);
        if (ha != hb) return ha < hb;
        return a < b;
    });
    return roots;
}

/// One dot-action step: s_i . lambda = s_i(lambda + rho) - rho, in weight
/// coordinates (s_i mu)_j = mu_j - mu_i c_ij.
inline std::vector<int> simple_dot(const RootData& rd, int i, std::vector<int> lambda) {
    if (i < 0 || i >= rd.rank()) throw error("weyl: reflection index out of range");
    const auto& c = rd.cartan();
    for (int& v : lambda) v += 1;  // + rho
    int li = lambda[i];
    for (int j = 0; j < rd.rank(); ++j) lambda[j] -= li * c[i][j];
    for (int& v : lambda) v -= 1;  // - rho
    return lambda;
}

/// Dot action of the word s_{w[0]} s_{w[1]} ... applied to lambda, with the
/// rightmost letter acting first.  Returns the image and the sign (-1)^len.
inline std::pair<std::vector<int>, int> weyl_dot(const RootData& rd,
                                                 std::span<const int> word,
                                                 std::vector<int> lambda) {
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        lambda = simple_dot(rd, *it, std::move(lambda));
    return {std::move(lambda), word.size() % 2 == 0 ? 1 : -1};
}

/// Reduced words for every Weyl group element, identity first, found by
/// breadth-first closure of the linear action matrices.  Requires finite type.
inline std::vector<std::vector<int>> weyl_elements(const RootData& rd) {
    if (!rd.is_finite_type()) throw error("weyl_elements: not finite type");
    int n = rd.rank();
    const auto& c = rd.cartan();
    using Mat = std::vector<int>;  // row-major n*n
    auto mat_id = [&] {
        Mat m(n * n, 0);
        for (int i = 0; i < n; ++i) m[i * n + i] = 1;
        return m;
    };
    // matrix of s_i acting on weight coordinates
    auto refl = [&](int i) {
        Mat m = mat_id();
        for (int j = 0; j < n; ++j) m[j * n + i] -= c[i][j];
        return m;
    };
    auto mul = [&](const Mat& a, const Mat& b) {
        Mat r(n * n, 0);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k)
                for (int j = 0; j < n; ++j)
                    r[i * n + j] += a[i * n + k] * b[k * n + j];
        return r;
    };
    std::vector<Mat> gens;
    for (int i = 0; i < n; ++i) gens.push_back(refl(i));
    std::set<Mat> seen;
    std::vector<std::pair<Mat, std::vector<int>>> frontier{{mat_id(), {}}};
    seen.insert(mat_id());
    std::vector<std::vector<int>> words{{}};
    while (!frontier.empty()) {
        std::vector<std::pair<Mat, std::vector<int>>> next;
        for (const auto& [m, w] : frontier) {
            for (int i = 0; i < n; ++i) {
                Mat m2 = mul(gens[i], m);
                if (seen.insert(m2).second) {
                    std::vector<int> w2;
                    w2.push_back(i);
                    w2.insert(w2.end(), w.begin(), w.end());
                    words.push_back(w2);
                    next.emplace_back(std::move(m2), std::move(w2));
                }
            }
        }
        frontier = std::move(next);
        if (words.size() > 100000) throw error("weyl_elements: group too large");
    }
    return words;
}

}  // namespace qferm
