#pragma once

// Multidegrees and truncation boxes for the series ring.  A degree has an
// x-block and an optional y-block of componentwise exponents; ordering is
// lexicographic on the concatenation, used everywhere iteration order or
// serialization order matters.

#include <algorithm>
#include <compare>
#include <numeric>
#include <string>
#include <vector>

#include "qferm/numbers.hpp"

namespace qferm {

struct Degree {
    std::vector<int> x;
    std::vector<int> y;

    auto operator<=>(const Degree&) const = default;

    int total() const {
        return std::accumulate(x.begin(), x.end(), 0) +
               std::accumulate(y.begin(), y.end(), 0);
    }
    bool is_zero() const {
        auto z = [](int v) { return v == 0; };
        return std::all_of(x.begin(), x.end(), z) && std::all_of(y.begin(), y.end(), z);
    }
};

inline Degree xdeg(std::vector<int> x) { return Degree{std::move(x), {}}; }
inline Degree xydeg(std::vector<int> x, std::vector<int> y) {
    return Degree{std::move(x), std::move(y)};
}

/// Total degree first, ties broken lexicographically.
inline bool total_lex_less(const Degree& a, const Degree& b) {
    int ta = a.total(), tb = b.total();
    if (ta != tb) return ta < tb;
    return a < b;
}

struct Box {
    std::vector<int> x;
    std::vector<int> y;  // empty: the ring has no y variables

    bool operator==(const Box&) const = default;

    bool has_y() const { return !y.empty(); }
    int total() const {
        return std::accumulate(x.begin(), x.end(), 0) +
               std::accumulate(y.begin(), y.end(), 0);
    }
    int max_component() const {
        int m = 0;
        for (int v : x) m = std::max(m, v);
        for (int v : y) m = std::max(m, v);
        return m;
    }

    bool contains(const Degree& d) const {
        if (d.x.size() != x.size() || d.y.size() != y.size()) return false;
        for (size_t i = 0; i < x.size(); ++i)
            if (d.x[i] < 0 || d.x[i] > x[i]) return false;
        for (size_t i = 0; i < y.size(); ++i)
            if (d.y[i] < 0 || d.y[i] > y[i]) return false;
        return true;
    }

    Degree zero_degree() const {
        return Degree{std::vector<int>(x.size(), 0), std::vector<int>(y.size(), 0)};
    }

    /// Every degree in the box, sorted by (total degree, lex).
    std::vector<Degree> all_degrees() const {
        std::vector<Degree> out;
        std::vector<int> bounds = x;
        bounds.insert(bounds.end(), y.begin(), y.end());
        std::vector<int> cur(bounds.size(), 0);
        while (true) {
            Degree d;
            d.x.assign(cur.begin(), cur.begin() + x.size());
            d.y.assign(cur.begin() + x.size(), cur.end());
            out.push_back(std::move(d));
            size_t i = 0;
            for (; i < cur.size(); ++i) {
                if (cur[i] < bounds[i]) {
                    ++cur[i];
                    std::fill(cur.begin(), cur.begin() + i, 0);
                    break;
                }
            }
            if (i == cur.size()) break;
        }
        std::sort(out.begin(), out.end(), total_lex_less);
        return out;
    }
};

inline Box xbox(std::vector<int> x) { return Box{std::move(x), {}}; }
inline Box xybox(std::vector<int> x, std::vector<int> y) {
    return Box{std::move(x), std::move(y)};
}

}  // namespace qferm
