#pragma once

// Integer partitions and tuples of partitions indexed by quiver vertices.

#include <algorithm>
#include <span>
#include <vector>

#include "qferm/numbers.hpp"

namespace qferm {

/// Weakly decreasing positive parts.
using Partition = std::vector<int>;

namespace detail {
inline void gen_partitions(int n, int maxpart, Partition& cur,
                           std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(n, maxpart); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(n - p, p, cur, out);
        cur.pop_back();
    }
}
}  // namespace detail

/// Partitions of n in descending lexicographic order: (n), (n-1,1), ...
inline std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw error("partitions_of: negative argument");
    std::vector<Partition> out;
    Partition cur;
    detail::gen_partitions(n, std::max(n, 1), cur, out);
    return out;
}

/// One partition per vertex.  The k-th parts across vertices form the column
/// vector tau_k; columns decrease componentwise and sum to the tuple weight.
struct PartitionTuple {
    std::vector<Partition> comp;

    int max_parts() const {
        int m = 0;
        for (const auto& p : comp) m = std::max(m, static_cast<int>(p.size()));
        return m;
    }
    /// tau_k for 1-based k; zero beyond the partition length.
    std::vector<int> column(int k) const {
        std::vector<int> c(comp.size(), 0);
        for (size_t i = 0; i < comp.size(); ++i)
            if (k >= 1 && k <= static_cast<int>(comp[i].size())) c[i] = comp[i][k - 1];
        return c;
    }
    std::vector<std::vector<int>> columns() const {
        std::vector<std::vector<int>> cols;
        int m = max_parts();
        for (int k = 1; k <= m; ++k) cols.push_back(column(k));
        return cols;
    }
    /// |tau| per vertex.
    std::vector<int> weight() const {
        std::vector<int> w(comp.size(), 0);
        for (size_t i = 0; i < comp.size(); ++i)
            for (int p : comp[i]) w[i] += p;
        return w;
    }

    bool operator==(const PartitionTuple&) const = default;
};

/// All tuples with |tau| = beta: the product of per-vertex partition lists,
/// first vertex slowest, each list in descending lexicographic order.
inline std::vector<PartitionTuple> partition_tuples(std::span<const int> beta) {
    for (int b : beta)
        if (b < 0) throw error("partition_tuples: negative weight");
    std::vector<std::vector<Partition>> lists;
    for (int b : beta) lists.push_back(partitions_of(b));
    std::vector<PartitionTuple> out;
    PartitionTuple cur;
    cur.comp.resize(beta.size());
    auto rec = [&](auto&& self, size_t i) -> void {
        if (i == lists.size()) {
            out.push_back(cur);
            return;
        }
        for (const auto& p : lists[i]) {
            cur.comp[i] = p;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return out;
}

/// Visit every tuple with |tau| <= caps componentwise, grouped by weight in
/// ascending lexicographic weight order.
template <class F>
void for_each_partition_tuple(std::span<const int> caps, F&& f) {
    std::vector<int> beta(caps.size(), 0);
    while (true) {
        for (const PartitionTuple& t : partition_tuples(beta)) f(t);
        size_t i = beta.size();
        while (i > 0 && beta[i - 1] == caps[i - 1]) {
            beta[i - 1] = 0;
            --i;
        }
        if (i == 0) break;
        ++beta[i - 1];
    }
}

}  // namespace qferm
