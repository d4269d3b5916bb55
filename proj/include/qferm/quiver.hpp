#pragma once

// Quivers (finite directed multigraphs without loops) and the associated
// symmetric Cartan matrix, Tits form and weight/root bookkeeping.

#include <cstdint>
#include <fstream>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qferm/numbers.hpp"

namespace qferm {

class Quiver {
public:
    Quiver(std::vector<std::string> vertices, std::vector<std::pair<int, int>> arrows)
        : v_(std::move(vertices)), a_(std::move(arrows)) {
        for (auto& [s, t] : a_) {
            if (s < 0 || t < 0 || s >= static_cast<int>(v_.size()) ||
                t >= static_cast<int>(v_.size()))
                throw error("quiver: arrow endpoint out of range");
            if (s == t) throw error("quiver: loop arrow at vertex '" + v_[s] + "'");
        }
    }

    /// {"vertices": ["1","2"], "arrows": [["1","2"], ...]}.  Vertex names are
    /// deduplicated in file order; arrow endpoints must name vertices.
    static Quiver from_json_text(const std::string& text) {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw error(std::string("quiver: invalid JSON: ") + e.what());
        }
        if (!j.is_object() || !j.contains("vertices") || !j.contains("arrows"))
            throw error("quiver: expected object with 'vertices' and 'arrows'");
        std::vector<std::string> names;
        for (const auto& v : j["vertices"]) {
            if (!v.is_string()) throw error("quiver: vertex names must be strings");
            std::string name = v.get<std::string>();
            bool seen = false;
            for (const auto& n : names) seen = seen || n == name;
            if (!seen) names.push_back(std::move(name));
        }
        if (names.empty()) throw error("quiver: no vertices");
        auto index_of = [&](const std::string& n) {
            for (size_t i = 0; i < names.size(); ++i)
                if (names[i] == n) return static_cast<int>(i);
            throw error("quiver: arrow endpoint '" + n + "' is not a vertex");
        };
        std::vector<std::pair<int, int>> arrows;
        for (const auto& a : j["arrows"]) {
            if (!a.is_array() || a.size() != 2 || !a[0].is_string() || !a[1].is_string())
                throw error("quiver: arrows must be [source, target] name pairs");
            arrows.emplace_back(index_of(a[0].get<std::string>()),
                                index_of(a[1].get<std::string>()));
        }
        return Quiver(std::move(names), std::move(arrows));
    }

    static Quiver from_file(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw error("quiver: cannot open file '" + path + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        return from_json_text(buf.str());
    }

    int rank() const { return static_cast<int>(v_.size()); }
    const std::vector<std::string>& vertices() const { return v_; }
    const std::vector<std::pair<int, int>>& arrows() const { return a_; }

    std::string canonical_text() const {
        std::string s = "vertices:";
        for (size_t i = 0; i < v_.size(); ++i) {
            if (i) s += ",";
            s += v_[i];
        }
        s += ";arrows:";
        for (size_t i = 0; i < a_.size(); ++i) {
            if (i) s += ",";
            s += v_[a_[i].first] + ">" + v_[a_[i].second];
        }
        return s;
    }

    /// FNV-1a over the canonical text.
    uint64_t hash() const {
        uint64_t h = 14695981039346656037ull;
        for (unsigned char c : canonical_text()) {
            h ^= c;
            h *= 1099511628211ull;
        }
        return h;
    }

private:
    std::vector<std::string> v_;
    std::vector<std::pair<int, int>> a_;
};

/// Adjoin a framing vertex "*" with nu_i arrows from "*" to vertex i.
inline Quiver enlarge_quiver(const Quiver& q, std::span<const int> nu) {
    if (static_cast<int>(nu.size()) != q.rank())
        throw error("enlarge_quiver: framing vector has wrong length");
    std::vector<std::string> names = q.vertices();
    for (const auto& n : names)
        if (n == "*") throw error("enlarge_quiver: vertex name '*' already taken");
    names.push_back("*");
    int star = q.rank();
    auto arrows = q.arrows();
    for (int i = 0; i < q.rank(); ++i) {
        if (nu[i] < 0) throw error("enlarge_quiver: framing multiplicities must be >= 0");
        for (int k = 0; k < nu[i]; ++k) arrows.emplace_back(star, i);
    }
    return Quiver(std::move(names), std::move(arrows));
}

class RootData {
public:
    explicit RootData(Quiver q) : q_(std::move(q)) {
        int n = q_.rank();
        c_.assign(n, std::vector<int>(n, 0));
        for (int i = 0; i < n; ++i) c_[i][i] = 2;
        for (const auto& [s, t] : q_.arrows()) {
            c_[s][t] -= 1;
            c_[t][s] -= 1;
        }
    }

    int rank() const { return q_.rank(); }
    const Quiver& quiver() const { return q_; }
    const std::vector<std::vector<int>>& cartan() const { return c_; }

    /// Tits form T(alpha) = sum alpha_i^2 - sum_{arrows} alpha_src alpha_dst
    ///                    = (1/2) alpha^T C alpha.
    long long tits(std::span<const int> alpha) const {
        check_len(alpha);
        long long s = 0;
        int n = rank();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                s += static_cast<long long>(c_[i][j]) * alpha[i] * alpha[j];
        return s / 2;
    }

    /// Natural pairing of a weight with a root vector.
    static long long pairing(std::span<const int> nu, std::span<const int> alpha) {
        if (nu.size() != alpha.size()) throw error("pairing: length mismatch");
        long long s = 0;
        for (size_t i = 0; i < nu.size(); ++i)
            s += static_cast<long long>(nu[i]) * alpha[i];
        return s;
    }

    /// C * alpha, the weight of a root vector.
    std::vector<int> root_to_weight(std::span<const int> alpha) const {
        check_len(alpha);
        int n = rank();
        std::vector<int> w(n, 0);
        for (int i = 0; i < n; ++i) {
            long long s = 0;
            for (int j = 0; j < n; ++j) s += static_cast<long long>(c_[i][j]) * alpha[j];
            w[i] = static_cast<int>(s);
        }
        return w;
    }

    /// nu - C*alpha: the weight left after subtracting the root alpha.
    std::vector<int> weight_sub_root(std::span<const int> nu,
                                     std::span<const int> alpha) const {
        check_len(nu);
        std::vector<int> w = root_to_weight(alpha);
        for (int i = 0; i < rank(); ++i) w[i] = nu[i] - w[i];
        return w;
    }

    /// d(alpha, nu) = (nu, alpha) - T(alpha).
    long long d_exponent(std::span<const int> alpha, std::span<const int> nu) const {
        return pairing(nu, alpha) - tits(alpha);
    }

    /// Solve C*beta = weight over the rationals; nullopt when the system is
    /// singular or the solution is not integral.
    std::optional<std::vector<int>> solve_root_coords(std::span<const int> weight) const {
        check_len(weight);
        int n = rank();
        std::vector<std::vector<BigRat>> m(n, std::vector<BigRat>(n + 1));
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) m[i][j] = c_[i][j];
            m[i][n] = weight[i];
        }
        for (int col = 0; col < n; ++col) {
            int piv = -1;
            for (int r = col; r < n; ++r)
                if (m[r][col] != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) return std::nullopt;
            std::swap(m[col], m[piv]);
            BigRat p = m[col][col];
            for (int j = col; j <= n; ++j) m[col][j] /= p;
            for (int r = 0; r < n; ++r) {
                if (r == col || m[r][col] == 0) continue;
                BigRat f = m[r][col];
                for (int j = col; j <= n; ++j) m[r][j] -= f * m[col][j];
            }
        }
        std::vector<int> out(n);
        for (int i = 0; i < n; ++i) {
            const BigRat& v = m[i][n];
            if (boost::multiprecision::denominator(v) != 1) return std::nullopt;
            out[i] = static_cast<int>(boost::multiprecision::numerator(v));
        }
        return out;
    }

    /// Positive definiteness of the Tits form, tested by leading principal
    /// minors of the Cartan matrix.
    bool is_finite_type() const {
        int n = rank();
        for (int k = 1; k <= n; ++k) {
            std::vector<std::vector<BigRat>> m(k, std::vector<BigRat>(k));
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) m[i][j] = c_[i][j];
            if (det(m) <= 0) return false;
        }
        return true;
    }

private:
    Quiver q_;
    std::vector<std::vector<int>> c_;

    void check_len(std::span<const int> v) const {
        if (static_cast<int>(v.size()) != rank())
            throw error("root data: vector length does not match rank");
    }

    static BigRat det(std::vector<std::vector<BigRat>> m) {
        int n = static_cast<int>(m.size());
        BigRat d = 1;
        for (int col = 0; col < n; ++col) {
            int piv = -1;
            for (int r = col; r < n; ++r)
                if (m[r][col] != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) return 0;
            if (piv != col) {
                std::swap(m[col], m[piv]);
                d = -d;
            }
            d *= m[col][col];
            BigRat p = m[col][col];
            for (int r = col + 1; r < n; ++r) {
                if (m[r][col] == 0) continue;
                BigRat f = m[r][col] / p;
                for (int j = col; j < n; ++j) m[r][j] -= f * m[col][j];
            }
        }
        return d;
    }
};

}  // namespace qferm
