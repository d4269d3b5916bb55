#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "qferm/weyl.hpp"

using namespace qferm;

namespace {

const std::string kData = QFERM_DATA_DIR "/quivers/";

RootData load(const std::string& name) {
    return RootData(Quiver::from_file(kData + name + ".json"));
}

std::vector<int> rand_vec(int n, std::mt19937& rng, int lo = -3, int hi = 3) {
    std::uniform_int_distribution<int> d(lo, hi);
    std::vector<int> v(n);
    for (int& x : v) x = d(rng);
    return v;
}

}  // namespace

TEST_CASE("quiver parsing") {
    RootData a2 = load("a2");
    CHECK(a2.rank() == 2);
    CHECK(a2.quiver().arrows().size() == 1);
    RootData kr = load("kronecker");
    CHECK(kr.quiver().arrows().size() == 2);
    CHECK(kr.cartan() == std::vector<std::vector<int>>{{2, -2}, {-2, 2}});
    CHECK_THROWS_WITH(Quiver::from_file(kData + "jordan.json"),
                      Catch::Matchers::ContainsSubstring("loop"));
    CHECK_THROWS_AS(Quiver::from_file(kData + "missing.json"), error);
    CHECK_THROWS_AS(Quiver::from_json_text("{"), error);
    CHECK_THROWS_AS(Quiver::from_json_text(R"({"vertices": ["1"]})"), error);
    CHECK_THROWS_AS(
        Quiver::from_json_text(R"({"vertices": ["1"], "arrows": [["1","2"]]})"), error);
    // duplicate names collapse, keeping file order
    Quiver d = Quiver::from_json_text(
        R"({"vertices": ["b", "a", "b"], "arrows": [["b", "a"]]})");
    CHECK(d.vertices() == std::vector<std::string>{"b", "a"});
    CHECK(d.arrows() == std::vector<std::pair<int, int>>{{0, 1}});
}

TEST_CASE("quiver hash") {
    Quiver a = Quiver::from_file(kData + "a2.json");
    Quiver b = Quiver::from_json_text(R"({"vertices":["1","2"],"arrows":[["1","2"]]})");
    CHECK(a.hash() == b.hash());
    CHECK(a.hash() != Quiver::from_file(kData + "kronecker.json").hash());
    // orientation matters for the hash even though the Cartan data agrees
    Quiver c = Quiver::from_json_text(R"({"vertices":["1","2"],"arrows":[["2","1"]]})");
    CHECK(a.hash() != c.hash());
}

TEST_CASE("cartan matrix and tits form") {
    RootData a1 = load("a1"), a2 = load("a2"), kr = load("kronecker");
    CHECK(a1.cartan() == std::vector<std::vector<int>>{{2}});
    CHECK(a2.cartan() == std::vector<std::vector<int>>{{2, -1}, {-1, 2}});
    CHECK(a1.tits(std::vector<int>{2}) == 4);
    CHECK(a2.tits(std::vector<int>{1, 1}) == 1);
    CHECK(kr.tits(std::vector<int>{1, 1}) == 0);
    CHECK(load("kronecker3").tits(std::vector<int>{1, 1}) == -1);
    std::mt19937 rng(47);
    RootData a3 = load("a3");
    for (int t = 0; t < 30; ++t) {
        auto a = rand_vec(3, rng), b = rand_vec(3, rng);
        std::vector<int> ab(3);
        for (int i = 0; i < 3; ++i) ab[i] = a[i] + b[i];
        // polarization: T(a+b) = T(a) + T(b) + a^T C b
        long long cross = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                cross += static_cast<long long>(a3.cartan()[i][j]) * a[i] * b[j];
        CHECK(a3.tits(ab) == a3.tits(a) + a3.tits(b) + cross);
    }
}

TEST_CASE("pairing and weight arithmetic") {
    RootData a1 = load("a1"), a2 = load("a2");
    CHECK(RootData::pairing(std::vector<int>{2}, std::vector<int>{3}) == 6);
    CHECK(RootData::pairing(std::vector<int>{1, 2}, std::vector<int>{2, 1}) == 4);
    CHECK(a1.weight_sub_root(std::vector<int>{2}, std::vector<int>{1}) ==
          std::vector<int>{0});
    CHECK(a1.weight_sub_root(std::vector<int>{1}, std::vector<int>{1}) ==
          std::vector<int>{-1});
    CHECK(a2.weight_sub_root(std::vector<int>{1, 1}, std::vector<int>{1, 0}) ==
          std::vector<int>{-1, 2});
    CHECK(a2.root_to_weight(std::vector<int>{1, 1}) == std::vector<int>{1, 1});
    CHECK(a1.d_exponent(std::vector<int>{1}, std::vector<int>{2}) == 1);
    CHECK(a1.d_exponent(std::vector<int>{2}, std::vector<int>{2}) == 0);
    CHECK(a1.d_exponent(std::vector<int>{0}, std::vector<int>{2}) == 0);
    std::mt19937 rng(53);
    for (int t = 0; t < 20; ++t) {
        auto u = rand_vec(2, rng), v = rand_vec(2, rng), w = rand_vec(2, rng);
        std::vector<int> vw = {v[0] + w[0], v[1] + w[1]};
        CHECK(RootData::pairing(u, vw) ==
              RootData::pairing(u, v) + RootData::pairing(u, w));
        // round trip through the Cartan matrix
        auto sol = a2.solve_root_coords(a2.root_to_weight(v));
        REQUIRE(sol.has_value());
        CHECK(*sol == v);
    }
    CHECK(!load("kronecker").solve_root_coords(std::vector<int>{1, 0}).has_value());
}

TEST_CASE("finite type detection") {
    for (const char* n : {"a1", "a2", "a3", "d4"}) CHECK(load(n).is_finite_type());
    for (const char* n : {"kronecker", "kronecker3"}) CHECK(!load(n).is_finite_type());
}

TEST_CASE("enlarged quiver") {
    Quiver a1 = Quiver::from_file(kData + "a1.json");
    Quiver star = enlarge_quiver(a1, std::vector<int>{2});
    CHECK(star.rank() == 2);
    CHECK(star.vertices() == std::vector<std::string>{"1", "*"});
    CHECK(star.arrows() == std::vector<std::pair<int, int>>{{1, 0}, {1, 0}});
    // with nu = 2 the enlarged A1 has the Kronecker Cartan matrix
    CHECK(RootData(star).cartan() == RootData(Quiver::from_file(kData + "kronecker.json")).cartan());
    Quiver iso = enlarge_quiver(a1, std::vector<int>{0});
    CHECK(iso.arrows().empty());
    CHECK_THROWS_AS(enlarge_quiver(a1, std::vector<int>{-1}), error);
    CHECK_THROWS_AS(enlarge_quiver(a1, std::vector<int>{1, 2}), error);

    // Tits form of the enlarged quiver against the base form
    std::mt19937 rng(59);
    Quiver a2q = Quiver::from_file(kData + "a2.json");
    RootData a2(a2q);
    for (int t = 0; t < 30; ++t) {
        auto nu = rand_vec(2, rng, 0, 3);
        RootData ext(enlarge_quiver(a2q, nu));
        for (int s = 0; s < 5; ++s) {
            auto beta = rand_vec(2, rng, -2, 2);
            std::vector<int> b1 = {beta[0], beta[1], 1}, b0 = {beta[0], beta[1], 0};
            CHECK(ext.tits(b1) == a2.tits(beta) + 1 - RootData::pairing(nu, beta));
            CHECK(ext.tits(b0) == a2.tits(beta));
        }
    }
}

TEST_CASE("positive roots") {
    RootData a2 = load("a2");
    auto roots = positive_roots(a2);
    std::set<std::vector<int>> expect = {{1, 0}, {0, 1}, {1, 1}};
    CHECK(std::set<std::vector<int>>(roots.begin(), roots.end()) == expect);
    CHECK(positive_roots(load("a1")).size() == 1);
    CHECK(positive_roots(load("a3")).size() == 6);
    CHECK(positive_roots(load("d4")).size() == 12);
    CHECK_THROWS_AS(positive_roots(load("kronecker")), error);
    // roots are exactly the vectors with Tits form 1 (small search window)
    RootData d4 = load("d4");
    auto d4roots = positive_roots(d4);
    std::set<std::vector<int>> rootset(d4roots.begin(), d4roots.end());
    std::vector<int> v(4, 0);
    for (v[0] = 0; v[0] <= 2; ++v[0])
        for (v[1] = 0; v[1] <= 2; ++v[1])
            for (v[2] = 0; v[2] <= 2; ++v[2])
                for (v[3] = 0; v[3] <= 2; ++v[3]) {
                    bool nonzero = v[0] + v[1] + v[2] + v[3] > 0;
                    if (nonzero)
                        CHECK((d4.tits(v) == 1) == rootset.contains(v));
                }
}

TEST_CASE("weyl dot action") {
    RootData a1 = load("a1"), a2 = load("a2");
    // s . 0 = -2 in type A1
    auto [img, sign] = weyl_dot(a1, std::vector<int>{0}, {0});
    CHECK(img == std::vector<int>{-2});
    CHECK(sign == -1);
    CHECK(weyl_dot(a1, std::vector<int>{}, {5}).first == std::vector<int>{5});
    CHECK(weyl_dot(a1, std::vector<int>{}, {5}).second == 1);
    // involution: s_i . (s_i . lambda) = lambda
    std::mt19937 rng(61);
    for (int t = 0; t < 30; ++t) {
        auto lam = rand_vec(2, rng, -4, 4);
        for (int i = 0; i < 2; ++i)
            CHECK(simple_dot(a2, i, simple_dot(a2, i, lam)) == lam);
        // braid relation in the dot action
        CHECK(weyl_dot(a2, std::vector<int>{0, 1, 0}, lam) ==
              weyl_dot(a2, std::vector<int>{1, 0, 1}, lam));
    }
    CHECK_THROWS_AS(simple_dot(a1, 3, {0}), error);
}

TEST_CASE("weyl group enumeration") {
    auto w1 = weyl_elements(load("a1"));
    CHECK(w1.size() == 2);
    CHECK(w1[0].empty());
    CHECK(w1[1] == std::vector<int>{0});
    auto w2 = weyl_elements(load("a2"));
    CHECK(w2.size() == 6);
    CHECK(weyl_elements(load("a3")).size() == 24);
    CHECK_THROWS_AS(weyl_elements(load("kronecker")), error);
    // words act as distinct transformations; orbit of a dominant weight under
    // the plain action has |W| elements for a regular weight
    RootData a2 = load("a2");
    std::set<std::vector<int>> orbit;
    for (const auto& w : w2) orbit.insert(weyl_dot(a2, w, {1, 2}).first);
    CHECK(orbit.size() == 6);
}
