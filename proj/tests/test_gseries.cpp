#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qferm/plethysm.hpp"

using namespace qferm;

namespace {

RatQ rq(const std::string& s) { return RatQ::parse(s); }

Series x1(const Box& b, RatQ c = RatQ(1)) {
    std::vector<int> d(b.x.size(), 0);
    d[0] = 1;
    return Series::monomial(b, Degree{d, std::vector<int>(b.y.size(), 0)}, c);
}

// sparse random series with zero constant term
Series random_nilpotent(const Box& b, std::mt19937& rng) {
    std::uniform_int_distribution<int> coeffd(-3, 3), expd(-2, 2), pick(0, 3);
    Series s(b);
    for (const Degree& d : b.all_degrees()) {
        if (d.is_zero()) continue;
        if (pick(rng) == 0) s.set(d, RatQ::monomial(coeffd(rng), expd(rng)));
    }
    return s;
}

}  // namespace

TEST_CASE("series construction and lookup") {
    Box b = xbox({3});
    Series s = Series::one(b);
    CHECK(s.coefficient(xdeg({0})) == RatQ(1));
    CHECK(s.coefficient(xdeg({2})) == RatQ(0));
    CHECK_THROWS_AS(s.coefficient(xdeg({4})), error);
    CHECK_THROWS_AS(s.coefficient(xdeg({0, 0})), error);
    s.set(xdeg({1}), rq("q^-1"));
    CHECK(s.coefficient(xdeg({1})) == rq("q^-1"));
    s.set(xdeg({1}), RatQ(0));
    CHECK(s.terms().size() == 1);
    CHECK_THROWS_AS(s.set(xdeg({9}), RatQ(1)), error);
    Series z(b);
    CHECK(z.is_zero());
    CHECK((s - s).is_zero());
}

TEST_CASE("series ring operations") {
    Box b = xbox({2});
    Series one = Series::one(b);
    Series f = one + x1(b);                       // 1 + x
    Series g = one - x1(b);                       // 1 - x
    Series fg = f * g;
    CHECK(fg.coefficient(xdeg({0})) == RatQ(1));
    CHECK(fg.coefficient(xdeg({1})) == RatQ(0));
    CHECK(fg.coefficient(xdeg({2})) == RatQ(-1));
    // truncation discards x^2 when the box stops at 1
    Box b1 = xbox({1});
    Series h = (Series::one(b1) + x1(b1)) * (Series::one(b1) + x1(b1));
    CHECK(h == Series::one(b1) + x1(b1).scaled(RatQ(2)));
    // coefficients live in the field
    Series p = (one + x1(b, rq("q"))) * (one + x1(b, rq("q^-1")));
    CHECK(p.coefficient(xdeg({1})) == rq("q^-1+q"));
    CHECK(p.coefficient(xdeg({2})) == RatQ(1));
    CHECK_THROWS_AS(f * Series::one(b1), error);
    CHECK_THROWS_AS(f + Series::one(b1), error);
}

TEST_CASE("series inverse") {
    Box b = xbox({5});
    Series f = Series::one(b) - x1(b);
    Series g = f.inverse();
    for (int k = 0; k <= 5; ++k) CHECK(g.coefficient(xdeg({k})) == RatQ(1));
    CHECK(f * g == Series::one(b));
    Series h = (Series::one(b) - x1(b, rq("q"))).inverse();
    for (int k = 0; k <= 5; ++k)
        CHECK(h.coefficient(xdeg({k})) == RatQ::q_pow(k));
    CHECK(Series::constant(b, RatQ(2)).inverse() ==
          Series::constant(b, RatQ::fraction(Laurent(1), Laurent(2))));
    CHECK_THROWS_AS(x1(b).inverse(), error);
    // two-variable with y block
    Box b2 = xybox({2, 2}, {1, 1});
    std::mt19937 rng(31);
    Series u = Series::one(b2) + random_nilpotent(b2, rng);
    CHECK(u * u.inverse() == Series::one(b2));
}

TEST_CASE("series adams and conj") {
    Box b = xbox({4});
    Series f = Series::one(b) + x1(b, rq("q"));
    CHECK(adams(f, 2) ==
          Series::one(b) + Series::monomial(b, xdeg({2}), rq("q^2")));
    CHECK_THROWS_AS(adams(f, 0), error);
    std::mt19937 rng(37);
    Box b2 = xybox({2, 1}, {2});
    for (int t = 0; t < 10; ++t) {
        Series u = Series::one(b2) + random_nilpotent(b2, rng);
        Series v = Series::one(b2) + random_nilpotent(b2, rng);
        CHECK(adams(u, 1) == u);
        CHECK(adams(adams(u, 2), 3) == adams(u, 6));
        CHECK(adams(u * v, 2) == adams(u, 2) * adams(v, 2));
        CHECK(adams(u + v, 3) == adams(u, 3) + adams(v, 3));
        CHECK(conj(conj(u)) == u);
        CHECK(conj(u * v) == conj(u) * conj(v));
    }
}

TEST_CASE("plethystic exp basics") {
    Box b = xbox({6});
    // Exp(x) is the geometric series
    CHECK(plethystic_exp(x1(b)) == (Series::one(b) - x1(b)).inverse());
    // Exp(x - x^2) = 1 + x
    Series f = x1(b) - Series::monomial(b, xdeg({2}), RatQ(1));
    CHECK(plethystic_exp(f) == Series::one(b) + x1(b));
    CHECK(plethystic_exp(Series(b)) == Series::one(b));
    CHECK_THROWS_AS(plethystic_exp(Series::one(b)), error);
    // Exp(x/(1-q)) generates the infinite q-binomials
    Series e = plethystic_exp(x1(b, rq("1/(1-q)")));
    for (int k = 0; k <= 6; ++k)
        CHECK(e.coefficient(xdeg({k})) == qbinomial_inf(k));
}

TEST_CASE("plethystic log basics") {
    Box b = xbox({6});
    CHECK(plethystic_log(Series::one(b) + x1(b)) ==
          x1(b) - Series::monomial(b, xdeg({2}), RatQ(1)));
    CHECK(plethystic_log((Series::one(b) - x1(b)).inverse()) == x1(b));
    CHECK(plethystic_log(Series::one(b)) == Series(b));
    CHECK_THROWS_AS(plethystic_log(Series::constant(b, RatQ(2))), error);
    CHECK_THROWS_AS(plethystic_log(Series(b)), error);
}

TEST_CASE("exp and log are mutually inverse") {
    std::mt19937 rng(41);
    Box b = xybox({3, 2}, {2});
    for (int t = 0; t < 8; ++t) {
        Series f = random_nilpotent(b, rng);
        CHECK(plethystic_log(plethystic_exp(f)) == f);
        Series u = Series::one(b) + random_nilpotent(b, rng);
        CHECK(plethystic_exp(plethystic_log(u)) == u);
    }
}

TEST_CASE("exp additivity") {
    std::mt19937 rng(43);
    Box b = xybox({2, 2}, {1});
    for (int t = 0; t < 8; ++t) {
        Series f = random_nilpotent(b, rng);
        Series g = random_nilpotent(b, rng);
        CHECK(plethystic_exp(f + g) == plethystic_exp(f) * plethystic_exp(g));
        CHECK(plethystic_exp(-f) == plethystic_exp(f).inverse());
    }
}

TEST_CASE("heine series") {
    Series h = heine_series(std::nullopt, 4);
    CHECK(h.coefficient(xdeg({2})) == qbinomial_inf(2));
    CHECK(heine_series(1, 3).coefficient(xdeg({1})) == rq("1+q"));
    CHECK(heine_series(-1, 5) == Series::one(xbox({5})));
    CHECK(heine_series(std::nullopt, 5) ==
          plethystic_exp(x1(xbox({5}), rq("1/(1-q)"))));
    for (int n = -2; n <= 3; ++n) {
        RatQ c = RatQ::fraction(Laurent::one_minus_qpow(n + 1),
                                Laurent::one_minus_qpow(1));
        CHECK(heine_series(n, 6) == plethystic_exp(x1(xbox({6}), c)));
    }
}

TEST_CASE("pochhammer tail after exp") {
    // Exp(x/(q-1)) equals prod_{k>=0} (1 - q^k x); dividing out the first
    // K+1 factors leaves coefficients with q-valuation >= j*(K+1) at x^j.
    const int N = 5, K = 4;
    Box b = xbox({N});
    Series e = plethystic_exp(x1(b, rq("-1/(1-q)")));
    Series p = Series::one(b);
    for (int k = 0; k <= K; ++k)
        p *= Series::one(b) - x1(b, RatQ::q_pow(k));
    Series tail = e * p.inverse();
    CHECK(tail.coefficient(xdeg({0})) == RatQ(1));
    for (int j = 1; j <= N; ++j) {
        RatQ c = tail.coefficient(xdeg({j}));
        REQUIRE(!c.is_zero());
        CHECK(c.num().low() >= j * (K + 1));
    }
}

TEST_CASE("series serialization") {
    Box b = xybox({1, 1}, {1});
    Series s(b);
    s.set(Degree{{0, 0}, {0}}, RatQ(1));
    s.set(Degree{{1, 0}, {1}}, rq("q^-1"));
    s.set(Degree{{1, 1}, {0}}, rq("1/(1-q)"));
    CHECK(s.to_lines() ==
          "x^[0,0] y^[0] : 1\n"
          "x^[1,0] y^[1] : q^-1\n"
          "x^[1,1] y^[0] : 1/(1-q)\n");
    CHECK(Series(b).to_lines() == "");
    Series t = Series::one(xbox({2}));
    CHECK(t.to_lines() == "x^[0] : 1\n");
    // idempotent and deterministic
    CHECK(s.to_lines() == s.to_lines());
}
