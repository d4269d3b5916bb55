#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "qferm/qbinom.hpp"

using namespace qferm;

namespace {

RatQ rq(const std::string& s) { return RatQ::parse(s); }

// uniform random Laurent polynomial, exponents in [-3, 3], coeffs in [-4, 4]
Laurent random_laurent(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 4), expd(-3, 3), coeffd(-4, 4);
    Laurent p;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) p += Laurent::monomial(coeffd(rng), expd(rng));
    return p;
}

RatQ random_ratq(std::mt19937& rng) {
    Laurent d;
    while (d.is_zero()) d = random_laurent(rng);
    return RatQ::fraction(random_laurent(rng), d);
}

}  // namespace

TEST_CASE("laurent basics") {
    Laurent z;
    CHECK(z.is_zero());
    CHECK(z.content() == 0);
    Laurent p = Laurent::monomial(3, -2) + Laurent::monomial(-6, 1);
    CHECK(p.low() == -2);
    CHECK(p.high() == 1);
    CHECK(p.coeff(-2) == 3);
    CHECK(p.coeff(0) == 0);
    CHECK(p.content() == 3);
    CHECK(p.shifted(2).low() == 0);
    CHECK(p.subst_qpow(2) == Laurent::monomial(3, -4) + Laurent::monomial(-6, 2));
    CHECK((p - p).is_zero());
    CHECK_THROWS_AS(z.low(), error);
}

TEST_CASE("laurent gcd") {
    Laurent a = Laurent::one_minus_qpow(2);          // (1-q)(1+q)
    Laurent b = Laurent::one_minus_qpow(1);
    Laurent g = gcd_poly(a, b);
    CHECK(g == -Laurent::one_minus_qpow(1));         // normalized: q - 1 -> -(1-q)? positive lead
    CHECK(gcd_poly(Laurent(4), Laurent(6)) == Laurent(2));
    CHECK(gcd_poly(Laurent(), Laurent(5)) == Laurent(5));
    // gcd divides both inputs exactly (after shifting them to ordinary form)
    std::mt19937 rng(7);
    for (int t = 0; t < 60; ++t) {
        Laurent x = random_laurent(rng), y = random_laurent(rng);
        if (x.is_zero() || y.is_zero()) continue;
        Laurent d = gcd_poly(x, y);
        CHECK_NOTHROW(detail::divexact(x.shifted(-x.low()), d));
        CHECK_NOTHROW(detail::divexact(y.shifted(-y.low()), d));
        CHECK(gcd_poly(y, x) == d);
        CHECK(d.lead() > 0);
    }
}

TEST_CASE("ratq canonical form") {
    RatQ a = RatQ::fraction(Laurent::one_minus_qpow(2), Laurent::one_minus_qpow(1));
    CHECK(a == rq("1+q"));
    CHECK(a.is_polynomial());
    // q^-1 stays in the numerator
    RatQ b = RatQ::monomial(1, -1);
    CHECK(b.str() == "q^-1");
    CHECK(b.is_laurent());
    CHECK(!b.is_polynomial());
    // denominator constant coefficient is positive
    RatQ c = RatQ::fraction(Laurent(1), Laurent(1) - Laurent::monomial(1, -1));
    CHECK(c == rq("-q/(1-q)"));  // 1/(1-q^-1)
    // contents are coprime
    RatQ d = RatQ::fraction(Laurent(4), Laurent(6));
    CHECK(d == RatQ::fraction(Laurent(2), Laurent(3)));
    CHECK(RatQ::fraction(Laurent(), Laurent(3)) == RatQ(0));
    CHECK_THROWS_AS(RatQ::fraction(Laurent(1), Laurent()), error);
    // canonicalization is idempotent
    std::mt19937 rng(11);
    for (int t = 0; t < 100; ++t) {
        RatQ r = random_ratq(rng);
        CHECK(RatQ::fraction(r.num(), r.den()) == r);
        if (!r.is_zero()) {
            CHECK(r.den().low() == 0);
            CHECK(r.den().coeff(0) > 0);
            CHECK(gcd_poly(r.num(), r.den()).degree() <= 0);
        }
    }
}

TEST_CASE("ratq field laws") {
    RatQ a = rq("1/(1-q)");
    CHECK(a + rq("q/(-1+q)") == RatQ(1));
    CHECK(rq("q") * rq("q^-1") == RatQ(1));
    CHECK(a - a == RatQ(0));
    CHECK(a * a.inverse() == RatQ(1));
    CHECK_THROWS_AS(a / RatQ(0), error);
    CHECK_THROWS_AS(RatQ(0).inverse(), error);
    std::mt19937 rng(13);
    for (int t = 0; t < 60; ++t) {
        RatQ x = random_ratq(rng), y = random_ratq(rng), z = random_ratq(rng);
        CHECK(x * (y + z) == x * y + x * z);
        CHECK((x + y) + z == x + (y + z));
        CHECK(x + y == y + x);
        CHECK(x * y == y * x);
        if (!x.is_zero()) CHECK(x * x.inverse() == RatQ(1));
    }
}

TEST_CASE("adams substitution") {
    CHECK(rq("q^2").adams(3) == rq("q^6"));
    CHECK(rq("1+q").adams(2) == rq("1+q^2"));
    CHECK(rq("1/(1-q)").adams(-1) == rq("-q/(1-q)"));
    CHECK_THROWS_AS(rq("q").adams(0), error);
    std::mt19937 rng(17);
    const int ks[] = {-3, -2, -1, 1, 2, 3};
    for (int t = 0; t < 40; ++t) {
        RatQ x = random_ratq(rng), y = random_ratq(rng);
        for (int k : ks) {
            CHECK(x.adams(k) * y.adams(k) == (x * y).adams(k));
            CHECK(x.adams(k) + y.adams(k) == (x + y).adams(k));
        }
        CHECK(x.adams(1) == x);
        CHECK(x.adams(2).adams(-3) == x.adams(-6));
        CHECK(x.conj().conj() == x);
    }
}

TEST_CASE("evaluation") {
    CHECK(rq("1/(1-q)").eval(0) == 1);
    CHECK(rq("1+q").eval(2) == 3);
    CHECK(rq("q^-2").eval(BigRat(1, 2)) == 4);
    CHECK_THROWS_AS(rq("q^-1").eval(0), error);
    CHECK_THROWS_WITH(rq("1/(1-q)").eval(1), Catch::Matchers::ContainsSubstring("1-q"));
}

TEST_CASE("qbinomial values") {
    CHECK(qbinomial(0, 0) == RatQ(1));
    CHECK(qbinomial(5, 0) == RatQ(1));
    CHECK(qbinomial(1, 1) == rq("1+q"));
    CHECK(qbinomial(2, 1) == rq("1+q+q^2"));
    CHECK(qbinomial(2, 2) == rq("1+q+2q^2+q^3+q^4"));
    CHECK(qbinomial(-1, 1) == RatQ(0));
    CHECK(qbinomial(-2, 1) == rq("-q^-1"));
    CHECK(qbinomial(-2, 3) == RatQ(0));
    CHECK_THROWS_AS(qbinomial(3, -1), error);
}

TEST_CASE("qbinomial vanishing band") {
    for (int m = 0; m <= 4; ++m)
        for (int n = -7; n <= 7; ++n) {
            bool vanish = (m >= 1 && -m <= n && n <= -1);
            CHECK(qbinomial(n, m).is_zero() == vanish);
        }
}

TEST_CASE("qbinomial identities") {
    for (int n = 0; n <= 6; ++n)
        for (int m = 0; m <= 6; ++m)
            CHECK(qbinomial(n, m) == qbinomial(m, n));
    // index-lowering recurrence
    for (int n = 1; n <= 6; ++n)
        for (int m = 0; m <= 5; ++m) {
            RatQ step = RatQ::fraction(Laurent::one_minus_qpow(n + m),
                                       Laurent::one_minus_qpow(n));
            CHECK(qbinomial(n, m) == qbinomial(n - 1, m) * step);
        }
    // specialization at q=1 gives ordinary binomials
    CHECK(qbinomial(4, 2).eval(1) == 15);
    CHECK(qbinomial(3, 3).eval(1) == 20);
    // nonnegative integer coefficients for n, m >= 0
    for (int n = 0; n <= 5; ++n)
        for (int m = 0; m <= 5; ++m) {
            RatQ v = qbinomial(n, m);
            REQUIRE(v.is_polynomial());
            for (const auto& [e, c] : v.num().coeffs()) CHECK(c > 0);
        }
}

TEST_CASE("qbinomial infinite") {
    CHECK(qbinomial_inf(0) == RatQ(1));
    CHECK(qbinomial_inf(1) == rq("1/(1-q)"));
    CHECK(qbinomial_inf(2) == RatQ::fraction(
              Laurent(1), Laurent::one_minus_qpow(1) * Laurent::one_minus_qpow(2)));
}

TEST_CASE("bracket products") {
    std::vector<int> nu = {2, 1}, al = {1, 1};
    CHECK(bracket(nu, al) == qbinomial(2, 1) * qbinomial(1, 1));
    std::vector<int> neg = {1, -1};
    CHECK(bracket(nu, neg) == RatQ(0));
    CHECK(bracket_inf(al) == qbinomial_inf(1) * qbinomial_inf(1));
    CHECK(bracket_inf(neg) == RatQ(0));
    std::vector<int> nu3 = {1};
    CHECK_THROWS_AS(bracket(nu3, al), error);
}

TEST_CASE("pochhammer") {
    RatQ q = RatQ::q_pow(1);
    CHECK(pochhammer(q, 0) == RatQ(1));
    CHECK(pochhammer(q, 2) == RatQ::fraction(
              Laurent::one_minus_qpow(1) * Laurent::one_minus_qpow(2), Laurent(1)));
    CHECK(pochhammer(RatQ(1), -1) == rq("-q/(1-q)"));     // 1/(1-q^-1)
    CHECK(pochhammer(RatQ(1), -1) ==
          pochhammer(RatQ::q_pow(-1), 1).inverse());      // (a;q)_{-n} = 1/(q^{-n}a;q)_n
    CHECK_THROWS_AS(pochhammer(q, -1), error);            // factor 1 - q^-1 q = 0
    // (a;q)_{m+n} = (a;q)_m (q^m a;q)_n
    for (int m = 0; m <= 3; ++m)
        for (int n = 0; n <= 3; ++n)
            CHECK(pochhammer(q, m + n) ==
                  pochhammer(q, m) * pochhammer(RatQ::q_pow(m) * q, n));
}

TEST_CASE("ratq serialization round trip") {
    const char* cases[] = {"0", "1", "-1", "q", "-q", "q^-1", "1+q",
                           "q^-4+q^-2", "1/(1-q)", "-q^2/(1-q)", "2+3q^5",
                           "-q^-3/(2-q)", "(1+q)/(1-q^3)"};
    for (const char* s : cases) {
        RatQ v = RatQ::parse(s);
        CHECK(RatQ::parse(v.str()) == v);
        CHECK(v.str() == s);  // the listed strings are already canonical
    }
    // non-canonical input parses to the canonical value
    CHECK(RatQ::parse("(1+q)/(1-q^2)") == RatQ::parse("1/(1-q)"));
    CHECK(RatQ::parse("2*q^2") == RatQ::parse("2q^2"));
    CHECK(RatQ::parse(" 1 + q ") == RatQ::parse("1+q"));
    CHECK(RatQ::parse("q/(-1+q)") == RatQ::parse("-q/(1-q)"));
    CHECK_THROWS_AS(RatQ::parse("1//q"), error);
    CHECK_THROWS_AS(RatQ::parse("(1+q"), error);
    CHECK_THROWS_AS(RatQ::parse("x"), error);
    CHECK_THROWS_AS(RatQ::parse("1/0"), error);
    CHECK_THROWS_AS(RatQ::parse(""), error);
    std::mt19937 rng(23);
    for (int t = 0; t < 200; ++t) {
        RatQ v = random_ratq(rng);
        CHECK(RatQ::parse(v.str()) == v);
    }
}
