#include "doctest.h"

#include "azpair/polynomial.hpp"

#include <random>

using namespace azpair;

namespace {
PolyQ P(std::string_view s) { return PolyQ::from_string(s); }
}

TEST_CASE("parsing and printing") {
    CHECK(P("x^2 - 1/2") == PolyQ{Rational(-1, 2), Rational(0), Rational(1)});
    CHECK(P("x") == PolyQ::identity());
    CHECK(P("-x^3 + 2*x - 7") == PolyQ{Rational(-7), Rational(2), Rational(0), Rational(-1)});
    CHECK(P("3/4") == PolyQ{Rational(3, 4)});
    CHECK(P("x^2+x+x") == PolyQ{Rational(0), Rational(2), Rational(1)});  // like terms merge
    CHECK(P("x^2 - 2").to_string() == "x^2 - 2");
    CHECK(P("-3/2x^2").to_string() == "-3/2*x^2");
    CHECK_THROWS_AS(P("x^"), std::invalid_argument);
    CHECK_THROWS_AS(P("2 +"), std::invalid_argument);
    CHECK_THROWS_AS(P("y + 1"), std::invalid_argument);
}

TEST_CASE("degree bookkeeping strips high zeros") {
    PolyQ f({Rational(1), Rational(2), Rational(0), Rational(0)});
    CHECK(f.degree() == 1);
    CHECK(PolyQ({Rational(0)}).is_zero());
    CHECK(PolyQ().degree() == -1);
}

TEST_CASE("exact evaluation") {
    CHECK(P("x^2 + 1").eval(Rational(1, 2)) == Rational(5, 4));
    CHECK(P("x^2 - 2").eval(Rational(2)) == Rational(2));
    CHECK(P("x^3").eval(Rational(-1)) == Rational(-1));
}

TEST_CASE("iteration") {
    CHECK(iterate(P("x^2 + 1"), 0) == PolyQ::identity());
    CHECK(iterate(P("x^2"), 3) == P("x^8"));
    // (x^2-2)^2 - 2 expanded by hand: x^4 - 4x^2 + 2.
    CHECK(iterate(P("x^2 - 2"), 2) == P("x^4 - 4*x^2 + 2"));
    CHECK_THROWS_WITH_AS(iterate(P("x^2"), 14, 8192),
                         "iterate: degree 2^14 exceeds cap 8192", std::domain_error);
}

TEST_CASE("iterate composes and evaluates consistently") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> coef(-4, 4);
    for (int trial = 0; trial < 20; ++trial) {
        PolyQ phi({Rational(coef(rng)), Rational(coef(rng)), Rational(1)});
        int m = trial % 3, n = (trial / 3) % 3;
        CHECK(iterate(phi, m + n) == iterate(phi, m).compose(iterate(phi, n)));
        Rational q(coef(rng), 3);
        q.canonicalize();
        Rational direct = q;
        for (int k = 0; k < m + n; ++k) direct = phi.eval(direct);
        CHECK(iterate(phi, m + n).eval(q) == direct);
        long d = phi.degree(), expect = 1;
        for (int k = 0; k < m + n; ++k) expect *= d;
        CHECK(iterate(phi, m + n).degree() == expect);
    }
}

TEST_CASE("primitive integer form") {
    SUBCASE("lcm clearing") {
        auto prim = to_primitive(P("x/2 + 1/3"));
        REQUIRE(prim.coeffs.size() == 2);
        CHECK(prim.coeffs[0] == 2);
        CHECK(prim.coeffs[1] == 3);
        CHECK(prim.scale == Rational(1, 6));
    }
    SUBCASE("content divided out") {
        auto prim = to_primitive(P("2*x^2 + 4"));
        CHECK(prim.coeffs[0] == 2);
        CHECK(prim.coeffs[2] == 1);
        CHECK(prim.scale == Rational(2));
    }
    SUBCASE("already primitive") {
        auto prim = to_primitive(P("x^2 - 2"));
        CHECK(prim.scale == Rational(1));
        CHECK(prim.coeffs[0] == -2);
    }
    SUBCASE("negative leading keeps scale positive") {
        auto prim = to_primitive(P("-x^2 + 1/2"));
        CHECK(prim.scale > 0);
        CHECK(prim.to_poly() == P("-x^2 + 1/2"));
    }
    CHECK_THROWS_AS(to_primitive(PolyQ()), std::domain_error);
}

TEST_CASE("primitive round-trip is exact on random inputs") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> num(-30, 30), den(1, 12);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Rational> cs;
        for (int i = 0; i <= 5; ++i) cs.emplace_back(num(rng), den(rng));
        PolyQ f(cs);
        if (f.is_zero()) continue;
        auto prim = to_primitive(f);
        CHECK(prim.to_poly() == f);
        Integer content = 0;
        for (const Integer& c : prim.coeffs)
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
        CHECK(content == 1);
    }
}

TEST_CASE("power map detection") {
    CHECK(P("x^2").is_power_map());
    CHECK(P("x^5").is_power_map());
    CHECK_FALSE(P("x^2 + 1").is_power_map());
    CHECK_FALSE(P("2*x^2").is_power_map());
    CHECK_FALSE(P("x + 1").is_power_map());
}
