#include "doctest.h"

#include "azpair/polynomial.hpp"
#include "azpair/roots.hpp"

#include <algorithm>
#include <complex>
#include <random>

using namespace azpair;
using cdouble = std::complex<double>;

namespace {

PolyQ P(std::string_view s) { return PolyQ::from_string(s); }

long total_multiplicity(const std::vector<RootCluster>& cs) {
    long m = 0;
    for (const auto& c : cs) m += c.multiplicity;
    return m;
}

// Expands lead * prod (x - center)^mult in doubles; the reconstruction oracle.
std::vector<cdouble> expand(const std::vector<RootCluster>& cs, cdouble lead) {
    std::vector<cdouble> poly{lead};  // low-to-high
    for (const auto& c : cs)
        for (long k = 0; k < c.multiplicity; ++k) {
            std::vector<cdouble> next(poly.size() + 1, 0.0);
            for (size_t i = 0; i < poly.size(); ++i) {
                next[i + 1] += poly[i];
                next[i] -= poly[i] * c.center;
            }
            poly = std::move(next);
        }
    return poly;
}

bool has_root_near(const std::vector<RootCluster>& cs, cdouble w, double tol,
                   long multiplicity = 1) {
    for (const auto& c : cs)
        if (std::abs(c.center - w) <= tol && c.multiplicity == multiplicity) return true;
    return false;
}

}  // namespace

TEST_CASE("simple quadratics") {
    auto cs = complex_roots(P("x^2 + 1"));
    REQUIRE(cs.size() == 2);
    CHECK(has_root_near(cs, {0.0, 1.0}, 1e-12));
    CHECK(has_root_near(cs, {0.0, -1.0}, 1e-12));

    auto rep = complex_roots(P("x^2 - 2*x + 1"));
    REQUIRE(rep.size() == 1);
    CHECK(rep[0].multiplicity == 2);
    CHECK(std::abs(rep[0].center - cdouble(1.0, 0.0)) < 1e-6);
}

TEST_CASE("biquadratic with radical roots") {
    // x^4 - 4x^2 + 2 = 0  =>  x = +-sqrt(2 +- sqrt 2)
    auto cs = complex_roots(P("x^4 - 4*x^2 + 2"));
    CHECK(total_multiplicity(cs) == 4);
    for (double s1 : {-1.0, 1.0})
        for (double s2 : {-1.0, 1.0})
            CHECK(has_root_near(cs, {s1 * std::sqrt(2.0 + s2 * std::sqrt(2.0)), 0.0}, 1e-9));
}

TEST_CASE("zero roots become an exact cluster at 0") {
    auto cs = complex_roots(P("x^3 - x^2"));  // x^2 (x - 1)
    CHECK(total_multiplicity(cs) == 3);
    CHECK(has_root_near(cs, {0.0, 0.0}, 0.0, 2));
    CHECK(has_root_near(cs, {1.0, 0.0}, 1e-10));
}

TEST_CASE("roots reconstruct random monic integer polynomials") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<long> coef(-9, 9);
    std::uniform_int_distribution<int> deg(2, 12);
    for (int trial = 0; trial < 40; ++trial) {
        int d = deg(rng);
        std::vector<Rational> cs(static_cast<size_t>(d) + 1);
        for (int i = 0; i < d; ++i) cs[static_cast<size_t>(i)] = coef(rng);
        cs.back() = 1;
        PolyQ f(cs);
        auto clusters = complex_roots(f);
        CHECK(total_multiplicity(clusters) == d);
        auto poly = expand(clusters, 1.0);
        double scale = 0.0;
        for (int i = 0; i <= d; ++i)
            scale = std::max(scale, std::abs(f.coeff(i).get_d()));
        for (int i = 0; i <= d; ++i) {
            double got = poly[static_cast<size_t>(i)].real();
            double want = f.coeff(i).get_d();
            CHECK(std::abs(got - want) <= 1e-6 * scale);
            CHECK(std::abs(poly[static_cast<size_t>(i)].imag()) <= 1e-6 * scale);
        }
    }
}

TEST_CASE("determinism for a fixed seed") {
    auto a = complex_roots(P("x^6 - 3*x^2 + 1"));
    auto b = complex_roots(P("x^6 - 3*x^2 + 1"));
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].center == b[i].center);
        CHECK(a[i].multiplicity == b[i].multiplicity);
    }
}

TEST_CASE("huge integer coefficients are handled at full precision") {
    // x^64 - 3: all roots on |z| = 3^(1/64); Mahler-style accuracy check.
    std::vector<Rational> cs(65, Rational(0));
    cs[0] = -3;
    cs[64] = 1;
    auto clusters = complex_roots(PolyQ(cs));
    CHECK(total_multiplicity(clusters) == 64);
    double want = std::pow(3.0, 1.0 / 64.0);
    for (const auto& c : clusters)
        CHECK(std::abs(std::abs(c.center) - want) < 1e-10);
}

TEST_CASE("complex coefficient path solves sampler-style shifts") {
    // phi(w) - z with phi = x^2 - 2 and z = 3 + 4i.
    std::vector<cdouble> coeffs{cdouble(-5.0, -4.0), 0.0, 1.0};
    auto cs = find_roots(coeffs);
    CHECK(total_multiplicity(cs) == 2);
    for (const auto& c : cs) {
        cdouble w = c.center * c.center - cdouble(2.0, 0.0);
        CHECK(std::abs(w - cdouble(3.0, 4.0)) < 1e-10);
    }
}

TEST_CASE("error paths") {
    CHECK_THROWS_AS(complex_roots(P("5")), std::domain_error);
    CHECK_THROWS_AS(find_roots(std::vector<cdouble>{}), std::domain_error);
    CHECK_THROWS_AS(find_roots(std::vector<cdouble>{0.0, 0.0}), std::domain_error);
}
