#ifndef AZPAIR_POLYNOMIAL_HPP
#define AZPAIR_POLYNOMIAL_HPP

/// Dense univariate polynomials over exact rationals: arithmetic,
/// composition/iteration, Horner evaluation, primitive integer normal
/// form, and parsing from human strings / JSON coefficient arrays.

#include "azpair/rational.hpp"

#include <complex>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace azpair {

/// Coefficients stored low-to-high (a_0 .. a_d); the top coefficient is
/// nonzero unless the polynomial is zero.
class PolyQ {
public:
    PolyQ() = default;
    explicit PolyQ(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }
    PolyQ(std::initializer_list<Rational> coeffs) : c_(coeffs) { normalize(); }

    /// The monomial x.
    static PolyQ identity() { return PolyQ{Rational(0), Rational(1)}; }
    /// x^d + c (the quadratic family generalized).
    static PolyQ power_plus(long d, const Rational& c);
    /// Parses "x^2 - 1/2"-style strings.
    static PolyQ from_string(std::string_view text);

    bool is_zero() const { return c_.empty(); }
    /// Degree of the zero polynomial is -1 by convention.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    /// a_i, or 0 beyond the degree.
    const Rational& coeff(long i) const;
    const std::vector<Rational>& coefficients() const { return c_; }
    const Rational& leading() const;
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    /// True for x^d, d >= 1 (every non-leading coefficient zero).
    bool is_power_map() const;

    Rational eval(const Rational& x) const;
    std::complex<double> eval(std::complex<double> z) const;

    PolyQ derivative() const;
    /// this(g): polynomial composition.
    PolyQ compose(const PolyQ& g) const;

    friend PolyQ operator+(const PolyQ& f, const PolyQ& g);
    friend PolyQ operator-(const PolyQ& f, const PolyQ& g);
    friend PolyQ operator*(const PolyQ& f, const PolyQ& g);
    friend PolyQ operator*(const Rational& s, const PolyQ& f);
    friend PolyQ operator-(const PolyQ& f, const Rational& s);
    friend bool operator==(const PolyQ& f, const PolyQ& g) { return f.c_ == g.c_; }

    std::string to_string() const;

private:
    void normalize();
    std::vector<Rational> c_;
};

/// phi^n, the n-fold composition; phi^0 = x. Degree grows as d^n and is
/// rejected beyond `degree_cap`.
PolyQ iterate(const PolyQ& phi, long n, long degree_cap = 8192);

/// Content-free integer form: `scale` is positive and
/// scale * (integer polynomial) reproduces the input exactly.
struct PrimitiveIntPoly {
    std::vector<Integer> coeffs;  // low-to-high, gcd of all = 1
    Rational scale;

    long degree() const { return static_cast<long>(coeffs.size()) - 1; }
    PolyQ to_poly() const;
};

PrimitiveIntPoly to_primitive(const PolyQ& f);

}  // namespace azpair

#endif
