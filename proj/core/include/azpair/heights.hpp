#ifndef AZPAIR_HEIGHTS_HPP
#define AZPAIR_HEIGHTS_HPP

/// Weil heights on P^1(Q), the Mahler-measure/sum-of-root-heights oracle,
/// and Call-Silverman canonical heights with rigorous error radii.

#include "azpair/polynomial.hpp"
#include "azpair/rational.hpp"

#include <optional>

namespace azpair {

/// A point of P^1(Q): a rational number or the point at infinity.
class ProjPoint {
public:
    ProjPoint(Rational q) : value_(std::move(q)) { value_->canonicalize(); }
    static ProjPoint infinity() { return ProjPoint(); }

    bool is_infinity() const { return !value_.has_value(); }
    const Rational& value() const;

private:
    ProjPoint() = default;
    std::optional<Rational> value_;
};

struct HeightEstimate {
    double value = 0.0;
    double error_radius = 0.0;
    /// True when the radius comes from the telescoping bound (or the value
    /// is exact), never from sampling.
    bool rigorous = true;
};

/// ln max(|a|, |b|) for reduced a/b; h(infinity) = 0.
double weil_height(const ProjPoint& x);
double weil_height(const Rational& q);

/// ln M(F) = ln|a_d| + sum over roots of log+ |root|, via the certified
/// root clusters. `error_out`, when given, receives a residual-propagated
/// error estimate.
double log_mahler_measure(const PrimitiveIntPoly& F, double* error_out = nullptr);

/// Sum of Weil heights over all roots of f (with multiplicity). For a
/// primitive integer polynomial this equals ln M(F); the identity is
/// exercised against factored cases in the tests.
double sum_root_heights(const PolyQ& f, double* error_out = nullptr);

struct CanonicalHeightOptions {
    /// Orbit iteration stops once numerator+denominator exceed this many
    /// bits and the achieved-n bound is returned instead.
    long bit_budget = 1L << 20;
};

/// h_phi(x) = lim h(phi^n(x))/d^n by exact orbit iteration, stopping when
/// the telescoping bound C_phi/(d^n (d-1)) (or the sharper escaped-orbit
/// tail) drops below eps. Preperiodic points short-circuit to exactly 0,
/// power maps to the Weil height.
HeightEstimate canonical_height(const PolyQ& phi, const ProjPoint& x, double eps,
                                const CanonicalHeightOptions& opts = {});

/// A valid constant C with |h(phi(y)) - d h(y)| <= C for all rational y:
/// the Weil height of the coefficient vector plus ln(d+1) + ln 2.
double telescoping_constant(const PolyQ& phi);

}  // namespace azpair

#endif
