#ifndef AZPAIR_ROOTS_HPP
#define AZPAIR_ROOTS_HPP

/// Simultaneous (Aberth-Ehrlich) complex root finding.
///
/// Two evaluation backends share one iteration:
///   - complex<double> coefficients, double Horner (small/sampler inputs);
///   - arbitrary-precision integer coefficients evaluated in GMP floats
///     whose precision tracks the coefficient bit length. Iterated
///     polynomials cancel catastrophically at their roots, so anything
///     less than coefficient-exact evaluation scrambles the root set.
///
/// Root state stays in doubles throughout: the corrections bottom out
/// well above the double floor, only the residual evaluation needs the
/// big floats.

#include "azpair/polynomial.hpp"
#include "azpair/rational.hpp"

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace azpair {

/// One (possibly multiple) root: `residual_radius` is the a-posteriori
/// bound deg * |p/p'| localizing a true root near `center`.
struct RootCluster {
    std::complex<double> center;
    long multiplicity = 1;
    double residual_radius = 0.0;
};

struct RootFindOptions {
    double tol = 1e-12;                // relative lock threshold on corrections
    int max_sweeps = 600;
    std::uint64_t seed = 0x5DEECE66DULL;  // phase perturbation of initial ring
    long max_precision_bits = 1024;    // cap for big-float evaluation
    double cluster_factor = 10.0;      // merge distance, in residual radii
};

/// Non-convergence carries the best iterates and their residual bounds.
class RootFindError : public std::runtime_error {
public:
    RootFindError(const std::string& what, std::vector<std::complex<double>> best,
                  std::vector<double> residuals)
        : std::runtime_error(what), best_points(std::move(best)),
          residuals(std::move(residuals)) {}
    std::vector<std::complex<double>> best_points;
    std::vector<double> residuals;
};

/// All roots of sum coeffs[i] x^i (low-to-high), clusters' multiplicities
/// summing to the degree.
std::vector<RootCluster> find_roots(const std::vector<std::complex<double>>& coeffs,
                                    const RootFindOptions& opts = {});
std::vector<RootCluster> find_roots(const std::vector<Integer>& coeffs,
                                    const RootFindOptions& opts = {});

/// Roots of a rational polynomial via its primitive integer form.
std::vector<RootCluster> complex_roots(const PolyQ& f, double tol = 1e-12,
                                       RootFindOptions opts = {});

}  // namespace azpair

#endif
