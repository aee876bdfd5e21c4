#pragma once

// Scalar special functions behind the explicit formula: real and complex
// logarithmic integrals, Gamma(0, x), the principal-value integral of x^s/s
// across the origin, and the tail integrals of the two forms of f(x).
//
// All functions are pure and safe to call concurrently.

#include <cstddef>
#include <utility>

#include "riemann/types.hpp"

namespace riemann::special {

/// Principal value of the integral of 1/log t over (0, x), x > 1.
/// The singularity at t = 1 is removed by a symmetric exclusion whose
/// half-width is halved from `initial_width` and Richardson-extrapolated to
/// zero. Throws DomainError for x <= 1 and ConvergenceError when the
/// extrapolation does not settle before cfg.pv_epsilon_floor.
Estimate li_real(double x, const QuadratureConfig& cfg = {});
Estimate li_real_with_exclusion(double x, double initial_width, const QuadratureConfig& cfg = {});

/// Li(x^rho) on the indented contour: the integral of e^s/s along the
/// horizontal line Im s = v from -M + iv to u + iv, plus sign(v)*pi*i,
/// where u + iv = rho*log x and M is large enough that e^{-M}/|v| < abs_tol.
/// Throws DomainError for x <= 1 or rho on the real axis.
ComplexEstimate li_complex_power(double x, ComplexPoint rho, const QuadratureConfig& cfg = {});

/// Gamma(0, x) = E1(x) for x > 0. Power series for x <= 1, continued
/// fraction above.
double incomplete_gamma_zero(double x);

/// Sum over n >= 2 of Gamma(0, 2n log x). `error` holds the certified bound
/// on the discarded tail (geometric envelope with ratio x^-2).
struct TailSum {
  double value = 0.0;
  double error = 0.0;
  std::size_t terms = 0;
};
TailSum trivial_zero_tail(double x, const QuadratureConfig& cfg = {});

/// P.V. of the integral of x^s/s over s in (-2, 1). Same exclusion and
/// extrapolation scheme as li_real.
Estimate pv_integral(double x, const QuadratureConfig& cfg = {});
Estimate pv_integral_with_exclusion(double x, double initial_width, const QuadratureConfig& cfg = {});

/// Integral of 1/(t (t^2 - 1) log t) over (x, inf), by direct quadrature
/// after t = e^u.
Estimate riemann_tail_integral(double x, const QuadratureConfig& cfg = {});

/// The same tail computed as the series over n >= 1 of the integrals of
/// t^(-2n-1)/log t over (x, inf), each term by its own quadrature. Terms are
/// added until the geometric envelope of the remainder is below abs_tol or
/// cfg.tail_terms is reached.
Estimate riemann_tail_integral_series(double x, const QuadratureConfig& cfg = {});

/// Both sides of the per-term change of variables
///   integral_x^inf t^(-2n-1)/log t dt  ==  integral_{2n log x}^inf e^-t/t dt,
/// each evaluated by an independent quadrature. Returns (left, right).
std::pair<double, double> term_integral_identity_check(double x, int n,
                                                        const QuadratureConfig& cfg = {});

/// Integral of 1/log u over (0, 1/x^2) by quadrature in u. Negative for x > 1.
Estimate log_reciprocal_integral(double x, const QuadratureConfig& cfg = {});

}  // namespace riemann::special
