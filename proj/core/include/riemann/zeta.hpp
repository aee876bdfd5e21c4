#pragma once

// Riemann zeta function and its logarithmic derivative on the validated box
// -12 <= Re s <= 12, |Im s| <= kMaxOrdinate.
//
// Re s >= 0 uses Borwein's accelerated alternating series for the Dirichlet
// eta function, with zeta' obtained from the term-wise derivative of the
// same series. Re s < 0 goes through the functional equation, whose
// gamma factor comes from a Stirling expansion of log Gamma.

#include "riemann/types.hpp"

namespace riemann::zeta {

inline constexpr double kMinSigma = -12.0;
inline constexpr double kMaxSigma = 12.0;
inline constexpr double kMaxOrdinate = 250.0;

// Paths and evaluations of log-derivatives keep at least this distance from
// s = 1, trivial zeros and known non-trivial zeros.
inline constexpr double kExclusionRadius = 1e-3;

struct ZetaValue {
  Complex value;      // zeta(s)
  Complex log_deriv;  // zeta'(s) / zeta(s)
};

/// True when s lies in the box where the evaluator is validated.
bool in_validated_box(Complex s) noexcept;

/// zeta(s). Throws PoleError at s = 1 and AccuracyError outside the box.
Complex zeta(ComplexPoint s);

/// zeta'(s)/zeta(s). Throws SingularityError when s is within
/// kExclusionRadius of the pole or a zero (detected through the Newton
/// distance |zeta/zeta'|), plus the errors of zeta().
Complex zeta_log_deriv(ComplexPoint s);

/// Both quantities from a single series pass, without the singularity
/// screen. For callers that manage their own distance to singularities.
ZetaValue evaluate(Complex s);

/// Principal-branch log Gamma (continuous in the right half-plane).
Complex log_gamma(Complex z);

/// Digamma function psi(z) = Gamma'(z)/Gamma(z).
Complex digamma(Complex z);

/// Riemann-Siegel theta(t) = Im log Gamma(1/4 + it/2) - (t/2) log pi.
double riemann_siegel_theta(double t);

}  // namespace riemann::zeta
