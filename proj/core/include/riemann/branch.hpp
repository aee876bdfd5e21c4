#pragma once

// Numerical continuation of log zeta (and of log of related holomorphic
// functions) along polyline paths, and the branch-cut measurements built on
// it: jumps across the real-axis cut and the horizontal cuts at each zero,
// the off-line "rogue zero" experiment, residues of zeta'/zeta, argument
// principle counts and small-circle integrals of log zeta(s) x^s / s.

#include <functional>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "riemann/types.hpp"
#include "riemann/zero_list.hpp"
#include "riemann/zeta.hpp"

namespace riemann::branch {

/// A holomorphic function supplied as value and logarithmic derivative.
using Evaluator = std::function<zeta::ZetaValue(Complex)>;

/// The zeta function itself as an Evaluator.
Evaluator zeta_evaluator();

/// zeta(s) (s - r1) (s - r2): zeta with two artificial zeros.
Evaluator zeta_with_artificial_zeros(Complex r1, Complex r2);

struct PathPolyline {
  std::vector<ComplexPoint> vertices;
  double max_step = 0.1;

  /// Throws DomainError unless there are >= 2 vertices, max_step > 0 and no
  /// segment comes within zeta::kExclusionRadius of s = 1, a trivial zero
  /// -2n, or any of `zeros`.
  void validate(std::span<const ComplexPoint> zeros = {}) const;
};

struct TracePoint {
  ComplexPoint s;
  Complex log_value;
  bool is_vertex = false;
};

struct BranchTrace {
  std::vector<TracePoint> points;
  Complex start_value;

  /// log values at the path vertices, in path order.
  [[nodiscard]] std::vector<Complex> vertex_values() const;
  [[nodiscard]] Complex final_value() const { return points.back().log_value; }

  /// CSV with header "sigma,t,re_log,im_log"; '.' decimals, comma delimiter.
  void write_csv(std::ostream& out) const;
};

/// Continue log f along the path starting from `start_log`, which must
/// satisfy exp(start_log) = f(vertices[0]) to 1e-8 relative. Each step
/// integrates f'/f with a Gauss-Kronrod panel; the step is halved until
/// |Im delta| < pi/4 and the panel error is small, and the result is then
/// re-anchored on log|f| and the principal argument of f, keeping the
/// sheet chosen by the integral. Throws StepCollapseError when the step
/// would fall below 1e-6.
BranchTrace continue_log(const PathPolyline& path, Complex start_log, const Evaluator& f);

/// continue_log for zeta, after validating the path against s = 1, the
/// trivial zeros and `known_zeros`.
BranchTrace continue_log_zeta(const PathPolyline& path, ComplexPoint start_log,
                              std::span<const ComplexPoint> known_zeros = {});

struct JumpMeasurement {
  double jump = 0.0;                // mean extrapolated jump
  std::vector<double> sigmas;       // sample abscissae
  std::vector<double> jumps;        // extrapolated jump per sample
  std::vector<double> upper_limits; // extrapolated Im log on the upper side
  std::vector<double> lower_limits; // extrapolated Im log on the lower side
  double spread = 0.0;              // max - min of `jumps`

  friend bool operator==(const JumpMeasurement&, const JumpMeasurement&) = default;
};

/// Im log zeta just below minus just above the horizontal line Im s =
/// height, sampled at `samples` abscissae across sigma_range. Both sides
/// are continued from log zeta(2) (principal) up the line Re s = 2 and
/// then left, so no cut is crossed. The offset from the line starts at
/// `offset`, is halved, and is Richardson-extrapolated to zero. Throws
/// InconsistencyError when the per-sample jumps differ by more than 1e-4.
JumpMeasurement measure_cut_jump(std::pair<double, double> sigma_range, double height,
                                 double offset, int samples = 5);

/// Limit of Im log zeta(sigma + i(height + delta)) as delta -> 0+, with the
/// same anchoring as measure_cut_jump.
double upper_cut_limit(double sigma, double height, double offset);

/// Jump of Im log zeta across the cut to the left of the n-th zero
/// (1-based), at abscissa sigma < 1/2: value just below gamma_n minus value
/// just above.
double measure_critical_cut_jump(const ZeroList& zeros, std::size_t zero_index, double sigma,
                                 double offset);

struct RogueJumps {
  double left_jump = 0.0;    // sigma < sigma_1
  double middle_jump = 0.0;  // sigma_1 < sigma < sigma_2

  friend bool operator==(const RogueJumps&, const RogueJumps&) = default;
};

/// Continues log[zeta(s)(s - r1)(s - r2)] just above and just below the
/// common ordinate of r1 and r2 and reports the argument on the upper side
/// minus the argument on the lower side, left of both artificial zeros and
/// between them. Requires r1 = sigma_1 + i gamma, r2 = sigma_2 + i gamma,
/// 0 < sigma_1 < 1/2 < sigma_2 < 1, and no zero of zeta near Im s = gamma.
RogueJumps rogue_experiment(ComplexPoint r1, ComplexPoint r2, double offset = 0.05);

/// lim_{eps -> 0} eps e^{i phi} zeta'/zeta(center + eps e^{i phi}),
/// Richardson-extrapolated from eps = 0.05 down to a few times the
/// exclusion radius.
Complex directional_residue(ComplexPoint center, double direction);

/// Winding of f around the closed polygon `corners` (first vertex is
/// repeated implicitly): (final - start) Im log / 2 pi, unrounded.
double winding_number(std::span<const ComplexPoint> corners, const Evaluator& f,
                      double max_step = 0.25);

/// Number of zeta zeros with 0 < Im s <= T, from the winding of zeta over
/// the rectangle [-1, 2] x [-T, T] (which also encloses the pole at 1).
/// Throws CertificationError if the winding is not an odd integer.
std::size_t argument_principle_count(double height);

/// Integral of log zeta(s) x^s / s over the circle |s - center| = radius,
/// counterclockwise from the leftmost point, with log zeta continued along
/// the circle from its principal value at the start.
Complex circle_log_zeta_integral(ComplexPoint center, double radius, double x);

}  // namespace riemann::branch
