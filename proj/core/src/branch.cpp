#include "riemann/branch.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <string>

#include "riemann/quadrature.hpp"

namespace riemann::branch {
namespace {

constexpr double kMinStep = 1e-6;
constexpr double kMaxArgStep = kPi / 4.0;
constexpr double kPanelTolerance = 1e-9;
constexpr double kSnapTolerance = 1e-5;
constexpr int kOffsetLevels = 5;
constexpr double kAnchorSigma = 2.0;
constexpr double kMaxJumpSpread = 1e-4;

double segment_distance(Complex a, Complex b, Complex p) {
  const Complex d = b - a;
  const double len2 = std::norm(d);
  if (len2 == 0.0) return std::abs(p - a);
  const double t = std::clamp(((p - a) * std::conj(d)).real() / len2, 0.0, 1.0);
  return std::abs(p - (a + t * d));
}

Complex principal_log(Complex v) { return {std::log(std::abs(v)), std::arg(v)}; }

// One path per side of the line Im s = height: up Re s = 2 and then left
// through the sample abscissae (sorted descending). Returns the log values
// at the samples, in the order of `sigmas`.
std::vector<Complex> side_values(const Evaluator& f, double height, std::span<const double> sigmas) {
  std::vector<std::size_t> order(sigmas.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return sigmas[a] > sigmas[b]; });

  PathPolyline path;
  path.vertices.emplace_back(kAnchorSigma, 0.0);
  path.vertices.emplace_back(kAnchorSigma, height);
  for (std::size_t idx : order) path.vertices.emplace_back(sigmas[idx], height);

  const Complex start = principal_log(f(Complex(kAnchorSigma, 0.0)).value);
  const auto trace = continue_log(path, start, f);
  const auto at_vertices = trace.vertex_values();
  std::vector<Complex> out(sigmas.size());
  for (std::size_t k = 0; k < order.size(); ++k) out[order[k]] = at_vertices[k + 2];
  return out;
}

struct SideLimits {
  std::vector<double> jumps;  // below - above
  std::vector<double> upper;
  std::vector<double> lower;
};

// Offsets delta_k = offset / 2^k. The jump below - above is an odd function
// of delta on top of its limit; the one-sided values carry all powers.
SideLimits extrapolate_sides(const Evaluator& f, double height, std::span<const double> sigmas,
                             double offset) {
  if (!(offset > 0.0)) throw DomainError("offset must be positive");
  const std::size_t m = sigmas.size();
  std::vector<quad::RichardsonTable> jump(m, quad::RichardsonTable({1, 3, 5, 7, 9}));
  std::vector<quad::RichardsonTable> upper(m, quad::RichardsonTable({1, 2, 3, 4, 5}));
  std::vector<quad::RichardsonTable> lower(m, quad::RichardsonTable({1, 2, 3, 4, 5}));
  double delta = offset;
  for (int level = 0; level < kOffsetLevels; ++level) {
    const auto above = side_values(f, height + delta, sigmas);
    const auto below = side_values(f, height - delta, sigmas);
    for (std::size_t i = 0; i < m; ++i) {
      jump[i].push(below[i].imag() - above[i].imag());
      upper[i].push(above[i].imag());
      lower[i].push(below[i].imag());
    }
    delta *= 0.5;
  }
  SideLimits out;
  for (std::size_t i = 0; i < m; ++i) {
    out.jumps.push_back(jump[i].best());
    out.upper.push_back(upper[i].best());
    out.lower.push_back(lower[i].best());
  }
  return out;
}

}  // namespace

Evaluator zeta_evaluator() {
  return [](Complex s) { return zeta::evaluate(s); };
}

Evaluator zeta_with_artificial_zeros(Complex r1, Complex r2) {
  return [r1, r2](Complex s) {
    const auto z = zeta::evaluate(s);
    return zeta::ZetaValue{z.value * (s - r1) * (s - r2),
                           z.log_deriv + 1.0 / (s - r1) + 1.0 / (s - r2)};
  };
}

void PathPolyline::validate(std::span<const ComplexPoint> zeros) const {
  if (vertices.size() < 2) throw DomainError("path needs at least two vertices");
  if (!(max_step > 0.0)) throw DomainError("path max_step must be positive");
  std::vector<Complex> singular{Complex(1.0, 0.0)};
  for (int n = 1; -2.0 * n >= zeta::kMinSigma - 1.0; ++n) singular.emplace_back(-2.0 * n, 0.0);
  for (const auto& z : zeros) singular.push_back(z.value());
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    for (const Complex& p : singular) {
      if (segment_distance(vertices[i], vertices[i + 1], p) < zeta::kExclusionRadius) {
        throw DomainError("path passes within the exclusion radius of a singularity at (" +
                          std::to_string(p.real()) + ", " + std::to_string(p.imag()) + ")");
      }
    }
  }
}

std::vector<Complex> BranchTrace::vertex_values() const {
  std::vector<Complex> out;
  for (const auto& p : points) {
    if (p.is_vertex) out.push_back(p.log_value);
  }
  return out;
}

void BranchTrace::write_csv(std::ostream& out) const {
  out << "sigma,t,re_log,im_log\n";
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << std::setprecision(17);
  for (const auto& p : points) {
    out << p.s.re() << ',' << p.s.im() << ',' << p.log_value.real() << ',' << p.log_value.imag() << '\n';
  }
  out.flags(flags);
  out.precision(precision);
}

BranchTrace continue_log(const PathPolyline& path, Complex start_log, const Evaluator& f) {
  if (path.vertices.size() < 2) throw DomainError("path needs at least two vertices");
  if (!(path.max_step > 0.0)) throw DomainError("path max_step must be positive");
  const Complex first = f(path.vertices.front().value()).value;
  if (!(std::abs(std::exp(start_log) - first) <= 1e-8 * std::abs(first))) {
    throw DomainError("start_log is not a logarithm of f at the first vertex");
  }

  BranchTrace trace;
  trace.start_value = start_log;
  trace.points.push_back({path.vertices.front(), start_log, true});
  Complex current = start_log;

  for (std::size_t seg = 0; seg + 1 < path.vertices.size(); ++seg) {
    const Complex a = path.vertices[seg].value();
    const Complex b = path.vertices[seg + 1].value();
    const double length = std::abs(b - a);
    if (length == 0.0) {
      trace.points.push_back({path.vertices[seg + 1], current, true});
      continue;
    }
    const Complex unit = (b - a) / length;
    double pos = 0.0;
    double step = std::min(path.max_step, length);
    while (pos < length) {
      step = std::min(step, length - pos);
      const bool last = length - pos - step <= 1e-13 * length;
      if (last) step = length - pos;
      const Complex origin = a + unit * pos;
      auto integrand = [&](double tau) { return f(origin + unit * tau).log_deriv * unit; };
      const auto panel = quad::detail::kronrod_panel<Complex>(integrand, 0.0, step);

      bool accepted = std::abs(panel.value.imag()) < kMaxArgStep && panel.error < kPanelTolerance &&
                      std::isfinite(panel.value.real()) && std::isfinite(panel.value.imag());
      Complex snapped{};
      const Complex end = last ? b : origin + unit * step;
      if (accepted) {
        const Complex raw = current + panel.value;
        const Complex value = f(end).value;
        const double arg = std::arg(value);
        const double turns = std::round((raw.imag() - arg) / kTwoPi);
        snapped = Complex(std::log(std::abs(value)), arg + kTwoPi * turns);
        accepted = std::abs(snapped - raw) < kSnapTolerance;
      }
      if (!accepted) {
        step *= 0.5;
        if (step < kMinStep) {
          throw StepCollapseError("continuation step fell below 1e-6 near (" + std::to_string(origin.real()) +
                                  ", " + std::to_string(origin.imag()) + ")");
        }
        continue;
      }
      current = snapped;
      pos = last ? length : pos + step;
      trace.points.push_back({ComplexPoint(end), current, last});
      step = std::min(path.max_step, 1.5 * step);
    }
  }
  return trace;
}

BranchTrace continue_log_zeta(const PathPolyline& path, ComplexPoint start_log,
                              std::span<const ComplexPoint> known_zeros) {
  path.validate(known_zeros);
  return continue_log(path, start_log.value(), zeta_evaluator());
}

JumpMeasurement measure_cut_jump(std::pair<double, double> sigma_range, double height, double offset,
                                 int samples) {
  auto [lo, hi] = sigma_range;
  if (!(lo < hi) || samples < 1) throw DomainError("measure_cut_jump needs lo < hi and samples >= 1");
  if (hi >= kAnchorSigma) throw DomainError("measure_cut_jump: sigma range must lie left of Re s = 2");
  JumpMeasurement out;
  for (int i = 0; i < samples; ++i) out.sigmas.push_back(lo + (i + 0.5) * (hi - lo) / samples);
  const auto limits = extrapolate_sides(zeta_evaluator(), height, out.sigmas, offset);
  out.jumps = limits.jumps;
  out.upper_limits = limits.upper;
  out.lower_limits = limits.lower;
  const auto [mn, mx] = std::minmax_element(out.jumps.begin(), out.jumps.end());
  out.spread = *mx - *mn;
  double sum = 0.0;
  for (double j : out.jumps) sum += j;
  out.jump = sum / static_cast<double>(out.jumps.size());
  if (out.spread > kMaxJumpSpread) {
    throw InconsistencyError("cut jump varies by " + std::to_string(out.spread) + " along the segment");
  }
  return out;
}

double upper_cut_limit(double sigma, double height, double offset) {
  const double sigmas[] = {sigma};
  return extrapolate_sides(zeta_evaluator(), height, sigmas, offset).upper.front();
}

double measure_critical_cut_jump(const ZeroList& zeros, std::size_t zero_index, double sigma, double offset) {
  if (!(sigma < 0.5)) throw DomainError("measure_critical_cut_jump requires sigma < 1/2");
  const double gamma = zeros.gamma(zero_index);
  const double sigmas[] = {sigma};
  return extrapolate_sides(zeta_evaluator(), gamma, sigmas, offset).jumps.front();
}

RogueJumps rogue_experiment(ComplexPoint r1, ComplexPoint r2, double offset) {
  if (r1 == r2) throw DomainError("rogue_experiment: r1 and r2 must be distinct");
  if (std::abs(r1.im() - r2.im()) > 1e-12) {
    throw DomainError("rogue_experiment: r1 and r2 must share an ordinate");
  }
  if (!(0.0 < r1.re() && r1.re() < 0.5 && 0.5 < r2.re() && r2.re() < 1.0)) {
    throw DomainError("rogue_experiment requires 0 < Re r1 < 1/2 < Re r2 < 1");
  }
  const double gamma = r1.im();
  if (!(gamma > 4.0 * offset)) throw DomainError("rogue_experiment: ordinate must be above the offset band");

  // No zero of zeta may sit in the band the side paths sweep.
  const double band = 2.0 * offset;
  const ComplexPoint box[] = {{kAnchorSigma, gamma - band}, {kAnchorSigma, gamma + band},
                              {-1.0, gamma + band}, {-1.0, gamma - band}};
  const double winding = winding_number(box, zeta_evaluator(), 0.05);
  if (std::abs(winding) > 0.5) {
    throw DomainError("rogue_experiment: zeta has a zero near Im s = " + std::to_string(gamma));
  }

  const double sigmas[] = {r1.re() - 0.5, 0.5 * (r1.re() + r2.re())};
  const auto limits = extrapolate_sides(zeta_with_artificial_zeros(r1, r2), gamma, sigmas, offset);
  // extrapolate_sides reports below - above.
  return {-limits.jumps[0], -limits.jumps[1]};
}

Complex directional_residue(ComplexPoint center, double direction) {
  const Complex dir = std::polar(1.0, direction);
  quad::RichardsonTable re({1, 2, 3, 4, 5});
  quad::RichardsonTable im({1, 2, 3, 4, 5});
  double eps = 0.05;
  for (int level = 0; level < 6; ++level) {
    const Complex offset = eps * dir;
    const Complex value = offset * zeta::evaluate(center.value() + offset).log_deriv;
    re.push(value.real());
    im.push(value.imag());
    eps *= 0.5;
  }
  return {re.best(), im.best()};
}

double winding_number(std::span<const ComplexPoint> corners, const Evaluator& f, double max_step) {
  if (corners.size() < 3) throw DomainError("winding_number needs a polygon with at least 3 corners");
  PathPolyline path;
  path.vertices.assign(corners.begin(), corners.end());
  path.vertices.push_back(corners.front());
  path.max_step = max_step;
  const Complex start = principal_log(f(corners.front().value()).value);
  const auto trace = continue_log(path, start, f);
  return (trace.final_value().imag() - start.imag()) / kTwoPi;
}

std::size_t argument_principle_count(double height) {
  if (!(height > 0.0) || height > zeta::kMaxOrdinate) {
    throw DomainError("argument_principle_count: height must lie in (0, " +
                      std::to_string(zeta::kMaxOrdinate) + "]");
  }
  const ComplexPoint box[] = {{2.0, -height}, {2.0, height}, {-1.0, height}, {-1.0, -height}};
  const double winding = winding_number(box, zeta_evaluator());
  const double rounded = std::round(winding);
  if (std::abs(winding - rounded) > 1e-6 || std::fmod(std::abs(rounded), 2.0) != 1.0) {
    throw CertificationError("argument principle winding " + std::to_string(winding) +
                             " is not an odd integer");
  }
  return static_cast<std::size_t>((rounded + 1.0) / 2.0);
}

Complex circle_log_zeta_integral(ComplexPoint center, double radius, double x) {
  if (!(radius > 0.0)) throw DomainError("circle radius must be positive");
  if (!(x > 0.0)) throw DomainError("circle_log_zeta_integral requires x > 0");
  constexpr int kPanels = 64;
  const double log_x = std::log(x);
  const double panel_width = kTwoPi / kPanels;
  const auto& nodes = quad::detail::kKronrodNodes;
  const auto& weights = quad::detail::kKronrodWeights;

  // Ascending theta nodes over (-pi, pi).
  std::vector<std::pair<double, double>> grid;
  grid.reserve(kPanels * 15);
  for (int p = 0; p < kPanels; ++p) {
    const double mid = -kPi + (p + 0.5) * panel_width;
    const double half = 0.5 * panel_width;
    for (int j = 0; j < 7; ++j) grid.emplace_back(mid - half * nodes[j], half * weights[j]);
    grid.emplace_back(mid, half * weights[7]);
    for (int j = 6; j >= 0; --j) grid.emplace_back(mid + half * nodes[j], half * weights[j]);
  }

  quad::CompensatedSum<Complex> sum;
  Complex log_value{};
  bool first = true;
  for (const auto& [theta, weight] : grid) {
    const Complex on_circle = std::polar(radius, theta);
    const Complex s = center.value() + on_circle;
    const Complex value = zeta::evaluate(s).value;
    const double arg = std::arg(value);
    if (first) {
      log_value = principal_log(value);
      first = false;
    } else {
      const double turns = std::round((log_value.imag() - arg) / kTwoPi);
      log_value = Complex(std::log(std::abs(value)), arg + kTwoPi * turns);
    }
    const Complex ds = Complex(0.0, 1.0) * on_circle;
    sum.add(weight * log_value * std::exp(s * log_x) / s * ds);
  }
  return sum.value();
}

}  // namespace riemann::branch
