#include "riemann/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "riemann/quadrature.hpp"

namespace riemann::special {
namespace {

constexpr double kDefaultExclusion = 1e-2;
constexpr int kMinExtrapolationLevels = 3;

void require_above_one(double x, const char* what) {
  if (!(x > 1.0) || !std::isfinite(x)) {
    throw DomainError(std::string(what) + " requires finite x > 1");
  }
}

quad::Tolerance piece_tolerance(const QuadratureConfig& cfg, double share) {
  auto tol = quad::Tolerance::from(cfg);
  tol.abs_tol *= share;
  return tol;
}

// Integral of `folded` over [eps, outer], Richardson-extrapolated to
// eps -> 0. `folded` is the sum of the integrand at the two mirrored points,
// an even function of the offset, so the exclusion error has only odd powers.
template <typename Folded>
Estimate extrapolate_exclusion(Folded&& folded, double outer, double initial_width,
                               const QuadratureConfig& cfg, const char* what) {
  const auto tol = piece_tolerance(cfg, 0.05);
  double eps = std::min(initial_width, 0.5 * outer);
  if (!(eps > 0.0)) throw DomainError(std::string(what) + ": exclusion width must be positive");

  auto base = quad::integrate<double>(folded, eps, outer, tol);
  double running = base.value;
  double quad_error = base.error;
  quad::RichardsonTable table({1, 3, 5, 7, 9, 11});
  table.push(running);

  while (true) {
    const double next = 0.5 * eps;
    if (next < cfg.pv_epsilon_floor) {
      throw ConvergenceError(std::string(what) + ": principal value extrapolation did not settle "
                             "before the exclusion floor (last change " +
                             std::to_string(table.last_change()) + ")");
    }
    auto slice = quad::integrate<double>(folded, next, eps, tol);
    running += slice.value;
    quad_error += slice.error;
    table.push(running);
    eps = next;
    const double target = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(table.best()));
    if (table.levels() >= kMinExtrapolationLevels && table.last_change() < 0.25 * target) {
      break;
    }
  }
  return {table.best(), table.last_change() + quad_error};
}

// x^(-2n) * w^(2n-1) / log(x/w) over w in (0, 1): the integral of
// t^(-2n-1)/log t over (x, inf) after t = x/w.
quad::Result<double> power_log_tail_term(double x, int n, const quad::Tolerance& tol) {
  const double log_x = std::log(x);
  const double scale = std::exp(-2.0 * n * log_x);
  auto integrand = [&](double w) {
    return scale * std::pow(w, 2 * n - 1) / (log_x - std::log(w));
  };
  return quad::integrate<double>(integrand, 0.0, 1.0, tol);
}

}  // namespace

Estimate li_real_with_exclusion(double x, double initial_width, const QuadratureConfig& cfg) {
  require_above_one(x, "li_real");
  cfg.validate();
  const double half = std::min(x - 1.0, 1.0);
  const auto tol = piece_tolerance(cfg, 0.25);
  auto inv_log = [](double t) { return 1.0 / std::log(t); };

  Estimate out{};
  if (half < 1.0) {
    auto left = quad::integrate<double>(inv_log, 0.0, 1.0 - half, tol);
    out.value += left.value;
    out.error += left.error;
  }
  if (x > 1.0 + half) {
    auto right = quad::integrate<double>(inv_log, 1.0 + half, x, tol);
    out.value += right.value;
    out.error += right.error;
  }
  auto folded = [](double u) { return 1.0 / std::log1p(u) + 1.0 / std::log1p(-u); };
  auto core = extrapolate_exclusion(folded, half, initial_width, cfg, "li_real");
  out.value += core.value;
  out.error += core.error;
  return out;
}

Estimate li_real(double x, const QuadratureConfig& cfg) {
  return li_real_with_exclusion(x, kDefaultExclusion, cfg);
}

ComplexEstimate li_complex_power(double x, ComplexPoint rho, const QuadratureConfig& cfg) {
  require_above_one(x, "li_complex_power");
  cfg.validate();
  if (rho.im() == 0.0) {
    throw DomainError("li_complex_power: rho on the real axis puts the path through the pole");
  }
  const double log_x = std::log(x);
  const double u = rho.re() * log_x;
  const double v = rho.im() * log_x;

  // |integral from -inf to -M| <= e^{-M}/|v|; keep it below abs_tol/2.
  const double cutoff = std::max(1.0, std::log(2.0 / (cfg.abs_tol * std::abs(v))));
  const double lower = std::min(-cutoff, u - 1.0);
  const double tail_bound = std::exp(lower) / std::abs(v);

  auto integrand = [v](double sigma) { return Complex(std::exp(sigma), 0.0) / Complex(sigma, v); };
  auto tol = piece_tolerance(cfg, 0.5);
  auto line = quad::integrate<Complex>(integrand, lower, u, tol);
  const Complex phase = std::polar(1.0, v);
  const Complex indentation(0.0, v > 0.0 ? kPi : -kPi);
  return {phase * line.value + indentation, line.error + tail_bound};
}

double incomplete_gamma_zero(double x) {
  if (!(x > 0.0) || std::isnan(x)) {
    throw DomainError("incomplete_gamma_zero requires x > 0");
  }
  if (std::isinf(x)) return 0.0;
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  if (x <= 1.0) {
    double sum = 0.0;
    double term = 1.0;  // x^k / k!
    for (int k = 1; k < 200; ++k) {
      term *= x / k;
      const double contribution = (k % 2 == 1 ? term : -term) / k;
      sum += contribution;
      if (std::abs(contribution) < kEps * std::abs(sum)) break;
    }
    return -kEulerGamma - std::log(x) + sum;
  }
  // Modified Lentz evaluation of the continued fraction for E1.
  constexpr double kTiny = 1e-300;
  double b = x + 1.0;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 10000; ++i) {
    const double an = -static_cast<double>(i) * i;
    b += 2.0;
    d = 1.0 / (an * d + b);
    c = b + an / c;
    const double delta = c * d;
    h *= delta;
    if (std::abs(delta - 1.0) < kEps) {
      return h * std::exp(-x);
    }
  }
  throw ConvergenceError("incomplete_gamma_zero: continued fraction did not converge");
}

TailSum trivial_zero_tail(double x, const QuadratureConfig& cfg) {
  require_above_one(x, "trivial_zero_tail");
  cfg.validate();
  const double log_x = std::log(x);
  const double ratio = std::exp(-2.0 * log_x);
  const double one_minus_ratio = -std::expm1(-2.0 * log_x);
  const double threshold = cfg.abs_tol * one_minus_ratio;

  quad::CompensatedSum<double> sum;
  double term = 0.0;
  std::size_t terms = 0;
  for (std::size_t n = 2;; ++n) {
    term = incomplete_gamma_zero(2.0 * static_cast<double>(n) * log_x);
    sum.add(term);
    ++terms;
    if (term < threshold || terms >= cfg.tail_terms) break;
  }
  return {sum.value(), term * ratio / one_minus_ratio, terms};
}

Estimate pv_integral_with_exclusion(double x, double initial_width, const QuadratureConfig& cfg) {
  require_above_one(x, "pv_integral");
  cfg.validate();
  const double log_x = std::log(x);
  auto integrand = [log_x](double s) { return std::exp(s * log_x) / s; };
  auto left = quad::integrate<double>(integrand, -2.0, -1.0, piece_tolerance(cfg, 0.25));
  // x^u/u + x^-u/(-u) = 2 sinh(u log x)/u
  auto folded = [log_x](double u) { return 2.0 * std::sinh(u * log_x) / u; };
  auto core = extrapolate_exclusion(folded, 1.0, initial_width, cfg, "pv_integral");
  return {left.value + core.value, left.error + core.error};
}

Estimate pv_integral(double x, const QuadratureConfig& cfg) {
  return pv_integral_with_exclusion(x, kDefaultExclusion, cfg);
}

Estimate riemann_tail_integral(double x, const QuadratureConfig& cfg) {
  require_above_one(x, "riemann_tail_integral");
  cfg.validate();
  const double a = std::log(x);
  // Beyond U the integrand is below e^{-2u}/(u (1 - e^{-2U})).
  auto tail_bound = [](double upper) {
    return std::exp(-2.0 * upper) / (2.0 * upper * -std::expm1(-2.0 * upper));
  };
  double upper = a + 1.0;
  while (tail_bound(upper) > 0.25 * cfg.abs_tol) upper += 1.0;

  auto integrand = [](double u) { return 1.0 / (u * std::expm1(2.0 * u)); };
  auto body = quad::integrate<double>(integrand, a, upper, piece_tolerance(cfg, 0.5));
  return {body.value, body.error + tail_bound(upper)};
}

Estimate riemann_tail_integral_series(double x, const QuadratureConfig& cfg) {
  require_above_one(x, "riemann_tail_integral_series");
  cfg.validate();
  const double ratio = 1.0 / (x * x);
  const double one_minus_ratio = -std::expm1(-2.0 * std::log(x));
  const auto tol = piece_tolerance(cfg, 0.01);

  quad::CompensatedSum<double> sum;
  double quad_error = 0.0;
  double remainder = 0.0;
  for (std::size_t n = 1; n <= cfg.tail_terms; ++n) {
    auto term = power_log_tail_term(x, static_cast<int>(n), tol);
    sum.add(term.value);
    quad_error += term.error;
    remainder = term.value * ratio / one_minus_ratio;
    if (remainder < 0.25 * cfg.abs_tol) break;
  }
  return {sum.value(), quad_error + remainder};
}

std::pair<double, double> term_integral_identity_check(double x, int n,
                                                       const QuadratureConfig& cfg) {
  require_above_one(x, "term_integral_identity_check");
  if (n < 1) throw DomainError("term_integral_identity_check requires n >= 1");
  cfg.validate();
  auto tol = piece_tolerance(cfg, 0.01);
  const double left = power_log_tail_term(x, n, tol).value;
  const double bound = 2.0 * n * std::log(x);
  auto integrand = [](double t) { return std::exp(-t) / t; };
  const double right = quad::integrate_to_infinity<double>(integrand, bound, tol).value;
  return {left, right};
}

Estimate log_reciprocal_integral(double x, const QuadratureConfig& cfg) {
  require_above_one(x, "log_reciprocal_integral");
  cfg.validate();
  const double upper = 1.0 / (x * x);
  auto integrand = [](double u) { return 1.0 / std::log(u); };
  auto r = quad::integrate<double>(integrand, 0.0, upper, piece_tolerance(cfg, 0.5));
  return {r.value, r.error};
}

}  // namespace riemann::special
