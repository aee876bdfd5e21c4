#include "riemann/explicit_formula.hpp"

#include <cmath>
#include <string>

#include "riemann/arithmetic.hpp"
#include "riemann/quadrature.hpp"
#include "riemann/special_functions.hpp"

namespace riemann::formula {
namespace {

struct ZeroSum {
  double value = 0.0;
  double imag = 0.0;
  double error = 0.0;
};

ZeroSum sum_over_zeros(double x, const ZeroList& zeros, const QuadratureConfig& cfg) {
  quad::CompensatedSum<Complex> sum;
  double error = 0.0;
  for (double gamma : zeros.ordinates()) {
    const ComplexPoint rho(0.5, gamma);
    const ComplexPoint mirror(0.5, -gamma);  // 1 - rho
    const auto a = special::li_complex_power(x, rho, cfg);
    const auto b = special::li_complex_power(x, mirror, cfg);
    sum.add(a.value + b.value);
    error += a.error + b.error;
  }
  const Complex total = sum.value();
  return {-total.real(), -total.imag(), error};
}

void require_x(double x) {
  if (!(x > 1.0) || !std::isfinite(x)) throw DomainError("explicit formula requires finite x > 1");
}

FormulaBreakdown assemble(const EvalRequest& req, const Estimate& leading, const Estimate& tail) {
  const ZeroSum zs = sum_over_zeros(req.x, req.zeros, req.cfg);
  FormulaBreakdown b;
  b.form = req.form;
  b.x = req.x;
  b.leading = leading.value;
  b.zero_sum = zs.value;
  b.tail = tail.value;
  b.constant = -kLog2;
  b.total = b.leading + b.zero_sum + b.tail + b.constant;
  b.imag_residue = zs.imag;
  b.zeros_used = req.zeros.size();
  b.est_truncation_error = truncation_envelope(req.x, req.zeros);
  b.quadrature_error = leading.error + tail.error + zs.error;
  return b;
}

}  // namespace

std::string_view to_string(Form form) noexcept { return form == Form::riemann ? "riemann" : "residue"; }

Form form_from_string(std::string_view name) {
  if (name == "riemann") return Form::riemann;
  if (name == "residue") return Form::residue;
  throw DomainError("unknown formula form '" + std::string(name) + "'");
}

FormulaBreakdown f_riemann(const EvalRequest& req) {
  if (req.form != Form::riemann) throw DomainError("f_riemann called with a residue-form request");
  require_x(req.x);
  req.cfg.validate();
  return assemble(req, special::li_real(req.x, req.cfg), special::riemann_tail_integral(req.x, req.cfg));
}

FormulaBreakdown f_residue(const EvalRequest& req) {
  if (req.form != Form::residue) throw DomainError("f_residue called with a riemann-form request");
  require_x(req.x);
  req.cfg.validate();
  const auto tail = special::trivial_zero_tail(req.x, req.cfg);
  return assemble(req, special::pv_integral(req.x, req.cfg), {tail.value, tail.error});
}

FormulaBreakdown evaluate(const EvalRequest& req) {
  return req.form == Form::riemann ? f_riemann(req) : f_residue(req);
}

double truncation_envelope(double x, const ZeroList& zeros) {
  require_x(x);
  const double log_x = std::log(x);
  if (zeros.empty()) return 2.0 * std::sqrt(x) / log_x;
  // Remainder of sum 2 Re x^rho / (rho log x) beyond gamma_N, integrated
  // against the zero density log(gamma / 2 pi) / 2 pi. The prefactor is
  // fitted to the observed remainder for x < 500 and N <= 100 zeros.
  const double gamma_n = zeros.ordinates().back();
  const double density = std::log(std::max(gamma_n / kTwoPi, kPi / 2.0)) / kTwoPi;
  return 12.0 * std::sqrt(x) * density / (gamma_n * log_x) * (1.0 + 1.0 / log_x);
}

double big_f_analytic(double x, const ZeroList& zeros, const QuadratureConfig& cfg) {
  if (!(x > 2.0) || !std::isfinite(x)) throw DomainError("big_f_analytic requires x > 2");
  return arith::big_f_from_small_f(x, [&](double y) {
    if (y <= 2.0) return 0.0;
    return f_riemann({y, zeros, cfg, Form::riemann}).total;
  });
}

IdentityReport verify_identity(double x, const QuadratureConfig& cfg) {
  require_x(x);
  cfg.validate();
  IdentityReport r;
  r.x = x;
  const auto li = special::li_real(x, cfg);
  const auto tail = special::riemann_tail_integral(x, cfg);
  const auto pv = special::pv_integral(x, cfg);
  const auto gamma_tail = special::trivial_zero_tail(x, cfg);
  r.li = li.value;
  r.tail_integral = tail.value;
  r.pv_integral = pv.value;
  r.gamma_tail = gamma_tail.value;
  r.lhs = r.li + r.tail_integral;
  r.rhs = r.pv_integral + r.gamma_tail;
  r.difference = r.lhs - r.rhs;

  const double lower = 2.0 * std::log(x);
  const auto left = quad::integrate_to_infinity<double>([](double t) { return std::exp(-t) / t; }, lower,
                                                        quad::Tolerance::from(cfg));
  const auto right = special::log_reciprocal_integral(x, cfg);
  r.cov_left = left.value;
  r.cov_right = -right.value;
  r.cov_difference = r.cov_left - r.cov_right;
  r.error_bound = li.error + tail.error + pv.error + gamma_tail.error + left.error + right.error;
  return r;
}

}  // namespace riemann::formula
