#pragma once

// f(x) assembled from its analytic parts, in the classical form
//   Li(x) - sum [Li(x^rho) + Li(x^(1-rho))] + tail integral - log 2
// and in the residue form
//   P.V. int_{-2}^{1} x^s/s ds - sum [...] + sum_{n>=2} Gamma(0, 2n log x) - log 2,
// plus F(x) by Moebius inversion and a check of the identity linking the
// two forms.

#include <cstddef>
#include <string_view>

#include "riemann/types.hpp"
#include "riemann/zero_list.hpp"

namespace riemann::formula {

enum class Form { riemann, residue };

std::string_view to_string(Form form) noexcept;
Form form_from_string(std::string_view name);  // DomainError on unknown names

struct EvalRequest {
  double x = 0.0;
  ZeroList zeros;
  QuadratureConfig cfg;
  Form form = Form::riemann;
};

struct FormulaBreakdown {
  Form form = Form::riemann;
  double x = 0.0;
  double leading = 0.0;   // Li(x), or the P.V. integral
  double zero_sum = 0.0;  // -sum Re[Li(x^rho) + Li(x^(1-rho))]
  double tail = 0.0;      // tail integral, or the Gamma(0, .) sum
  double constant = 0.0;  // -log 2
  double total = 0.0;
  double imag_residue = 0.0;  // imaginary part left over by the zero sum
  std::size_t zeros_used = 0;
  double est_truncation_error = 0.0;
  double quadrature_error = 0.0;  // sum of the reported quadrature bounds

  friend bool operator==(const FormulaBreakdown&, const FormulaBreakdown&) = default;
};

/// Requires form == riemann and x > 1. Zeros are placed at 1/2 + i gamma and
/// summed in increasing gamma.
FormulaBreakdown f_riemann(const EvalRequest& req);

/// Requires form == residue and x > 1.
FormulaBreakdown f_residue(const EvalRequest& req);

/// Dispatches on req.form.
FormulaBreakdown evaluate(const EvalRequest& req);

/// Size of the oscillating remainder left by truncating the zero sum after
/// the zeros in `zeros`. Empirical envelope, not a bound.
double truncation_envelope(double x, const ZeroList& zeros);

/// F(x) = sum mu(n)/n f(x^(1/n)) over the classical-form f, with the terms
/// for x^(1/n) <= 2 set to zero. Requires x > 2.
double big_f_analytic(double x, const ZeroList& zeros, const QuadratureConfig& cfg = {});

struct IdentityReport {
  double x = 0.0;
  double li = 0.0;
  double tail_integral = 0.0;
  double pv_integral = 0.0;
  double gamma_tail = 0.0;
  double lhs = 0.0;  // li + tail_integral
  double rhs = 0.0;  // pv_integral + gamma_tail
  double difference = 0.0;
  // int_{2 log x}^inf e^-t/t dt against -int_0^{1/x^2} du/log u.
  double cov_left = 0.0;
  double cov_right = 0.0;
  double cov_difference = 0.0;
  double error_bound = 0.0;  // sum of the reported quadrature bounds

  friend bool operator==(const IdentityReport&, const IdentityReport&) = default;
};

IdentityReport verify_identity(double x, const QuadratureConfig& cfg = {});

}  // namespace riemann::formula
