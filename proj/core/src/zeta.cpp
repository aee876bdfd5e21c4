#include "riemann/zeta.hpp"

#include <array>
#include <cmath>
#include <string>
#include <vector>

namespace riemann::zeta {
namespace {

constexpr int kMaxTerms = 400;

// log(k + 1) for k = 0 .. kMaxTerms - 1.
const std::array<double, kMaxTerms>& log_table() {
  static const std::array<double, kMaxTerms> table = [] {
    std::array<double, kMaxTerms> t{};
    for (int k = 0; k < kMaxTerms; ++k) t[k] = std::log(static_cast<double>(k + 1));
    return t;
  }();
  return table;
}

// Number of Borwein terms for relative accuracy ~1e-17 at height t. The
// truncation bound grows like (1 + 2|t|) e^{pi |t| / 2} / (3 + sqrt 8)^n.
int borwein_terms(double t) {
  const double abs_t = std::abs(t);
  const double digits = abs_t * kPi / 2.0 / std::log(10.0) + std::log10(3.0 * (1.0 + 2.0 * abs_t)) + 18.0;
  const double per_term = std::log10(3.0 + std::sqrt(8.0));
  return std::min(kMaxTerms, static_cast<int>(std::ceil(digits / per_term)) + 2);
}

// Weights (d_n - d_k)/d_n of Borwein's eta acceleration.
std::vector<double> borwein_weights(int n) {
  std::vector<double> partial(static_cast<std::size_t>(n) + 1);
  double term = 1.0;  // n (n+i-1)! 4^i / ((n-i)! (2i)!) at i = 0
  double sum = term;
  partial[0] = sum;
  for (int i = 0; i < n; ++i) {
    term *= 4.0 * (n + i) * (n - i) / ((2.0 * i + 1.0) * (2.0 * i + 2.0));
    sum += term;
    partial[static_cast<std::size_t>(i) + 1] = sum;
  }
  const double total = partial[static_cast<std::size_t>(n)];
  std::vector<double> weights(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) weights[static_cast<std::size_t>(k)] = (total - partial[static_cast<std::size_t>(k)]) / total;
  return weights;
}

Complex expm1(Complex z) {
  if (std::abs(z) < 1e-3) {
    // Taylor to fifth order; the sixth-order remainder is below 1e-20.
    return z * (1.0 + z * (0.5 + z * (1.0 / 6.0 + z * (1.0 / 24.0 + z * (1.0 / 120.0)))));
  }
  return std::exp(z) - 1.0;
}

// eta(s) and eta'(s) by Borwein's method. Valid for Re s >= 0.
void eta_with_derivative(Complex s, Complex& eta, Complex& eta_prime) {
  const int n = borwein_terms(s.imag());
  const auto weights = borwein_weights(n);
  const auto& logs = log_table();
  Complex sum{};
  Complex dsum{};
  for (int k = 0; k < n; ++k) {
    const double l = logs[static_cast<std::size_t>(k)];
    const Complex power = std::exp(-s * l);  // (k+1)^{-s}
    const double w = (k % 2 == 0 ? 1.0 : -1.0) * weights[static_cast<std::size_t>(k)];
    sum += w * power;
    dsum -= w * l * power;
  }
  eta = sum;
  eta_prime = dsum;
}

ZetaValue right_half_plane(Complex s) {
  Complex eta;
  Complex eta_prime;
  eta_with_derivative(s, eta, eta_prime);
  // zeta = eta / (1 - 2^{1-s}); the denominator vanishes at s = 1.
  const Complex exponent = (1.0 - s) * kLog2;
  const Complex denom = -expm1(exponent);
  const Complex denom_prime = std::exp(exponent) * kLog2;
  return {eta / denom, eta_prime / eta - denom_prime / denom};
}

// sin(pi w) and cos(pi w) with the real part of w reduced exactly first, so
// values near integers keep full relative accuracy.
void sincos_pi(Complex w, Complex& sine, Complex& cosine) {
  const double m = std::round(w.real());
  const double r = w.real() - m;
  const double y = kPi * w.imag();
  const double sign = std::fmod(std::abs(m), 2.0) == 1.0 ? -1.0 : 1.0;
  const double sr = std::sin(kPi * r);
  const double cr = std::cos(kPi * r);
  sine = sign * Complex(sr * std::cosh(y), cr * std::sinh(y));
  cosine = sign * Complex(cr * std::cosh(y), -sr * std::sinh(y));
}

// A logarithm of sin(pi w), stable for large |Im w|. Only used inside exp()
// so the branch is irrelevant.
Complex log_sin_pi(Complex w) {
  const Complex z = kPi * w;
  const Complex i(0.0, 1.0);
  if (std::abs(z.imag()) < 20.0) {
    Complex sine;
    Complex cosine;
    sincos_pi(w, sine, cosine);
    return std::log(sine);
  }
  if (z.imag() > 0.0) {
    // sin z = (i/2) e^{-iz} (1 - e^{2iz})
    return -i * z + std::log(1.0 - std::exp(2.0 * i * z)) + Complex(-kLog2, kPi / 2.0);
  }
  // sin z = (1/(2i)) e^{iz} (1 - e^{-2iz})
  return i * z + std::log(1.0 - std::exp(-2.0 * i * z)) + Complex(-kLog2, -kPi / 2.0);
}

ZetaValue left_half_plane(Complex s) {
  // zeta(s) = chi(s) zeta(1 - s),
  // chi(s) = 2^s pi^{s-1} sin(pi s / 2) Gamma(1 - s).
  const Complex reflected = 1.0 - s;
  const ZetaValue mirror = right_half_plane(reflected);
  const double log_pi = std::log(kPi);
  const Complex log_chi = s * kLog2 + (s - 1.0) * log_pi + log_sin_pi(0.5 * s) + log_gamma(reflected);
  Complex sine;
  Complex cosine;
  sincos_pi(0.5 * s, sine, cosine);
  const Complex chi_log_deriv = kLog2 + log_pi + (kPi / 2.0) * (cosine / sine) - digamma(reflected);
  return {std::exp(log_chi) * mirror.value, chi_log_deriv - mirror.log_deriv};
}

void check_box(Complex s) {
  if (!in_validated_box(s)) {
    throw AccuracyError("zeta evaluator is not validated at s = (" + std::to_string(s.real()) + ", " +
                        std::to_string(s.imag()) + ")");
  }
}

// Bernoulli numbers B_2 .. B_16.
constexpr std::array<double, 8> kBernoulli = {1.0 / 6.0,   -1.0 / 30.0,     1.0 / 42.0, -1.0 / 30.0,
                                              5.0 / 66.0,  -691.0 / 2730.0, 7.0 / 6.0,  -3617.0 / 510.0};
constexpr double kStirlingRadius = 15.0;

}  // namespace

bool in_validated_box(Complex s) noexcept {
  return std::isfinite(s.real()) && std::isfinite(s.imag()) && s.real() >= kMinSigma &&
         s.real() <= kMaxSigma && std::abs(s.imag()) <= kMaxOrdinate;
}

ZetaValue evaluate(Complex s) {
  check_box(s);
  if (s == Complex(1.0, 0.0)) throw PoleError("zeta has a pole at s = 1");
  return s.real() >= 0.0 ? right_half_plane(s) : left_half_plane(s);
}

Complex zeta(ComplexPoint s) {
  const Complex z = s.value();
  check_box(z);
  if (z == Complex(1.0, 0.0)) throw PoleError("zeta has a pole at s = 1");
  return evaluate(z).value;
}

Complex zeta_log_deriv(ComplexPoint s) {
  const ZetaValue v = evaluate(s.value());
  // |zeta / zeta'| approximates the distance to the nearest simple zero or pole.
  if (!(std::abs(v.log_deriv) * kExclusionRadius < 1.0) || v.value == Complex{}) {
    throw SingularityError("zeta_log_deriv: s is within the exclusion radius of a zero or the pole");
  }
  return v.log_deriv;
}

Complex log_gamma(Complex z) {
  Complex shift_log{};
  while (std::abs(z) < kStirlingRadius) {
    shift_log += std::log(z);
    z += 1.0;
  }
  const Complex inv = 1.0 / z;
  const Complex inv2 = inv * inv;
  Complex series{};
  Complex power = inv;
  for (std::size_t k = 0; k < kBernoulli.size(); ++k) {
    const double twok = 2.0 * static_cast<double>(k + 1);
    series += kBernoulli[k] / (twok * (twok - 1.0)) * power;
    power *= inv2;
  }
  return (z - 0.5) * std::log(z) - z + 0.5 * std::log(kTwoPi) + series - shift_log;
}

Complex digamma(Complex z) {
  Complex shift{};
  while (std::abs(z) < kStirlingRadius) {
    shift += 1.0 / z;
    z += 1.0;
  }
  const Complex inv = 1.0 / z;
  const Complex inv2 = inv * inv;
  Complex series{};
  Complex power = inv2;
  for (std::size_t k = 0; k < kBernoulli.size(); ++k) {
    const double twok = 2.0 * static_cast<double>(k + 1);
    series += kBernoulli[k] / twok * power;
    power *= inv2;
  }
  return std::log(z) - 0.5 * inv - series - shift;
}

double riemann_siegel_theta(double t) {
  return log_gamma(Complex(0.25, 0.5 * t)).imag() - 0.5 * t * std::log(kPi);
}

}  // namespace riemann::zeta
