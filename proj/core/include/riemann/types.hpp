#pragma once

#include <cmath>
#include <complex>
#include <cstddef>

#include "riemann/errors.hpp"

namespace riemann {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
inline constexpr double kLog2 = 0.69314718055994530941723212145817657;

/// A point s = sigma + i t of the complex plane. Both parts are finite;
/// construction from NaN or infinity throws DomainError.
class ComplexPoint {
 public:
  constexpr ComplexPoint() = default;
  ComplexPoint(double re, double im) : re_(re), im_(im) { check(); }
  ComplexPoint(Complex z) : re_(z.real()), im_(z.imag()) { check(); }  // NOLINT(implicit)

  [[nodiscard]] constexpr double re() const noexcept { return re_; }
  [[nodiscard]] constexpr double im() const noexcept { return im_; }
  [[nodiscard]] Complex value() const noexcept { return {re_, im_}; }
  operator Complex() const noexcept { return value(); }  // NOLINT(implicit)

  [[nodiscard]] ComplexPoint conj() const { return {re_, -im_}; }

  friend bool operator==(const ComplexPoint&, const ComplexPoint&) = default;

 private:
  void check() const {
    if (!std::isfinite(re_) || !std::isfinite(im_)) {
      throw DomainError("ComplexPoint requires finite components");
    }
  }

  double re_ = 0.0;
  double im_ = 0.0;
};

/// Tolerances and truncation limits shared by every numeric evaluation.
struct QuadratureConfig {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  std::size_t max_subdivisions = 4000;
  // Smallest symmetric exclusion half-width tried before a principal value
  // extrapolation is declared non-convergent.
  double pv_epsilon_floor = 1e-7;
  // Truncation cap for infinite sums.
  std::size_t tail_terms = 2'000'000;

  // Throws DomainError when a field violates its invariant.
  void validate() const;

  // Same config with both tolerances divided by `factor`.
  [[nodiscard]] QuadratureConfig tightened(double factor) const;

  friend bool operator==(const QuadratureConfig&, const QuadratureConfig&) = default;
};

/// A real result together with a bound on its absolute error.
struct Estimate {
  double value = 0.0;
  double error = 0.0;
};

struct ComplexEstimate {
  Complex value{};
  double error = 0.0;
};

}  // namespace riemann
