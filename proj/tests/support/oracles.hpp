#pragma once

// Reference implementations used only by the tests. Each one follows a
// different route from the library code it checks.

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <vector>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

namespace oracle {

using Complex = std::complex<double>;
using mp_real = boost::multiprecision::cpp_bin_float_50;
using mp_complex = boost::multiprecision::cpp_complex_50;
using mp_complex_wide = boost::multiprecision::cpp_complex_100;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline const mp_real kEulerGammaMp("0.5772156649015328606065120900824024310421593359399235988");

// li(x) = gamma + log log x + sum (log x)^k / (k k!), in 50 digits.
inline double li_series(double x) {
  const mp_real l = log(mp_real(x));
  mp_real sum = 0;
  mp_real term = 1;
  for (int k = 1; k < 2000; ++k) {
    term *= l / k;
    const mp_real add = term / k;
    sum += add;
    if (abs(add) < abs(sum) * mp_real("1e-45")) break;
  }
  return static_cast<double>(kEulerGammaMp + log(l) + sum);
}

// -E1(-z) + sign(Im z) pi i written as gamma + Log z + sum z^k/(k k!),
// which is Li(e^z) on the indented contour. 100 digits; the series
// cancels about |z| / log(10) of them, so keep |z| below 150.
inline Complex li_exp_series(Complex z) {
  const mp_complex_wide w(z.real(), z.imag());
  mp_complex_wide sum = 0;
  mp_complex_wide term = 1;
  for (int k = 1; k < 5000; ++k) {
    term *= w / k;
    const mp_complex_wide add = term / k;
    sum += add;
    if (k > 10 && abs(add) < 1e-40) break;
  }
  const mp_complex_wide value = mp_complex_wide(kEulerGammaMp) + log(w) + sum;
  return {static_cast<double>(value.real()), static_cast<double>(value.imag())};
}

// Gamma(0, x) by exp-sinh quadrature of the defining integral.
inline double gamma0_quadrature(double x) {
  boost::math::quadrature::exp_sinh<double> integrator;
  return integrator.integrate([x](double u) { return std::exp(-(x + u)) / (x + u); });
}

// zeta(s) by Euler-Maclaurin: N terms of the Dirichlet series, the integral
// remainder and Bernoulli corrections up to B_{2M}, in 50 digits.
inline Complex zeta_euler_maclaurin(Complex s_in, int n_terms = 0, int m_terms = 20) {
  if (n_terms == 0) n_terms = 60 + 2 * static_cast<int>(std::abs(s_in));
  const mp_complex s(s_in.real(), s_in.imag());
  mp_complex sum = 0;
  for (int n = 1; n < n_terms; ++n) sum += exp(-s * log(mp_real(n)));
  const mp_real n_big(n_terms);
  const mp_complex n_pow = exp(-s * log(n_big));
  sum += n_pow * n_big / (s - mp_real(1)) + n_pow / mp_real(2);
  // B_2k / (2k)! coefficients via the recurrence on Bernoulli numbers.
  std::vector<mp_real> bern(2 * m_terms + 1, mp_real(0));
  bern[0] = 1;
  for (int m = 1; m <= 2 * m_terms; ++m) {
    mp_real acc = 0;
    mp_real binom = 1;  // C(m+1, k)
    for (int k = 0; k < m; ++k) {
      acc += binom * bern[static_cast<std::size_t>(k)];
      binom = binom * (m + 1 - k) / (k + 1);
    }
    bern[static_cast<std::size_t>(m)] = -acc / mp_real(m + 1);
  }
  mp_complex rising = s;  // s (s+1) ... (s+2k-2)
  mp_real factorial = 2;  // (2k)!
  mp_complex n_power = n_pow / n_big;  // N^{-s-1}
  for (int k = 1; k <= m_terms; ++k) {
    sum += bern[static_cast<std::size_t>(2 * k)] / factorial * rising * n_power;
    rising *= (s + mp_real(2 * k - 1)) * (s + mp_real(2 * k));
    factorial *= mp_real(2 * k + 1) * mp_real(2 * k + 2);
    n_power /= n_big * n_big;
  }
  return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

// P.V. of int_{-2}^{1} x^s/s ds from the indented contour
// [-2, -1] followed by the upper unit semicircle from -1 to 1; the
// semicircle of vanishing radius contributes -pi i. Returns the contour
// integral plus pi i: the real part is the principal value and the
// imaginary part must vanish.
inline Complex pv_semicircle(double x) {
  const double l = std::log(x);
  boost::math::quadrature::gauss_kronrod<double, 61> gk;
  const double straight =
      gk.integrate([l](double s) { return std::exp(s * l) / s; }, -2.0, -1.0, 15, 1e-15);
  auto arc = [l](double theta) {
    const Complex s = std::polar(1.0, theta);
    return std::exp(s * l) / s * Complex(0.0, 1.0) * s;
  };
  // theta runs from pi down to 0.
  const double re = -gk.integrate([&](double t) { return arc(t).real(); }, 0.0, kPi, 15, 1e-15);
  const double im = -gk.integrate([&](double t) { return arc(t).imag(); }, 0.0, kPi, 15, 1e-15);
  return Complex(straight + re, im) + Complex(0.0, kPi);
}

// Tail integral int_x^inf dt / (t (t^2 - 1) log t) by tanh-sinh after
// t = x / u, u in (0, 1].
inline double tail_integral_tanh_sinh(double x) {
  boost::math::quadrature::tanh_sinh<double> integrator;
  return integrator.integrate(
      [x](double u) {
        if (u <= 0.0) return 0.0;
        const double t = x / u;
        return 1.0 / (u * (t * t - 1.0) * std::log(t));
      },
      0.0, 1.0);
}

// Primes <= n by trial division.
inline std::vector<std::int64_t> primes_trial_division(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t k = 2; k <= n; ++k) {
    bool prime = true;
    for (std::int64_t d = 2; d * d <= k; ++d) {
      if (k % d == 0) {
        prime = false;
        break;
      }
    }
    if (prime) out.push_back(k);
  }
  return out;
}

// pi(n) by a segmented sieve with segment length `segment`.
inline std::int64_t prime_count_segmented(std::int64_t n, std::int64_t segment = 32768) {
  if (n < 2) return 0;
  const auto root = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n))) + 1;
  std::vector<std::int64_t> base = primes_trial_division(root);
  std::int64_t count = 0;
  std::vector<char> mark(static_cast<std::size_t>(segment));
  for (std::int64_t lo = 2; lo <= n; lo += segment) {
    const std::int64_t hi = std::min(n, lo + segment - 1);
    std::fill(mark.begin(), mark.end(), 1);
    for (std::int64_t p : base) {
      if (p * p > hi) break;
      std::int64_t start = std::max(p * p, (lo + p - 1) / p * p);
      for (std::int64_t j = start; j <= hi; j += p) mark[static_cast<std::size_t>(j - lo)] = 0;
    }
    for (std::int64_t k = lo; k <= hi; ++k) count += mark[static_cast<std::size_t>(k - lo)];
  }
  return count;
}

// mu(n) from the full divisor sum recursion sum_{d | n} mu(d) = [n == 1].
inline std::vector<int> moebius_by_divisor_sums(int limit) {
  std::vector<int> mu(static_cast<std::size_t>(limit) + 1, 0);
  mu[1] = 1;
  for (int n = 1; n <= limit; ++n) {
    for (int m = 2 * n; m <= limit; m += n) mu[static_cast<std::size_t>(m)] -= mu[static_cast<std::size_t>(n)];
  }
  return mu;
}

}  // namespace oracle
