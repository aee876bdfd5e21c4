#pragma once

// Adaptive Gauss-Kronrod (7/15) quadrature for real- and complex-valued
// integrands, plus the small numeric helpers the special functions share.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <queue>
#include <span>
#include <string>
#include <vector>

#include "riemann/errors.hpp"
#include "riemann/types.hpp"

namespace riemann::quad {

template <typename T>
struct Result {
  T value{};
  double error = 0.0;
  std::size_t evaluations = 0;
};

struct Tolerance {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  std::size_t max_subdivisions = 4000;

  static Tolerance from(const QuadratureConfig& cfg) {
    return {cfg.abs_tol, cfg.rel_tol, cfg.max_subdivisions};
  }
};

namespace detail {

inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

// Gauss weights for the odd Kronrod nodes 1, 3, 5, 7.
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(const std::complex<double>& v) { return std::abs(v); }

template <typename T>
struct Panel {
  double a;
  double b;
  T value;
  double error;
  double resabs;
  friend bool operator<(const Panel& l, const Panel& r) { return l.error < r.error; }
};

template <typename T, typename F>
Panel<T> kronrod_panel(F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  T kronrod = f(center) * kKronrodWeights[7];
  T gauss = f(center) * kGaussWeights[3];
  double resabs = magnitude(kronrod);
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kKronrodNodes[j];
    const T f1 = f(center - dx);
    const T f2 = f(center + dx);
    kronrod += (f1 + f2) * kKronrodWeights[j];
    resabs += (magnitude(f1) + magnitude(f2)) * kKronrodWeights[j];
    if (j % 2 == 1) {
      gauss += (f1 + f2) * kGaussWeights[j / 2];
    }
  }
  const T value = kronrod * half;
  const double error = magnitude((kronrod - gauss) * half);
  return {a, b, value, error, resabs * std::abs(half)};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod integration of f over [a, b].
/// Stops once the summed error estimate is below
/// max(abs_tol, rel_tol * |I|, roundoff floor); throws ConvergenceError when
/// max_subdivisions panels are exhausted first.
template <typename T, typename F>
Result<T> integrate(F&& f, double a, double b, const Tolerance& tol) {
  if (a == b) {
    return {};
  }
  using Panel = detail::Panel<T>;
  std::priority_queue<Panel> queue;
  Panel first = detail::kronrod_panel<T>(f, a, b);
  T total = first.value;
  double total_error = first.error;
  double resabs = first.resabs;
  queue.push(first);
  std::size_t panels = 1;
  constexpr double kEps = std::numeric_limits<double>::epsilon();

  auto target = [&] {
    return std::max({tol.abs_tol, tol.rel_tol * detail::magnitude(total), 50.0 * kEps * resabs});
  };

  while (total_error > target()) {
    if (panels >= tol.max_subdivisions) {
      throw ConvergenceError("adaptive quadrature exhausted " + std::to_string(panels) +
                             " subdivisions (error " + std::to_string(total_error) + ")");
    }
    Panel worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(worst.a < mid && mid < worst.b)) {
      // Panel cannot be split in double precision; accept its contribution.
      total_error -= worst.error;
      worst.error = 0.0;
      queue.push(worst);
      if (queue.top().error == 0.0) break;
      continue;
    }
    Panel left = detail::kronrod_panel<T>(f, worst.a, mid);
    Panel right = detail::kronrod_panel<T>(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    resabs += left.resabs + right.resabs - worst.resabs;
    queue.push(left);
    queue.push(right);
    ++panels;
  }

  // Re-sum from the panels to shed the drift of the running updates.
  T sum{};
  double err = 0.0;
  while (!queue.empty()) {
    sum += queue.top().value;
    err += queue.top().error;
    queue.pop();
  }
  return {sum, std::max(err, 0.0), (2 * panels - 1) * 15};
}

/// Integral of f over [a, inf) through t = a + u / (1 - u).
template <typename T, typename F>
Result<T> integrate_to_infinity(F&& f, double a, const Tolerance& tol) {
  auto mapped = [&](double u) -> T {
    const double one_minus = 1.0 - u;
    const double t = a + u / one_minus;
    if (!std::isfinite(t)) return T{};
    return f(t) * (1.0 / (one_minus * one_minus));
  };
  return integrate<T>(mapped, 0.0, 1.0, tol);
}

/// Compensated (Neumaier) summation.
template <typename T>
class CompensatedSum {
 public:
  void add(T v) {
    const T t = sum_ + v;
    if (detail::magnitude(sum_) >= detail::magnitude(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  [[nodiscard]] T value() const { return sum_ + comp_; }

 private:
  T sum_{};
  T comp_{};
};

/// Richardson extrapolation table for a sequence computed at step sizes
/// h, h/2, h/4, ... whose error expansion contains the given powers of h.
class RichardsonTable {
 public:
  explicit RichardsonTable(std::vector<int> powers) : powers_(std::move(powers)) {}

  // Adds the estimate at the next (halved) step and returns the most
  // extrapolated value available.
  double push(double estimate) {
    std::vector<double> row{estimate};
    const std::size_t depth = std::min(rows_.size(), powers_.size());
    for (std::size_t j = 0; j < depth; ++j) {
      const double factor = std::ldexp(1.0, powers_[j]) - 1.0;
      row.push_back(row[j] + (row[j] - rows_.back()[j]) / factor);
    }
    rows_.push_back(std::move(row));
    return rows_.back().back();
  }

  [[nodiscard]] std::size_t levels() const noexcept { return rows_.size(); }

  // |best(current) - best(previous)|, or +inf with fewer than two rows.
  [[nodiscard]] double last_change() const {
    if (rows_.size() < 2) return std::numeric_limits<double>::infinity();
    return std::abs(rows_.back().back() - rows_[rows_.size() - 2].back());
  }

  [[nodiscard]] double best() const { return rows_.back().back(); }

 private:
  std::vector<int> powers_;
  std::vector<std::vector<double>> rows_;
};

}  // namespace riemann::quad
