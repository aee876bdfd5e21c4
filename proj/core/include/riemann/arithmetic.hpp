#pragma once

// Exact sieve-based prime counting: F(x) and f(x) with the half-jump
// convention, the Moebius function, and the inversion that recovers F from
// f. Step values are exact rationals.

#include <cstdint>
#include <type_traits>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "riemann/errors.hpp"

namespace riemann::arith {

inline constexpr std::int64_t kMaxSieveLimit = 100'000'000;

using StepValue = boost::rational<std::int64_t>;

class PrimeTable {
 public:
  PrimeTable() = default;
  PrimeTable(std::int64_t limit, std::vector<std::uint32_t> primes)
      : limit_(limit), primes_(std::move(primes)) {}

  [[nodiscard]] std::int64_t limit() const noexcept { return limit_; }
  [[nodiscard]] const std::vector<std::uint32_t>& primes() const noexcept { return primes_; }

  // Number of primes <= n; n may not exceed limit().
  [[nodiscard]] std::int64_t pi(std::int64_t n) const;
  [[nodiscard]] bool is_prime(std::int64_t n) const;

 private:
  std::int64_t limit_ = 0;
  std::vector<std::uint32_t> primes_;
};

/// Sieve of Eratosthenes; DomainError unless 2 <= limit <= 1e8.
PrimeTable sieve(std::int64_t limit);

/// Largest n with 2^n <= x, i.e. floor(log x / log 2), computed exactly.
/// Zero for x < 2.
int max_root_index(double x);

/// Largest integer m >= 0 with m^n <= x, and whether m^n == x.
std::pair<std::int64_t, bool> integer_root_floor(double x, int n);

/// x^(1/n), snapped to the exact integer root when x is a perfect n-th power.
double nth_root(double x, int n);

/// Number of primes strictly below x, plus 1/2 when x is itself prime.
/// Requires 0 <= x <= pt.limit().
StepValue big_f_step(double x, const PrimeTable& pt);

/// Sum over n <= log x / log 2 of big_f_step(x^(1/n)) / n. Requires
/// 1 <= x <= pt.limit().
StepValue small_f_step(double x, const PrimeTable& pt);

/// mu(n) by trial division. DomainError for n < 1.
int moebius(std::int64_t n);

/// mu(n) by factoring over the table; needs n <= pt.limit().
int moebius(std::int64_t n, const PrimeTable& pt);

namespace detail {
template <typename R>
R inversion_weight(int mu, int n) {
  if constexpr (std::is_same_v<R, StepValue>) {
    return StepValue(mu, n);
  } else {
    return static_cast<R>(mu) / static_cast<R>(n);
  }
}
}  // namespace detail

/// Sum over n <= log x / log 2 of mu(n)/n * f_eval(x^(1/n)). Works for exact
/// step oracles (StepValue results) and for real-valued analytic f alike.
template <typename F>
auto big_f_from_small_f(double x, F&& f_eval) {
  using R = std::decay_t<decltype(f_eval(x))>;
  if (!(x > 1.0)) throw DomainError("big_f_from_small_f requires x > 1");
  R total{};
  const int n_max = max_root_index(x);
  for (int n = 1; n <= n_max; ++n) {
    const int mu = moebius(n);
    if (mu == 0) continue;
    total += detail::inversion_weight<R>(mu, n) * f_eval(nth_root(x, n));
  }
  return total;
}

}  // namespace riemann::arith
