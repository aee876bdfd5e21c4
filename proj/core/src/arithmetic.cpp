#include "riemann/arithmetic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace riemann::arith {
namespace {

// m^n, or -1 once it exceeds 2^53.
std::int64_t checked_power(std::int64_t m, int n) {
  constexpr std::int64_t kExact = std::int64_t{1} << 53;
  std::int64_t r = 1;
  for (int i = 0; i < n; ++i) {
    if (m != 0 && r > kExact / m) return -1;
    r *= m;
  }
  return r;
}

bool power_le(std::int64_t m, int n, double x) {
  const std::int64_t p = checked_power(m, n);
  return p >= 0 && static_cast<double>(p) <= x;
}

void check_range(double x, const PrimeTable& pt, const char* what) {
  if (!std::isfinite(x) || x > static_cast<double>(pt.limit())) {
    throw DomainError(std::string(what) + ": x exceeds the prime table limit");
  }
}

}  // namespace

std::int64_t PrimeTable::pi(std::int64_t n) const {
  if (n > limit_) throw DomainError("PrimeTable::pi beyond the sieve limit");
  if (n < 2) return 0;
  return std::upper_bound(primes_.begin(), primes_.end(), static_cast<std::uint64_t>(n)) - primes_.begin();
}

bool PrimeTable::is_prime(std::int64_t n) const {
  if (n > limit_) throw DomainError("PrimeTable::is_prime beyond the sieve limit");
  if (n < 2) return false;
  return std::binary_search(primes_.begin(), primes_.end(), static_cast<std::uint32_t>(n));
}

PrimeTable sieve(std::int64_t limit) {
  if (limit < 2 || limit > kMaxSieveLimit) throw DomainError("sieve limit must lie in [2, 1e8]");
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  std::vector<std::uint32_t> primes;
  for (std::int64_t i = 2; i <= limit; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    primes.push_back(static_cast<std::uint32_t>(i));
    for (std::int64_t j = i * i; j <= limit; j += i) composite[static_cast<std::size_t>(j)] = true;
  }
  return PrimeTable(limit, std::move(primes));
}

int max_root_index(double x) {
  int n = 0;
  double power = 2.0;
  while (power <= x) {
    ++n;
    power *= 2.0;
  }
  return n;
}

std::pair<std::int64_t, bool> integer_root_floor(double x, int n) {
  if (n < 1) throw DomainError("integer_root_floor requires n >= 1");
  if (!(x >= 0.0) || x > 9.0e15) throw DomainError("integer_root_floor: x out of range");
  auto m = static_cast<std::int64_t>(std::floor(std::pow(x, 1.0 / n)));
  while (m > 0 && !power_le(m, n, x)) --m;
  while (power_le(m + 1, n, x)) ++m;
  return {m, static_cast<double>(checked_power(m, n)) == x};
}

double nth_root(double x, int n) {
  if (n == 1) return x;
  const auto [m, exact] = integer_root_floor(x, n);
  return exact ? static_cast<double>(m) : std::pow(x, 1.0 / n);
}

StepValue big_f_step(double x, const PrimeTable& pt) {
  if (!(x >= 0.0)) throw DomainError("big_f_step requires x >= 0");
  check_range(x, pt, "big_f_step");
  const auto [m, exact] = integer_root_floor(x, 1);
  if (!exact) return StepValue(pt.pi(m));
  // x = m: primes strictly below m, and half a jump if m is prime.
  StepValue below(pt.pi(m - 1));
  if (pt.is_prime(m)) below += StepValue(1, 2);
  return below;
}

StepValue small_f_step(double x, const PrimeTable& pt) {
  if (!(x >= 1.0)) throw DomainError("small_f_step requires x >= 1");
  check_range(x, pt, "small_f_step");
  StepValue total(0);
  const int n_max = max_root_index(x);
  for (int n = 1; n <= n_max; ++n) {
    const auto [m, exact] = integer_root_floor(x, n);
    StepValue term(pt.pi(exact ? m - 1 : m));
    if (exact && pt.is_prime(m)) term += StepValue(1, 2);
    total += term / StepValue(n);
  }
  return total;
}

int moebius(std::int64_t n) {
  if (n < 1) throw DomainError("moebius requires n >= 1");
  int sign = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  return n > 1 ? -sign : sign;
}

int moebius(std::int64_t n, const PrimeTable& pt) {
  if (n < 1) throw DomainError("moebius requires n >= 1");
  if (n > pt.limit()) throw DomainError("moebius: n exceeds the prime table limit");
  int sign = 1;
  for (std::uint32_t p : pt.primes()) {
    const auto q = static_cast<std::int64_t>(p);
    if (q * q > n) break;
    if (n % q != 0) continue;
    n /= q;
    if (n % q == 0) return 0;
    sign = -sign;
  }
  return n > 1 ? -sign : sign;
}

}  // namespace riemann::arith
