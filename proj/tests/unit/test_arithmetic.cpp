#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "riemann/arithmetic.hpp"

using namespace riemann;
using namespace riemann::arith;

namespace {

const PrimeTable& table() {
  static const PrimeTable pt = sieve(20'000);
  return pt;
}

}  // namespace

TEST_CASE("sieve") {
  CHECK(sieve(10).primes() == std::vector<std::uint32_t>{2, 3, 5, 7});
  CHECK(sieve(2).primes() == std::vector<std::uint32_t>{2});
  CHECK(sieve(1'000'000).primes().size() == static_cast<std::size_t>(oracle::prime_count_segmented(1'000'000)));
  CHECK(sieve(1'000'000).pi(1'000'000) == 78498);
  CHECK_THROWS_AS(sieve(1), DomainError);
  CHECK_THROWS_AS(sieve(kMaxSieveLimit + 1), DomainError);

  const auto brute = oracle::primes_trial_division(5000);
  const PrimeTable pt = sieve(5000);
  REQUIRE(pt.primes().size() == brute.size());
  for (std::size_t i = 0; i < brute.size(); ++i) CHECK(pt.primes()[i] == brute[i]);
  for (std::int64_t n : {0, 1, 2, 4, 97, 100, 4999}) CHECK(pt.is_prime(n) == (std::count(brute.begin(), brute.end(), n) == 1));
  CHECK(pt.pi(100) == 25);
  CHECK(pt.pi(1) == 0);
  CHECK_THROWS_AS(static_cast<void>(pt.pi(5001)), DomainError);
}

TEST_CASE("roots") {
  CHECK(max_root_index(10.0) == 3);
  CHECK(max_root_index(8.0) == 3);
  CHECK(max_root_index(7.999) == 2);
  CHECK(max_root_index(1.5) == 0);
  CHECK(integer_root_floor(1000.0, 3) == std::pair<std::int64_t, bool>{10, true});
  CHECK(integer_root_floor(999.0, 3) == std::pair<std::int64_t, bool>{9, false});
  CHECK(integer_root_floor(243.0, 5) == std::pair<std::int64_t, bool>{3, true});
  CHECK(nth_root(1000.0, 3) == 10.0);
  CHECK(nth_root(2.0, 1) == 2.0);
}

TEST_CASE("big_f_step") {
  const auto& pt = table();
  CHECK(big_f_step(10.0, pt) == StepValue(4));
  CHECK(big_f_step(5.0, pt) == StepValue(5, 2));
  CHECK(big_f_step(2.0, pt) == StepValue(1, 2));
  CHECK(big_f_step(1.5, pt) == StepValue(0));
  CHECK(big_f_step(100.5, pt) == StepValue(25));
  CHECK_THROWS_AS(big_f_step(30'000.0, pt), DomainError);
}

TEST_CASE("small_f_step") {
  const auto& pt = table();
  CHECK(small_f_step(2.0, pt) == StepValue(1, 2));
  CHECK(small_f_step(3.0, pt) == StepValue(3, 2));
  CHECK(small_f_step(4.0, pt) == StepValue(9, 4));
  CHECK(small_f_step(10.0, pt) == StepValue(16, 3));
  CHECK(small_f_step(1.0, pt) == StepValue(0));
  CHECK_THROWS_AS(small_f_step(0.5, pt), DomainError);
}

TEST_CASE("small_f_step jumps by 1/n at each prime power") {
  const auto& pt = table();
  std::size_t checked = 0;
  for (std::uint32_t p : pt.primes()) {
    if (p > 1000) break;
    std::int64_t q = p;
    for (int n = 1; q <= 1000; ++n, q *= p) {
      CAPTURE(q);
      const auto x = static_cast<double>(q);
      const StepValue left = small_f_step(std::nextafter(x, 0.0), pt);
      const StepValue right = small_f_step(std::nextafter(x, 2000.0), pt);
      const StepValue at = small_f_step(x, pt);
      CHECK(right - left == StepValue(1, n));
      CHECK(at == (left + right) / StepValue(2));
      ++checked;
    }
  }
  CHECK(checked > 168);
}

TEST_CASE("moebius") {
  CHECK(moebius(1) == 1);
  CHECK(moebius(4) == 0);
  CHECK(moebius(6) == 1);
  CHECK(moebius(30) == -1);
  CHECK_THROWS_AS(moebius(0), DomainError);
  const auto mu = oracle::moebius_by_divisor_sums(10'000);
  for (int n = 1; n <= 10'000; ++n) {
    REQUIRE(moebius(n) == mu[static_cast<std::size_t>(n)]);
    REQUIRE(moebius(n, table()) == mu[static_cast<std::size_t>(n)]);
  }
  for (int n = 1; n <= 10'000; ++n) {
    int sum = 0;
    for (int d = 1; d * d <= n; ++d) {
      if (n % d != 0) continue;
      sum += moebius(d);
      if (d * d != n) sum += moebius(n / d);
    }
    REQUIRE(sum == (n == 1 ? 1 : 0));
  }
}

TEST_CASE("Moebius inversion of the step functions is exact") {
  const auto& pt = table();
  auto f = [&](double y) { return small_f_step(y, pt); };
  for (double x : {2.5, 10.0, 100.5}) CHECK(big_f_from_small_f(x, f) == big_f_step(x, pt));
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> dist(2.0, 10'000.0);
  for (int i = 0; i < 200; ++i) {
    const double x = dist(rng);
    CAPTURE(x);
    CHECK(big_f_from_small_f(x, f) == big_f_step(x, pt));
  }
  // Exact at prime powers too, where the half jumps stack.
  for (double x : {4.0, 8.0, 64.0, 729.0, 1024.0}) CHECK(big_f_from_small_f(x, f) == big_f_step(x, pt));

  auto as_real = [&](double y) { return boost::rational_cast<double>(small_f_step(y, pt)); };
  CHECK(big_f_from_small_f(100.5, as_real) == doctest::Approx(25.0).epsilon(1e-14));
  CHECK_THROWS_AS(big_f_from_small_f(1.0, as_real), DomainError);
}
