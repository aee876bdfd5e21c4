// End-to-end checks. One PASS/FAIL line per criterion; exit status 1 if
// any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdarg>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "riemann/arithmetic.hpp"
#include "riemann/branch.hpp"
#include "riemann/explicit_formula.hpp"
#include "riemann/special_functions.hpp"
#include "riemann/zero_finder.hpp"

using namespace riemann;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;

  [[gnu::format(printf, 3, 4)]] void require(bool ok, const char* fmt, ...) {
    char buf[256];
    va_list args;
    va_start(args, fmt);
    std::vsnprintf(buf, sizeof buf, fmt, args);
    va_end(args);
    if (!detail.empty()) detail += "; ";
    detail += buf;
    if (!ok) {
      detail += " [x]";
      pass = false;
    }
  }
};

// The 100 zeros every formula criterion uses, certified through T.
const ZeroList& hundred_zeros() {
  static const ZeroList zl = zeros::find_zeros_up_to(237.5);
  return zl;
}

formula::FormulaBreakdown eval(double x, formula::Form form) {
  formula::EvalRequest req;
  req.x = x;
  req.zeros = hundred_zeros();
  req.form = form;
  return formula::evaluate(req);
}

Outcome form_equivalence() {
  Outcome o;
  const auto t0 = Clock::now();
  o.require(hundred_zeros().size() == 100, "zeros=%zu", hundred_zeros().size());
  double worst = 0.0;
  for (double x : {5.0, 10.0, 50.0, 200.0}) {
    const double d = std::abs(eval(x, formula::Form::riemann).total - eval(x, formula::Form::residue).total);
    worst = std::max(worst, d);
  }
  o.require(worst <= 1e-7, "max |f_riemann - f_residue| = %.2e", worst);
  const double elapsed = seconds_since(t0);
  o.require(elapsed <= 30.0, "%.2f s", elapsed);
  return o;
}

Outcome smooth_identity() {
  Outcome o;
  double worst = 0.0;
  for (double x : {3.0, 5.0, 10.0, 50.0, 200.0}) {
    const double lhs = special::li_real(x).value + special::riemann_tail_integral(x).value;
    const double rhs = special::pv_integral(x).value + special::trivial_zero_tail(x).value;
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  o.require(worst <= 1e-7, "identity max diff %.2e", worst);
  double worst_term = 0.0;
  for (double x : {std::exp(1.0), 10.0}) {
    for (int n = 1; n <= 5; ++n) {
      const auto [l, r] = special::term_integral_identity_check(x, n);
      worst_term = std::max(worst_term, std::abs(l - r));
    }
  }
  o.require(worst_term <= 1e-10, "per-term max diff %.2e", worst_term);
  return o;
}

// Midpoints between consecutive prime powers in (10, 500).
std::vector<double> prime_power_midpoints(const arith::PrimeTable& pt) {
  std::vector<std::int64_t> powers;
  for (std::uint32_t p : pt.primes()) {
    for (std::int64_t q = p; q <= pt.limit(); q *= p) powers.push_back(q);
  }
  std::sort(powers.begin(), powers.end());
  std::vector<double> mids;
  for (std::size_t i = 0; i + 1 < powers.size(); ++i) {
    const double m = 0.5 * static_cast<double>(powers[i] + powers[i + 1]);
    if (m > 10.0 && m < 500.0) mids.push_back(m);
  }
  return mids;
}

Outcome prime_counts() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto pt = arith::sieve(600);
  std::vector<double> xs = prime_power_midpoints(pt);
  std::shuffle(xs.begin(), xs.end(), std::mt19937_64(20240917));
  xs.resize(20);
  std::sort(xs.begin(), xs.end());
  int rounding_failures = 0;
  double worst = 0.0;
  double worst_x = 0.0;
  for (double x : xs) {
    const double analytic = formula::big_f_analytic(x, hundred_zeros());
    const double exact = boost::rational_cast<double>(arith::big_f_step(x, pt));
    if (std::lround(analytic) != std::lround(exact)) ++rounding_failures;
    if (std::abs(analytic - exact) > worst) {
      worst = std::abs(analytic - exact);
      worst_x = x;
    }
  }
  o.require(rounding_failures == 0, "%d of 20 rounding mismatches", rounding_failures);
  o.require(worst < 0.35, "max |F - pi| = %.4f at x = %.1f", worst, worst_x);
  const double elapsed = seconds_since(t0);
  o.require(elapsed <= 120.0, "%.2f s", elapsed);
  return o;
}

Outcome real_axis_geometry() {
  Outcome o;
  const auto m = branch::measure_cut_jump({-1.9, 0.9}, 0.0, 0.05);
  o.require(std::abs(m.jump - kTwoPi) <= 1e-3, "jump - 2pi = %.2e", m.jump - kTwoPi);
  double worst_upper = 0.0;
  for (double u : m.upper_limits) worst_upper = std::max(worst_upper, std::abs(u + kPi));
  o.require(worst_upper <= 1e-3, "upper limit on (-2,1) off -pi by %.2e", worst_upper);
  double worst_zero = 0.0;
  for (double s : {-3.9, -3.5, -3.0, -2.5, -2.1}) {
    worst_zero = std::max(worst_zero, std::abs(branch::upper_cut_limit(s, 0.0, 0.05)));
  }
  o.require(worst_zero <= 1e-3, "upper limit on (-4,-2) off 0 by %.2e", worst_zero);
  return o;
}

Outcome critical_geometry() {
  Outcome o;
  const ZeroList zl = hundred_zeros().truncated(5);
  for (std::size_t n : {1, 2}) {
    const double j = branch::measure_critical_cut_jump(zl, n, -1.0, 0.05);
    o.require(std::abs(j + kTwoPi) <= 1e-3, "gamma_%zu jump + 2pi = %.2e", n, j + kTwoPi);
  }
  const double gamma = 0.5 * (zl.gamma(1) + zl.gamma(2));
  const auto r = branch::rogue_experiment({0.1, gamma}, {0.9, gamma});
  o.require(std::abs(r.left_jump - 2.0 * kTwoPi) <= 1e-2, "rogue left - 4pi = %.2e", r.left_jump - 2.0 * kTwoPi);
  o.require(std::abs(r.middle_jump - kTwoPi) <= 1e-2, "rogue middle - 2pi = %.2e", r.middle_jump - kTwoPi);
  return o;
}

Outcome residues() {
  Outcome o;
  double at_pole = 0.0;
  double at_trivial = 0.0;
  for (double phi : {0.0, kPi / 2, kPi, 3 * kPi / 2}) {
    at_pole = std::max(at_pole, std::abs(branch::directional_residue({1.0, 0.0}, phi) + 1.0));
    at_trivial = std::max(at_trivial, std::abs(branch::directional_residue({-2.0, 0.0}, phi) - 1.0));
  }
  o.require(at_pole <= 1e-6, "s=1: %.2e", at_pole);
  o.require(at_trivial <= 1e-6, "s=-2: %.2e", at_trivial);
  return o;
}

Outcome zero_finding() {
  Outcome o;
  const ZeroList to100 = zeros::find_zeros_up_to(100.0);
  const std::size_t ap = branch::argument_principle_count(100.0);
  o.require(to100.size() == 29 && ap == 29 && to100.certified_through() == 100.0, "N(100) = %zu, winding %zu",
            to100.size(), ap);
  zeros::FinderOptions tight;
  tight.tolerance = 1e-13;
  const double g = zeros::find_zeros_up_to(15.0).gamma(1);
  const double g_tight = zeros::find_zeros_up_to(15.0, tight).gamma(1);
  o.require(std::abs(g - g_tight) <= 1e-9, "gamma_1 shift %.1e", std::abs(g - g_tight));
  const ZeroList to200 = zeros::find_zeros_up_to(200.0);
  for (double t : {50.0, 100.0, 200.0}) {
    const auto r = zeros::zero_count_check(t, to200);
    o.require(r.within_band, "T=%g: |%zu - %.3f| <= %.2f", t, r.count, r.estimate, r.band);
  }
  return o;
}

Outcome exactness() {
  Outcome o;
  const auto pt = arith::sieve(20'000);
  auto f = [&](double y) { return arith::small_f_step(y, pt); };
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> dist(2.0, 10'000.0);
  int mismatches = 0;
  for (int i = 0; i < 200; ++i) {
    const double x = dist(rng);
    if (arith::big_f_from_small_f(x, f) != arith::big_f_step(x, pt)) ++mismatches;
  }
  o.require(mismatches == 0, "%d of 200 inversion mismatches", mismatches);
  const bool printed = f(2.0) == arith::StepValue(1, 2) && f(3.0) == arith::StepValue(3, 2) &&
                       f(4.0) == arith::StepValue(9, 4);
  o.require(printed, "f(2), f(3), f(4) = 1/2, 3/2, 9/4");
  return o;
}

Outcome vanishing_circles() {
  Outcome o;
  const double radii[] = {1e-2, 1e-3, 1e-4};
  const ComplexPoint centers[] = {{0.5, hundred_zeros().gamma(1)}, {-2.0, 0.0}, {1.0, 0.0}};
  const char* names[] = {"rho_1", "-2", "1"};
  auto predicted = [](double e) { return e * std::log(1.0 / e); };
  for (int c = 0; c < 3; ++c) {
    double size[3];
    for (int k = 0; k < 3; ++k) size[k] = std::abs(branch::circle_log_zeta_integral(centers[c], radii[k], 10.0));
    for (int k = 0; k < 2; ++k) {
      const double q = (size[k] / size[k + 1]) / (predicted(radii[k]) / predicted(radii[k + 1]));
      o.require(q >= 0.5 && q <= 2.0, "%s q%d=%.2f", names[c], k, q);
    }
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "form equivalence", form_equivalence},
      {2, "smooth-term identity", smooth_identity},
      {3, "prime counts from 100 zeros", prime_counts},
      {4, "real-axis cut geometry", real_axis_geometry},
      {5, "critical and rogue cuts", critical_geometry},
      {6, "residues of zeta'/zeta", residues},
      {7, "zero finding", zero_finding},
      {8, "exact step functions", exactness},
      {9, "vanishing circles", vanishing_circles},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("criterion %d %s: %s (%s) %.2fs\n", c.id, c.name, o.pass ? "PASS" : "FAIL", o.detail.c_str(),
                seconds_since(t0));
    std::fflush(stdout);
    failures += o.pass ? 0 : 1;
  }
  std::printf("%d of 9 criteria passed\n", 9 - failures);
  return failures == 0 ? 0 : 1;
}
