#pragma once

// Non-trivial zeros on the critical line: sign changes of the Hardy Z
// function refined by bisection and certified by an argument-principle
// count, plus ingestion of external zero tables.

#include <cstddef>
#include <istream>

#include "riemann/zero_list.hpp"

namespace riemann::zeros {

/// Largest ordinate accepted by hardy_z and find_zeros_up_to.
inline constexpr double kMaxHeight = 250.0;

/// Z(t) = e^{i theta(t)} zeta(1/2 + it). Throws AccuracyError for t outside
/// (0, kMaxHeight] or when the discarded imaginary part exceeds 1e-9.
double hardy_z(double t);

struct FinderOptions {
  double grid_step = 0.05;
  double tolerance = 1e-10;  // bisection bracket width
  int max_iterations = 60;
};

/// All sign changes of Z on (0, T], each bisected to options.tolerance.
/// certified_through = T when the scan count equals the argument-principle
/// count; CertificationError otherwise.
ZeroList find_zeros_up_to(double height, const FinderOptions& options = {});

/// Parses one ordinate per line ('#' comments and blank lines skipped).
/// ParseError or OrderError carry the 1-based line number. A sample of up
/// to 10 ordinates (fixed seed) must satisfy |zeta(1/2 + i gamma)| < 1e-6,
/// otherwise ValidationError names the offender. The result is loaded and
/// uncertified.
ZeroList load_zeros(std::istream& in);

/// Certifies a list through `height`: the count of ordinates <= height must
/// match the argument-principle count. Returns the list with
/// certified_through raised to `height`; throws CertificationError.
ZeroList certify(const ZeroList& zeros, double height);

struct ZeroCountReport {
  double height = 0.0;
  std::size_t count = 0;
  double estimate = 0.0;  // (T/2pi) log(T/2pi) - T/2pi
  double band = 0.0;      // 2 log T
  bool within_band = false;

  friend bool operator==(const ZeroCountReport&, const ZeroCountReport&) = default;
};

/// Requires height <= zeros.certified_through (DomainError otherwise).
ZeroCountReport zero_count_check(double height, const ZeroList& zeros);

}  // namespace riemann::zeros
