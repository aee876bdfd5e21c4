#include "riemann/zero_finder.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "riemann/branch.hpp"
#include "riemann/zeta.hpp"

namespace riemann {

ZeroList ZeroList::truncated(std::size_t count) const {
  if (count >= ordinates_.size()) return *this;
  std::vector<double> kept(ordinates_.begin(), ordinates_.begin() + static_cast<std::ptrdiff_t>(count));
  const double next = ordinates_[count];
  const double prev = count == 0 ? 0.0 : ordinates_[count - 1];
  return ZeroList(std::move(kept), source_, std::min(certified_through_, 0.5 * (prev + next)));
}

std::size_t ZeroList::count_below(double t) const noexcept {
  return static_cast<std::size_t>(std::upper_bound(ordinates_.begin(), ordinates_.end(), t) - ordinates_.begin());
}

namespace zeros {
namespace {

constexpr double kImagResidue = 1e-9;
constexpr double kLoadTolerance = 1e-6;
constexpr std::size_t kSampleSize = 10;

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::size_t count_by_argument_principle(double height) {
  try {
    return branch::argument_principle_count(height);
  } catch (const StepCollapseError& e) {
    throw CertificationError(std::string("argument-principle contour at T = ") + std::to_string(height) +
                             " passes too close to a zero: " + e.what());
  }
}

}  // namespace

double hardy_z(double t) {
  if (!(t > 0.0 && t <= kMaxHeight)) {
    throw AccuracyError("hardy_z is validated on (0, " + std::to_string(kMaxHeight) + "], got t = " +
                        std::to_string(t));
  }
  const Complex value = zeta::evaluate(Complex(0.5, t)).value * std::polar(1.0, zeta::riemann_siegel_theta(t));
  if (std::abs(value.imag()) > kImagResidue * std::max(1.0, std::abs(value.real()))) {
    throw AccuracyError("hardy_z: imaginary residue " + std::to_string(value.imag()) + " at t = " +
                        std::to_string(t));
  }
  return value.real();
}

ZeroList find_zeros_up_to(double height, const FinderOptions& options) {
  if (!(height > 0.0 && height <= kMaxHeight)) {
    throw DomainError("find_zeros_up_to: T must lie in (0, " + std::to_string(kMaxHeight) + "]");
  }
  if (!(options.grid_step > 0.0) || !(options.tolerance > 0.0) || options.max_iterations < 1) {
    throw DomainError("find_zeros_up_to: invalid finder options");
  }
  std::vector<double> found;
  const auto steps = static_cast<std::size_t>(std::ceil(height / options.grid_step));
  double t_prev = std::min(options.grid_step, height);
  double z_prev = hardy_z(t_prev);
  for (std::size_t k = 2; t_prev < height && k <= steps + 1; ++k) {
    const double t = std::min(static_cast<double>(k) * options.grid_step, height);
    const double z = hardy_z(t);
    if (z == 0.0) {
      found.push_back(t);
    } else if (z_prev != 0.0 && std::signbit(z) != std::signbit(z_prev)) {
      double lo = t_prev;
      double hi = t;
      double z_lo = z_prev;
      for (int it = 0; it < options.max_iterations && hi - lo > options.tolerance; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double z_mid = hardy_z(mid);
        if (z_mid == 0.0) {
          lo = hi = mid;
          break;
        }
        if (std::signbit(z_mid) == std::signbit(z_lo)) {
          lo = mid;
          z_lo = z_mid;
        } else {
          hi = mid;
        }
      }
      if (hi - lo > options.tolerance) {
        throw ConvergenceError("bisection did not reach the requested tolerance near t = " + std::to_string(lo));
      }
      found.push_back(0.5 * (lo + hi));
    }
    t_prev = t;
    z_prev = z;
  }
  const std::size_t expected = count_by_argument_principle(height);
  if (expected != found.size()) {
    throw CertificationError("scan found " + std::to_string(found.size()) + " sign changes below T = " +
                             std::to_string(height) + " but the argument principle counts " +
                             std::to_string(expected) + "; retry with a finer grid");
  }
  return ZeroList(std::move(found), ZeroSource::computed, height);
}

ZeroList load_zeros(std::istream& in) {
  std::vector<double> ordinates;
  std::vector<std::size_t> lines;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), value);
    if (ec != std::errc() || ptr != line.data() + line.size() || !std::isfinite(value)) {
      throw ParseError("not a decimal ordinate: '" + line + "'", line_no);
    }
    if (!(value > 0.0)) throw ParseError("ordinate must be positive", line_no);
    if (!ordinates.empty() && !(value > ordinates.back())) {
      throw OrderError("ordinates must be strictly increasing", line_no);
    }
    ordinates.push_back(value);
    lines.push_back(line_no);
  }

  // Spot validation on the ordinates the evaluator can reach.
  std::vector<std::size_t> eligible;
  for (std::size_t i = 0; i < ordinates.size(); ++i) {
    if (ordinates[i] <= zeta::kMaxOrdinate) eligible.push_back(i);
  }
  std::vector<std::size_t> sample;
  std::sample(eligible.begin(), eligible.end(), std::back_inserter(sample), kSampleSize, std::mt19937_64(20240917));
  for (std::size_t i : sample) {
    const double gamma = ordinates[i];
    const double modulus = std::abs(zeta::evaluate(Complex(0.5, gamma)).value);
    if (!(modulus < kLoadTolerance)) {
      throw ValidationError("|zeta(1/2 + i gamma)| = " + std::to_string(modulus) + " at line " +
                                std::to_string(lines[i]),
                            gamma);
    }
  }
  return ZeroList(std::move(ordinates), ZeroSource::loaded, 0.0);
}

ZeroList certify(const ZeroList& zeros, double height) {
  if (!(height > 0.0 && height <= kMaxHeight)) {
    throw DomainError("certify: T must lie in (0, " + std::to_string(kMaxHeight) + "]");
  }
  const std::size_t expected = count_by_argument_principle(height);
  const std::size_t have = zeros.count_below(height);
  if (expected != have) {
    throw CertificationError("list has " + std::to_string(have) + " ordinates below T = " + std::to_string(height) +
                             " but the argument principle counts " + std::to_string(expected));
  }
  std::vector<double> copy(zeros.ordinates().begin(), zeros.ordinates().end());
  return ZeroList(std::move(copy), zeros.source(), std::max(height, zeros.certified_through()));
}

ZeroCountReport zero_count_check(double height, const ZeroList& zeros) {
  if (!(height > 1.0)) throw DomainError("zero_count_check requires T > 1");
  if (height > zeros.certified_through()) {
    throw DomainError("zero_count_check: T = " + std::to_string(height) + " exceeds the certified height " +
                      std::to_string(zeros.certified_through()));
  }
  ZeroCountReport r;
  r.height = height;
  r.count = zeros.count_below(height);
  const double scaled = height / kTwoPi;
  r.estimate = scaled * std::log(scaled) - scaled;
  r.band = 2.0 * std::log(height);
  r.within_band = std::abs(static_cast<double>(r.count) - r.estimate) <= r.band;
  return r;
}

}  // namespace zeros
}  // namespace riemann
