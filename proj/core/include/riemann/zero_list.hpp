#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "riemann/errors.hpp"

namespace riemann {

enum class ZeroSource { computed, loaded };

/// Ascending ordinates gamma_1 < gamma_2 < ... of non-trivial zeros on the
/// critical line. `certified_through` is the height T below which the list
/// is known to be complete (0 when uncertified). Immutable once built.
class ZeroList {
 public:
  ZeroList() = default;
  ZeroList(std::vector<double> ordinates, ZeroSource source, double certified_through)
      : ordinates_(std::move(ordinates)), source_(source), certified_through_(certified_through) {
    for (std::size_t i = 0; i < ordinates_.size(); ++i) {
      if (!(ordinates_[i] > 0.0)) throw DomainError("zero ordinates must be positive");
      if (i > 0 && !(ordinates_[i] > ordinates_[i - 1])) {
        throw DomainError("zero ordinates must be strictly increasing");
      }
    }
  }

  [[nodiscard]] std::span<const double> ordinates() const noexcept { return ordinates_; }
  [[nodiscard]] std::size_t size() const noexcept { return ordinates_.size(); }
  [[nodiscard]] bool empty() const noexcept { return ordinates_.empty(); }
  [[nodiscard]] ZeroSource source() const noexcept { return source_; }
  [[nodiscard]] double certified_through() const noexcept { return certified_through_; }

  // 1-based, matching gamma_n.
  [[nodiscard]] double gamma(std::size_t n) const {
    if (n == 0 || n > ordinates_.size()) throw DomainError("zero index out of range");
    return ordinates_[n - 1];
  }

  // The first `count` zeros (or all of them); certification carries over
  // only up to the last kept ordinate.
  [[nodiscard]] ZeroList truncated(std::size_t count) const;

  // Number of ordinates <= t.
  [[nodiscard]] std::size_t count_below(double t) const noexcept;

  friend bool operator==(const ZeroList&, const ZeroList&) = default;

 private:
  std::vector<double> ordinates_;
  ZeroSource source_ = ZeroSource::computed;
  double certified_through_ = 0.0;
};

}  // namespace riemann
