#include "riemann/types.hpp"

#include <string>

namespace riemann {

void QuadratureConfig::validate() const {
  auto in_unit = [](double v) { return std::isfinite(v) && v > 0.0 && v < 1.0; };
  if (!in_unit(abs_tol)) throw DomainError("abs_tol must lie in (0, 1)");
  if (!in_unit(rel_tol)) throw DomainError("rel_tol must lie in (0, 1)");
  if (max_subdivisions < 8) throw DomainError("max_subdivisions must be at least 8");
  if (!(pv_epsilon_floor > 0.0) || !std::isfinite(pv_epsilon_floor)) {
    throw DomainError("pv_epsilon_floor must be positive");
  }
  if (tail_terms == 0) throw DomainError("tail_terms must be positive");
}

QuadratureConfig QuadratureConfig::tightened(double factor) const {
  QuadratureConfig out = *this;
  out.abs_tol /= factor;
  out.rel_tol /= factor;
  return out;
}

}  // namespace riemann
