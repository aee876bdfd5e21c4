#pragma once

#include <cstddef>
#include <vector>

#include "reference_values.hpp"
#include "riemann/zero_list.hpp"

// The first `count` tabulated ordinates as a loaded, uncertified list.
inline riemann::ZeroList reference_zeros(std::size_t count = reference::kZeroOrdinates.size()) {
  std::vector<double> g(reference::kZeroOrdinates.begin(),
                        reference::kZeroOrdinates.begin() + static_cast<std::ptrdiff_t>(count));
  return riemann::ZeroList(std::move(g), riemann::ZeroSource::loaded, 0.0);
}
