#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

#include "geomlab/error.hpp"
#include "geomlab/tensor_core/tensor.hpp"

namespace geomlab {

/// |lhs - rhs|_inf / (1 + max(|lhs|_inf, |rhs|_inf)).  Non-finite input gives +inf
/// so a broken evaluation can never pass.
inline double normalized_residual(const Tensor& lhs, const Tensor& rhs) {
  if (!(lhs.valence() == rhs.valence()) || lhs.dim() != rhs.dim())
    throw ArgumentError("normalized_residual: operands differ in shape");
  double diff = 0.0, a = 0.0, b = 0.0;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (!std::isfinite(lhs[i]) || !std::isfinite(rhs[i])) return std::numeric_limits<double>::infinity();
    diff = std::max(diff, std::abs(lhs[i] - rhs[i]));
    a = std::max(a, std::abs(lhs[i]));
    b = std::max(b, std::abs(rhs[i]));
  }
  return diff / (1.0 + std::max(a, b));
}

inline double normalized_residual(double lhs, double rhs) {
  if (!std::isfinite(lhs) || !std::isfinite(rhs)) return std::numeric_limits<double>::infinity();
  return std::abs(lhs - rhs) / (1.0 + std::max(std::abs(lhs), std::abs(rhs)));
}

}  // namespace geomlab
