#pragma once

#include <cmath>
#include <initializer_list>
#include <span>
#include <vector>

#include "geomlab/error.hpp"

namespace geomlab {

/// Coordinates of a point in a single chart.
class Point {
 public:
  Point() = default;
  explicit Point(std::vector<double> coords) : coords_(std::move(coords)) { validate(); }
  Point(std::initializer_list<double> coords) : coords_(coords) { validate(); }

  int dim() const { return static_cast<int>(coords_.size()); }
  double operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
  std::span<const double> coords() const { return coords_; }

  friend bool operator==(const Point&, const Point&) = default;

 private:
  void validate() const {
    for (double c : coords_)
      if (!std::isfinite(c)) throw ArgumentError("Point: non-finite coordinate");
  }

  std::vector<double> coords_;
};

}  // namespace geomlab
