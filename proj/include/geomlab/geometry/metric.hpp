#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <utility>

#include "geomlab/error.hpp"
#include "geomlab/tensor_core/field.hpp"
#include "geomlab/tensor_core/tensor.hpp"

namespace geomlab {

/// Relative pivot size below which a metric counts as degenerate.
inline constexpr double kDegeneracyThreshold = 1e-12;

/// A symmetric (0,2) field that must be Lorentzian (one negative, n-1 positive
/// eigenvalues) wherever it is evaluated.
class MetricField {
 public:
  MetricField() = default;
  explicit MetricField(TensorField components) : field_(std::move(components)) {
    if (!(field_.valence() == Valence{0, 2})) throw ArgumentError("MetricField: components must be a (0,2) field");
    if (field_.dim() < 3) throw ArgumentError("MetricField: chart dimension must be at least 3");
  }

  int dim() const { return field_.dim(); }
  const TensorField& field() const { return field_; }

  /// Jets of g_ij at p; throws GeometryError when g is asymmetric, degenerate or not Lorentzian.
  JetTensor jets(const Point& p, int order) const {
    JetTensor g = field_.jets(p, order);
    check_lorentzian(value_of(g));
    return g;
  }
  Tensor value(const Point& p) const { return value_of(jets(p, 0)); }

  static void check_lorentzian(const Tensor& g) {
    const int n = g.dim();
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (g(i, j) != g(j, i)) throw GeometryError("metric is not symmetric");
        m(i, j) = g(i, j);
      }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
    const auto& ev = es.eigenvalues();
    const double scale = ev.cwiseAbs().maxCoeff();
    int negative = 0;
    for (int i = 0; i < n; ++i) {
      if (std::abs(ev(i)) <= kDegeneracyThreshold * scale) throw GeometryError("metric is degenerate");
      if (ev(i) < 0.0) ++negative;
    }
    if (negative != 1) throw GeometryError("metric is not Lorentzian");
  }

 private:
  TensorField field_;
};

/// Gauss-Jordan inverse of a jet-valued matrix, (0,2) -> (2,0).  The result is
/// exact to the input's order: derivatives of g^{-1} come out of the same arithmetic.
inline JetTensor inverse_metric(const JetTensor& g) {
  if (!(g.valence() == Valence{0, 2})) throw ArgumentError("inverse_metric: expected a (0,2) tensor");
  const int n = g.dim();
  std::vector<Jet> a(g.components().begin(), g.components().end());
  std::vector<Jet> inv(static_cast<std::size_t>(n * n), Jet(0.0));
  for (int i = 0; i < n; ++i) inv[static_cast<std::size_t>(i * n + i)] = Jet(1.0);
  auto at = [n](std::vector<Jet>& m, int i, int j) -> Jet& { return m[static_cast<std::size_t>(i * n + j)]; };

  double scale = 0.0;
  for (const Jet& c : a) scale = std::max(scale, std::abs(c.value()));
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(at(a, r, col).value()) > std::abs(at(a, pivot, col).value())) pivot = r;
    if (std::abs(at(a, pivot, col).value()) <= kDegeneracyThreshold * scale)
      throw GeometryError("inverse_metric: singular metric");
    if (pivot != col)
      for (int j = 0; j < n; ++j) {
        std::swap(at(a, pivot, j), at(a, col, j));
        std::swap(at(inv, pivot, j), at(inv, col, j));
      }
    const Jet rp = reciprocal(at(a, col, col));
    for (int j = 0; j < n; ++j) {
      at(a, col, j) = at(a, col, j) * rp;
      at(inv, col, j) = at(inv, col, j) * rp;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const Jet factor = at(a, r, col);
      if (factor.is_constant() && factor.value() == 0.0) continue;
      for (int j = 0; j < n; ++j) {
        at(a, r, j) = at(a, r, j) - factor * at(a, col, j);
        at(inv, r, j) = at(inv, r, j) - factor * at(inv, col, j);
      }
    }
  }
  // Symmetrize the value-level roundoff of the elimination order away.
  JetTensor r({2, 0}, n, std::move(inv));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Jet s = 0.5 * (r(i, j) + r(j, i));
      r(i, j) = s;
      r(j, i) = s;
    }
  return r;
}

inline Tensor inverse_metric(const Tensor& g) { return value_of(inverse_metric(lift(g))); }

/// Lower the single contravariant index of a vector: X_i = g_ij X^j.
inline Tensor lower(const Tensor& g, const Tensor& v) { return apply(g, {v}); }

inline double inner(const Tensor& g, const Tensor& x, const Tensor& y) { return scalar_value(apply(g, {x, y})); }

}  // namespace geomlab
