#pragma once

#include <optional>
#include <string>
#include <utility>

#include "geomlab/error.hpp"
#include "geomlab/geometry/connection.hpp"
#include "geomlab/geometry/metric.hpp"
#include "geomlab/tensor_core/field.hpp"

namespace geomlab {

/// The structure fields (phi, xi, eta, g) on one chart.  eta is derived from g
/// and xi; an explicitly supplied eta is kept only so the axiom checker can test
/// it against the derived one.
class LPStructure {
 public:
  LPStructure() = default;
  LPStructure(TensorField phi, TensorField xi, MetricField metric, std::optional<TensorField> explicit_eta = {})
      : phi_(std::move(phi)), xi_(std::move(xi)), metric_(std::move(metric)), explicit_eta_(std::move(explicit_eta)) {
    const int n = metric_.dim();
    if (!(phi_.valence() == Valence{1, 1}) || phi_.dim() != n) throw ArgumentError("LPStructure: phi must be a (1,1) field");
    if (!(xi_.valence() == Valence{1, 0}) || xi_.dim() != n) throw ArgumentError("LPStructure: xi must be a vector field");
    if (explicit_eta_ && (!(explicit_eta_->valence() == Valence{0, 1}) || explicit_eta_->dim() != n))
      throw ArgumentError("LPStructure: eta must be a 1-form field");
  }

  int dim() const { return metric_.dim(); }
  const TensorField& phi() const { return phi_; }
  const TensorField& xi() const { return xi_; }
  const MetricField& metric() const { return metric_; }
  const std::optional<TensorField>& explicit_eta() const { return explicit_eta_; }

 private:
  TensorField phi_;
  TensorField xi_;
  MetricField metric_;
  std::optional<TensorField> explicit_eta_;
};

/// Structure fields expanded at one point.  g, g_inv, xi, eta and phi carry
/// `order` derivative levels, the Levi-Civita coefficients one less.
struct StructureJets {
  int order = 0;
  JetTensor g, g_inv, xi, eta, phi, gamma;
};

/// t_{..i} = g_ij v^j for a (0,2) tensor and a vector, both jet-valued.
template <class T>
BasicTensor<T> lower_with(const BasicTensor<T>& g, const BasicTensor<T>& v) {
  const int n = g.dim();
  BasicTensor<T> r({0, 1}, n);
  for (int i = 0; i < n; ++i) {
    T acc(0.0);
    for (int j = 0; j < n; ++j) acc += g(i, j) * v(j);
    r(i) = acc;
  }
  return r;
}

inline StructureJets structure_jets(const LPStructure& s, const Point& p, int order) {
  if (order < 1) throw ArgumentError("structure_jets: order must be at least 1");
  StructureJets j;
  j.order = order;
  j.g = s.metric().jets(p, order);
  j.g_inv = inverse_metric(j.g);
  j.xi = s.xi().jets(p, order);
  j.phi = s.phi().jets(p, order);
  j.eta = lower_with(j.g, j.xi);
  j.gamma = christoffel_jets(j.g, j.g_inv);
  return j;
}

/// Omega_ij = g_ik phi^k_j.
template <class T>
BasicTensor<T> omega_from(const BasicTensor<T>& g, const BasicTensor<T>& phi) {
  const int n = g.dim();
  BasicTensor<T> r({0, 2}, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      T acc(0.0);
      for (int k = 0; k < n; ++k) acc += g(i, k) * phi(k, j);
      r(i, j) = acc;
    }
  return r;
}

inline Tensor omega(const LPStructure& s, const Point& p) {
  return omega_from(s.metric().value(p), s.phi().value(p));
}

/// X + eta(X) xi, the projection onto the distribution orthogonal to xi.
inline Tensor horizontal_project(const Tensor& eta, const Tensor& xi, const Tensor& x) {
  const double e = scalar_value(apply(eta, {x}));
  return x + e * xi;
}

inline Tensor horizontal_project(const LPStructure& s, const Tensor& x, const Point& p) {
  const Tensor g = s.metric().value(p);
  const Tensor xi = s.xi().value(p);
  return horizontal_project(lower(g, xi), xi, x);
}

}  // namespace geomlab
