#pragma once

// Connections, covariant differentiation and curvature on a chart.
//
// Connection coefficients are stored as a (1,2) tensor with Gamma(k, i, j) =
// Gamma^k_{ij}, meaning nabla_{d_i} d_j = Gamma^k_{ij} d_k.  They need not be
// symmetric in (i, j).

#include <array>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "geomlab/error.hpp"
#include "geomlab/geometry/metric.hpp"
#include "geomlab/tensor_core/tensor.hpp"

namespace geomlab {

class ConnectionCoefficients {
 public:
  using Function = std::function<JetTensor(const Point&, int order)>;

  ConnectionCoefficients() = default;
  ConnectionCoefficients(int dim, Function fn, std::string name = {})
      : dim_(dim), fn_(std::move(fn)), name_(std::move(name)) {}

  int dim() const { return dim_; }
  const std::string& name() const { return name_; }

  /// Gamma^k_{ij} expanded to `order` (at most 2) at p.
  JetTensor jets(const Point& p, int order) const {
    if (order < 0 || order > 2) throw ArgumentError("ConnectionCoefficients: order must be in 0..2");
    JetTensor gamma = fn_(p, order);
    if (!(gamma.valence() == Valence{1, 2}) || gamma.dim() != dim_)
      throw EvaluationError("ConnectionCoefficients: evaluator returned the wrong shape");
    return gamma;
  }
  Tensor value(const Point& p) const { return value_of(jets(p, 0)); }

 private:
  int dim_ = 0;
  Function fn_;
  std::string name_;
};

/// Gamma^k_{ij} = 1/2 g^{kl} (d_i g_{jl} + d_j g_{il} - d_l g_{ij}) from metric jets.
/// The result has one order less than g.
inline JetTensor christoffel_jets(const JetTensor& g, const JetTensor& g_inv) {
  const int n = g.dim();
  const JetTensor dg = partial_derivatives(g);  // dg(i, j, m) = d_m g_ij
  JetTensor gamma({1, 2}, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Jet acc(0.0);
        for (int l = 0; l < n; ++l) acc += g_inv(k, l) * (dg(j, l, i) + dg(i, l, j) - dg(i, j, l));
        acc *= 0.5;
        gamma(k, i, j) = acc;
        gamma(k, j, i) = acc;
      }
  return gamma;
}

inline Tensor christoffel(const MetricField& g, const Point& p) {
  const JetTensor gj = g.jets(p, 1);
  return value_of(christoffel_jets(gj, inverse_metric(gj)));
}

/// The Levi-Civita connection of g.
inline ConnectionCoefficients levi_civita(MetricField g) {
  const int n = g.dim();
  return ConnectionCoefficients(
      n,
      [g = std::move(g)](const Point& p, int order) {
        const JetTensor gj = g.jets(p, order + 1);
        return christoffel_jets(gj, inverse_metric(gj));
      },
      "levi-civita");
}

/// Covariant derivative of a tensor expanded at a point.  The differentiation
/// direction becomes a new trailing covariant slot:
///   (nabla T)^{a..}_{b..m} = d_m T + sum_upper Gamma^a_{mc} T^{..c..} - sum_lower Gamma^c_{mb} T_{..c..}.
/// The result carries min(order(T) - 1, order(Gamma)) derivative levels.
inline JetTensor covariant_derivative(const JetTensor& gamma, const JetTensor& t) {
  const int t_order = jet_order(t);
  if (t_order < 1) throw ArgumentError("covariant_derivative: tensor needs order-1 jets");
  if (gamma.dim() != t.dim()) throw ArgumentError("covariant_derivative: dimension mismatch");
  const int order = std::min(t_order - 1, jet_order(gamma));
  const int n = t.dim();
  const Valence v = t.valence();
  const JetTensor g = truncated(gamma, order);
  const JetTensor tt = truncated(t, order);
  const JetTensor dt = partial_derivatives(truncated(t, order + 1));

  JetTensor r({v.upper, v.lower + 1}, n);
  std::vector<int> idx(static_cast<std::size_t>(r.rank()));
  std::vector<int> src(static_cast<std::size_t>(t.rank()));
  for (std::size_t f = 0; f < r.size(); ++f) {
    detail::unflatten(f, n, idx);
    const int m = idx.back();
    Jet acc = dt[f];
    for (int s = 0; s < t.rank(); ++s) src[static_cast<std::size_t>(s)] = idx[static_cast<std::size_t>(s)];
    for (int s = 0; s < t.rank(); ++s) {
      const int keep = src[static_cast<std::size_t>(s)];
      for (int c = 0; c < n; ++c) {
        src[static_cast<std::size_t>(s)] = c;
        const Jet& tc = tt[detail::flatten(src, n)];
        if (s < v.upper)
          acc += g(keep, m, c) * tc;
        else
          acc -= g(c, m, keep) * tc;
      }
      src[static_cast<std::size_t>(s)] = keep;
    }
    r[f] = acc;
  }
  return r;
}

/// Field-level form: nabla t at p0 under `conn`.
inline Tensor covariant_derivative(const ConnectionCoefficients& conn, const TensorField& t, const Point& p0) {
  return value_of(covariant_derivative(conn.jets(p0, 0), t.jets(p0, 1)));
}

/// Curvature sign and Ricci contraction slot.  Neither is fixed by the
/// LP-Sasakian literature; the combination is pinned by calibrate_conventions
/// (see lp_structure) and asserted in the test suite.
struct CurvatureConvention {
  enum class RicciSlot { first_argument, second_argument };
  int sign = +1;
  RicciSlot slot = RicciSlot::first_argument;

  friend bool operator==(const CurvatureConvention&, const CurvatureConvention&) = default;
};

inline constexpr CurvatureConvention kCalibratedConvention{+1, CurvatureConvention::RicciSlot::first_argument};

inline std::array<CurvatureConvention, 4> all_conventions() {
  using S = CurvatureConvention::RicciSlot;
  return {{{+1, S::first_argument}, {+1, S::second_argument}, {-1, S::first_argument}, {-1, S::second_argument}}};
}

inline std::string to_string(const CurvatureConvention& c) {
  return std::string(c.sign > 0 ? "+" : "-") +
         (c.slot == CurvatureConvention::RicciSlot::first_argument ? "/first" : "/second");
}

/// R^l_{ijk} = sign * (d_i Gamma^l_{jk} - d_j Gamma^l_{ik} + Gamma^l_{im} Gamma^m_{jk} - Gamma^l_{jm} Gamma^m_{ik}),
/// so that R(X,Y)Z = X^i Y^j Z^k R^l_{ijk} d_l.  Valid for connections with torsion.
inline JetTensor curvature_jets(const JetTensor& gamma, int sign = kCalibratedConvention.sign) {
  const int go = jet_order(gamma);
  if (go < 1) throw ArgumentError("curvature: connection needs order-1 jets");
  const int n = gamma.dim();
  const JetTensor g = truncated(gamma, go - 1);
  const JetTensor dg = partial_derivatives(gamma);  // dg(l, j, k, i) = d_i Gamma^l_{jk}
  JetTensor r({1, 3}, n);
  for (int l = 0; l < n; ++l)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;  // antisymmetric in (i, j) by construction
        for (int k = 0; k < n; ++k) {
          if (j < i) {
            r(l, i, j, k) = -r(l, j, i, k);
            continue;
          }
          Jet acc = dg(l, j, k, i) - dg(l, i, k, j);
          for (int m = 0; m < n; ++m) acc += g(l, i, m) * g(m, j, k) - g(l, j, m) * g(m, i, k);
          r(l, i, j, k) = sign > 0 ? acc : -acc;
        }
      }
  return r;
}

inline Tensor curvature(const ConnectionCoefficients& conn, const Point& p) {
  return value_of(curvature_jets(conn.jets(p, 1)));
}

/// Ricci tensor by contracting the curvature's contravariant slot with one argument slot.
template <class T>
BasicTensor<T> ricci_from_curvature(const BasicTensor<T>& r, CurvatureConvention c = kCalibratedConvention) {
  return contract(r, 0, c.slot == CurvatureConvention::RicciSlot::first_argument ? 0 : 1);
}

/// g^{ij} T_ij.
template <class T>
T trace_with(const BasicTensor<T>& g_inv, const BasicTensor<T>& t) {
  const int n = t.dim();
  T acc(0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) acc += g_inv(i, j) * t(i, j);
  return acc;
}

/// Raise the first index of a (0,2) tensor: Q^i_j = g^{ik} S_kj.
template <class T>
BasicTensor<T> raise_first(const BasicTensor<T>& g_inv, const BasicTensor<T>& s) {
  const int n = s.dim();
  BasicTensor<T> q({1, 1}, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      T acc(0.0);
      for (int k = 0; k < n; ++k) acc += g_inv(i, k) * s(k, j);
      q(i, j) = acc;
    }
  return q;
}

struct RicciResult {
  Tensor ricci;
  double scalar = 0.0;
};

inline RicciResult ricci_scalar(const ConnectionCoefficients& conn, const MetricField& g, const Point& p) {
  const Tensor s = ricci_from_curvature(curvature(conn, p));
  const Tensor g_inv = inverse_metric(g.value(p));
  return {s, trace_with(g_inv, s)};
}

}  // namespace geomlab
