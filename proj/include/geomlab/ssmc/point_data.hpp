#pragma once

// Everything the identity evaluators need at one sample point: each structure
// symbol's value together with its covariant derivative under the Levi-Civita
// connection (nabla) and under the semi-symmetric metric connection (nablat).
// Derivatives carry the differentiation direction as their last covariant slot.

#include <array>
#include <optional>
#include <string_view>

#include "geomlab/geometry/connection.hpp"
#include "geomlab/lp_structure/axioms.hpp"
#include "geomlab/lp_structure/structure.hpp"

namespace geomlab {

enum class Symbol { g, eta, xi, phi, Omega, alpha, L, R, Rt, S, St, Q, Qt, r, rt, a, psi, n };
inline constexpr int kSymbolCount = 18;

inline constexpr std::array<Symbol, kSymbolCount> all_symbols() {
  return {Symbol::g,  Symbol::eta, Symbol::xi, Symbol::phi, Symbol::Omega, Symbol::alpha,
          Symbol::L,  Symbol::R,   Symbol::Rt, Symbol::S,   Symbol::St,    Symbol::Q,
          Symbol::Qt, Symbol::r,   Symbol::rt, Symbol::a,   Symbol::psi,   Symbol::n};
}

inline std::string_view symbol_name(Symbol s) {
  static constexpr std::array<std::string_view, kSymbolCount> names = {
      "g", "eta", "xi", "phi", "Omega", "alpha", "L", "R", "Rt", "S", "St", "Q", "Qt", "r", "rt", "a", "psi", "n"};
  return names[static_cast<std::size_t>(s)];
}

inline std::optional<Symbol> parse_symbol(std::string_view s) {
  for (Symbol sym : all_symbols())
    if (symbol_name(sym) == s) return sym;
  return std::nullopt;
}

inline Valence symbol_valence(Symbol s) {
  switch (s) {
    case Symbol::g:
    case Symbol::Omega:
    case Symbol::alpha:
    case Symbol::S:
    case Symbol::St: return {0, 2};
    case Symbol::eta: return {0, 1};
    case Symbol::xi: return {1, 0};
    case Symbol::phi:
    case Symbol::L:
    case Symbol::Q:
    case Symbol::Qt: return {1, 1};
    case Symbol::R:
    case Symbol::Rt: return {1, 3};
    case Symbol::r:
    case Symbol::rt:
    case Symbol::a:
    case Symbol::psi:
    case Symbol::n: return {0, 0};
  }
  return {0, 0};
}

/// Gamma~^k_{ij} = Gamma^k_{ij} + eta_j delta^k_i - g_ij xi^k.
inline JetTensor ssmc_gamma(const JetTensor& gamma, const JetTensor& g, const JetTensor& eta, const JetTensor& xi) {
  const int n = gamma.dim();
  JetTensor r = gamma;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Jet v = r(k, i, j) - g(i, j) * xi(k);
        if (k == i) v += eta(j);
        r(k, i, j) = v;
      }
  return truncated(r, jet_order(gamma));
}

inline JetTensor ssmc_gamma(const StructureJets& sj) { return ssmc_gamma(sj.gamma, sj.g, sj.eta, sj.xi); }

/// alpha(X,Y) = (nablat_X eta)(Y) + g(X,Y)/2.
inline JetTensor alpha_from(const StructureJets& sj, const JetTensor& gamma_t) {
  const JetTensor d = covariant_derivative(gamma_t, sj.eta);  // d(j, i) = (nablat_i eta)_j
  JetTensor a = swap_lower(d, 0, 1);
  const int n = a.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) += 0.5 * sj.g(i, j);
  return truncated(a, jet_order(d));
}

/// L X = nablat_X xi + X/2.
inline JetTensor l_from(const StructureJets& sj, const JetTensor& gamma_t) {
  JetTensor l = covariant_derivative(gamma_t, sj.xi);  // l(k, m) = (nablat_m xi)^k
  for (int i = 0; i < l.dim(); ++i) l(i, i) += Jet(0.5);
  return l;
}

/// Ricci operator: g(QX, Y) = S(X, Y), i.e. Q^k_i = g^{kj} S_ij.
template <class T>
BasicTensor<T> ricci_operator(const BasicTensor<T>& g_inv, const BasicTensor<T>& s) {
  const int n = s.dim();
  BasicTensor<T> q({1, 1}, n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      T acc(0.0);
      for (int j = 0; j < n; ++j) acc += g_inv(k, j) * s(i, j);
      q(k, i) = acc;
    }
  return q;
}

struct SymbolData {
  Tensor value;
  Tensor nabla;   // Levi-Civita covariant derivative, direction last
  Tensor nablat;  // semi-symmetric metric connection, direction last
};

class PointData {
 public:
  Point point;
  int n = 0;
  std::array<SymbolData, kSymbolCount> sym;
  Tensor g_inv;
  Tensor gamma, gamma_t;
  Tensor torsion;  // torsion(k, i, j) = Gamma~^k_ij - Gamma~^k_ji
  int rank_phi = 0;

  const Tensor& value(Symbol s) const { return sym[static_cast<std::size_t>(s)].value; }
  const Tensor& nabla(Symbol s) const { return sym[static_cast<std::size_t>(s)].nabla; }
  const Tensor& nablat(Symbol s) const { return sym[static_cast<std::size_t>(s)].nablat; }

  // Shorthand used by the closed forms and the identity catalog.
  const Tensor& xi() const { return value(Symbol::xi); }
  double scalar(Symbol s) const { return value(s)[0]; }
  double g(const Tensor& x, const Tensor& y) const { return form2(Symbol::g, x, y); }
  double eta(const Tensor& x) const { return scalar_value(apply(value(Symbol::eta), {x})); }
  double Om(const Tensor& x, const Tensor& y) const { return form2(Symbol::Omega, x, y); }
  double al(const Tensor& x, const Tensor& y) const { return form2(Symbol::alpha, x, y); }
  double S(const Tensor& x, const Tensor& y) const { return form2(Symbol::S, x, y); }
  double St(const Tensor& x, const Tensor& y) const { return form2(Symbol::St, x, y); }
  Tensor phi(const Tensor& x) const { return apply(value(Symbol::phi), {x}); }
  Tensor L(const Tensor& x) const { return apply(value(Symbol::L), {x}); }
  Tensor Q(const Tensor& x) const { return apply(value(Symbol::Q), {x}); }
  Tensor Qt(const Tensor& x) const { return apply(value(Symbol::Qt), {x}); }
  Tensor R(const Tensor& x, const Tensor& y, const Tensor& z) const { return apply(value(Symbol::R), {x, y, z}); }
  Tensor Rt(const Tensor& x, const Tensor& y, const Tensor& z) const { return apply(value(Symbol::Rt), {x, y, z}); }
  /// (nabla_W R)(X,Y)Z
  Tensor nablaR(const Tensor& w, const Tensor& x, const Tensor& y, const Tensor& z) const {
    return apply(nabla(Symbol::R), {x, y, z, w});
  }
  /// (nablat_W Rt)(X,Y)Z
  Tensor nablatRt(const Tensor& w, const Tensor& x, const Tensor& y, const Tensor& z) const {
    return apply(nablat(Symbol::Rt), {x, y, z, w});
  }
  /// (nabla_X S)(Y,Z)
  double nablaS(const Tensor& x, const Tensor& y, const Tensor& z) const {
    return scalar_value(apply(nabla(Symbol::S), {y, z, x}));
  }
  /// (nablat_X St)(Y,Z)
  double nablatSt(const Tensor& x, const Tensor& y, const Tensor& z) const {
    return scalar_value(apply(nablat(Symbol::St), {y, z, x}));
  }
  /// (nabla_X Q)(Y) and (nablat_X Qt)(Y)
  Tensor nablaQ(const Tensor& x, const Tensor& y) const { return apply(nabla(Symbol::Q), {y, x}); }
  Tensor nablatQt(const Tensor& x, const Tensor& y) const { return apply(nablat(Symbol::Qt), {y, x}); }
  /// (nabla_W alpha)(X,Y)
  double nablaAlpha(const Tensor& w, const Tensor& x, const Tensor& y) const {
    return scalar_value(apply(nabla(Symbol::alpha), {x, y, w}));
  }
  /// (nabla_W L)(X)
  Tensor nablaL(const Tensor& w, const Tensor& x) const { return apply(nabla(Symbol::L), {x, w}); }
  /// (nabla_X eta)(Y) and (nablat_X eta)(Y)
  double nablaEta(const Tensor& x, const Tensor& y) const { return scalar_value(apply(nabla(Symbol::eta), {y, x})); }
  double nablatEta(const Tensor& x, const Tensor& y) const { return scalar_value(apply(nablat(Symbol::eta), {y, x})); }
  /// nablat_X xi
  Tensor nablatXi(const Tensor& x) const { return apply(nablat(Symbol::xi), {x}); }
  /// da(X), the directional derivative of a = tr alpha.
  double da(const Tensor& x) const { return scalar_value(apply(nabla(Symbol::a), {x})); }
  /// tau(X,Y)
  Tensor tau(const Tensor& x, const Tensor& y) const { return apply(torsion, {x, y}); }
  /// X + eta(X) xi
  Tensor horizontal(const Tensor& x) const { return x + eta(x) * xi(); }

 private:
  double form2(Symbol s, const Tensor& x, const Tensor& y) const { return scalar_value(apply(value(s), {x, y})); }
};

/// Expand the structure at p and assemble every symbol with both derivatives.
inline PointData compute_point_data(const LPStructure& s, const Point& p,
                                    CurvatureConvention conv = kCalibratedConvention) {
  const int n = s.dim();
  const StructureJets sj = structure_jets(s, p, 3);  // Gamma to order 2, curvature to order 1
  const JetTensor gt = ssmc_gamma(sj);
  const JetTensor omega_j = omega_from(sj.g, sj.phi);
  const JetTensor alpha_j = alpha_from(sj, gt);
  const JetTensor l_j = l_from(sj, gt);
  const JetTensor r_j = curvature_jets(sj.gamma, conv.sign);
  const JetTensor rt_j = curvature_jets(gt, conv.sign);
  const JetTensor s_j = ricci_from_curvature(r_j, conv);
  const JetTensor st_j = ricci_from_curvature(rt_j, conv);
  const JetTensor g_inv1 = truncated(sj.g_inv, 1);
  const JetTensor q_j = ricci_operator(g_inv1, s_j);
  const JetTensor qt_j = ricci_operator(g_inv1, st_j);
  const JetTensor r_scalar = JetTensor::scalar(trace_with(g_inv1, s_j), n);
  const JetTensor rt_scalar = JetTensor::scalar(trace_with(g_inv1, st_j), n);
  const JetTensor a_j = JetTensor::scalar(trace_with(sj.g_inv, alpha_j), n);
  const JetTensor psi_j = JetTensor::scalar(trace_with(sj.g_inv, omega_j), n);
  const JetTensor n_j = JetTensor::scalar(Jet(static_cast<double>(n)), n);

  const JetTensor gamma0 = truncated(sj.gamma, 0);
  const JetTensor gt0 = truncated(gt, 0);

  PointData pd;
  pd.point = p;
  pd.n = n;
  auto set = [&](Symbol sym, const JetTensor& t) {
    SymbolData& d = pd.sym[static_cast<std::size_t>(sym)];
    d.value = value_of(t);
    d.nabla = value_of(covariant_derivative(gamma0, t));
    d.nablat = value_of(covariant_derivative(gt0, t));
  };
  set(Symbol::g, sj.g);
  set(Symbol::eta, sj.eta);
  set(Symbol::xi, sj.xi);
  set(Symbol::phi, sj.phi);
  set(Symbol::Omega, omega_j);
  set(Symbol::alpha, alpha_j);
  set(Symbol::L, l_j);
  set(Symbol::R, r_j);
  set(Symbol::Rt, rt_j);
  set(Symbol::S, s_j);
  set(Symbol::St, st_j);
  set(Symbol::Q, q_j);
  set(Symbol::Qt, qt_j);
  set(Symbol::r, r_scalar);
  set(Symbol::rt, rt_scalar);
  set(Symbol::a, a_j);
  set(Symbol::psi, psi_j);
  set(Symbol::n, n_j);

  pd.g_inv = value_of(sj.g_inv);
  pd.gamma = value_of(sj.gamma);
  pd.gamma_t = value_of(gt);
  pd.torsion = Tensor({1, 2}, n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) pd.torsion(k, i, j) = pd.gamma_t(k, i, j) - pd.gamma_t(k, j, i);
  pd.rank_phi = numerical_rank(pd.value(Symbol::phi));
  return pd;
}

}  // namespace geomlab
