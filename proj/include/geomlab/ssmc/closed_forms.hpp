#pragma once

// Closed-form expressions for the SSMC curvature, Ricci tensor and their
// covariant derivatives, assembled from Levi-Civita data, alpha, L and Omega.
// Each one has a generic counterpart in PointData (curvature of Gamma~, its
// contraction, covariant derivatives) that it is checked against.

#include <utility>

#include "geomlab/ssmc/bundle.hpp"

namespace geomlab {

/// Rt(X,Y)Z = R(X,Y)Z - alpha(Y,Z)X + alpha(X,Z)Y - g(Y,Z)LX + g(X,Z)LY, as a (1,3) tensor.
inline Tensor curvature_tilde_closed(const PointData& pd) {
  const int n = pd.n;
  const Tensor& r = pd.value(Symbol::R);
  const Tensor& al = pd.value(Symbol::alpha);
  const Tensor& g = pd.value(Symbol::g);
  const Tensor& l = pd.value(Symbol::L);
  Tensor out({1, 3}, n);
  for (int m = 0; m < n; ++m)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          double v = r(m, i, j, k) - g(j, k) * l(m, i) + g(i, k) * l(m, j);
          if (m == i) v -= al(j, k);
          if (m == j) v += al(i, k);
          out(m, i, j, k) = v;
        }
  return out;
}

inline Tensor curvature_tilde_closed(const SSMCBundle& b, const Point& p) {
  return curvature_tilde_closed(b.point_data(p));
}

struct RicciTilde {
  Tensor ricci;
  double scalar = 0.0;
};

/// St = S - (n-2) alpha - a g,  rt = r - 2(n-1) a.
inline RicciTilde ricci_tilde_closed(const PointData& pd) {
  const double n = pd.n, a = pd.scalar(Symbol::a);
  Tensor st = pd.value(Symbol::S) - (n - 2.0) * pd.value(Symbol::alpha) - a * pd.value(Symbol::g);
  return {std::move(st), pd.scalar(Symbol::r) - 2.0 * (n - 1.0) * a};
}

inline RicciTilde ricci_tilde_closed(const SSMCBundle& b, const Point& p) { return ricci_tilde_closed(b.point_data(p)); }

/// Right-hand side of the closed form for (nablat_W Rt)(X,Y)xi.
inline Tensor nabla_tilde_curvature_xi_closed(const PointData& d, const Tensor& W, const Tensor& X, const Tensor& Y) {
  const Tensor phiW = d.phi(W);
  const double gxw = d.g(X, W), gyw = d.g(Y, W), oxw = d.Om(X, W), oyw = d.Om(Y, W);
  return d.R(X, Y, W) - d.R(X, Y, phiW) + d.al(X, W) * Y - d.al(Y, W) * X + gxw * d.L(Y) - gyw * d.L(X) +
         d.al(Y, phiW) * X - d.al(X, phiW) * Y + oyw * d.L(X) - oxw * d.L(Y) + gxw * Y - gyw * X +
         gyw * d.phi(X) - gxw * d.phi(Y) + oyw * X - oxw * Y + oxw * d.phi(Y) - oyw * d.phi(X) +
         d.eta(X) * (gyw - oyw) * d.xi() - d.eta(Y) * (gxw - oxw) * d.xi();
}

/// Right-hand side of the closed form for (nablat_W Rt)(X,Y)Z.
inline Tensor nabla_tilde_curvature_closed(const PointData& d, const Tensor& W, const Tensor& X, const Tensor& Y,
                                           const Tensor& Z) {
  const Tensor& xi = d.xi();
  const double ex = d.eta(X), ey = d.eta(Y), ez = d.eta(Z), ew = d.eta(W);
  const double gwx = d.g(W, X), gwy = d.g(W, Y), gwz = d.g(W, Z), gyz = d.g(Y, Z), gxz = d.g(X, Z);
  const double owx = d.Om(W, X), owy = d.Om(W, Y), owz = d.Om(W, Z);
  const Tensor tail = 0.5 * W - d.phi(W) + 2.0 * ew * xi;
  return d.nablaR(W, X, Y, Z) - d.g(d.R(X, Y, Z), W) * xi + (gwy - owy) * ez * X + (gwz - owz) * ey * X +
         2.0 * ez * ew * (ey * X - ex * Y) + d.al(Y, Z) * (gwx * xi - ex * W) + (owx - gwx) * ez * Y +
         (owz - gwz) * ex * Y + d.al(X, Z) * (ey * W - gwy * xi) -
         gyz * ((gwx - owx - d.al(X, W)) * xi + ex * tail) + gxz * ((gwy - owy - d.al(Y, W)) * xi + ey * tail);
}

inline Tensor nabla_tilde_curvature_closed(const SSMCBundle& b, const Tensor& W, const Tensor& X, const Tensor& Y,
                                           const Tensor& Z, const Point& p) {
  return nabla_tilde_curvature_closed(b.point_data(p), W, X, Y, Z);
}

/// Right-hand side of the closed form for (nablat_X St)(Y,Z); da(X) is the
/// directional derivative of a = tr alpha.
inline double nabla_tilde_ricci_closed(const PointData& d, const Tensor& X, const Tensor& Y, const Tensor& Z) {
  const double n = d.n;
  const double ey = d.eta(Y), ez = d.eta(Z);
  return d.nablaS(X, Y, Z) - (d.S(X, Y) + d.al(X, Y)) * ez + (1.5 * d.g(X, Z) + (n - 2.0) * d.Om(X, Z)) * ey -
         (n - 2.0) * (d.g(X, Y) - d.Om(X, Y)) * ez - d.da(X) * d.g(Y, Z);
}

inline double nabla_tilde_ricci_closed(const SSMCBundle& b, const Tensor& X, const Tensor& Y, const Tensor& Z,
                                       const Point& p) {
  return nabla_tilde_ricci_closed(b.point_data(p), X, Y, Z);
}

/// Right-hand side of the closed form for (nabla_X S)(Y,xi).
inline double nabla_ricci_xi_closed(const PointData& d, const Tensor& X, const Tensor& Y) {
  return (d.n - 1.0) * d.Om(X, Y) - d.S(Y, d.phi(X));
}

}  // namespace geomlab
