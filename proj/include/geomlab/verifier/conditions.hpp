#pragma once

// phi-symmetry and phi-Ricci-symmetry conditions, and the displayed relations
// that the theorem harness pairs with them.  Every relation takes its vector
// arguments from a VectorTuple (X, Y, Z, W, U).

#include <string>

#include "geomlab/ssmc/closed_forms.hpp"
#include "geomlab/verifier/catalog.hpp"

namespace geomlab {

enum class ConnectionKind { levi_civita, ssmc };

inline std::string_view connection_name(ConnectionKind c) { return c == ConnectionKind::levi_civita ? "levi_civita" : "ssmc"; }

/// Default pass threshold for condition reports.
inline constexpr double kConditionTolerance = 1e-6;

/// Replace every argument by its horizontal projection.
inline VectorTuple horizontal_tuple(const PointData& d, const VectorTuple& t) {
  VectorTuple h;
  for (std::size_t i = 0; i < h.v.size(); ++i) h.v[i] = d.horizontal(t.v[i]);
  return h;
}

/// phi^2 of the derivative of the curvature, (nabla_W R)(X,Y)Z or its SSMC counterpart.
inline Tensor phi_symmetry_vector(ConnectionKind c, const PointData& d, const VectorTuple& t) {
  const Tensor v = c == ConnectionKind::levi_civita ? d.nablaR(t.W(), t.X(), t.Y(), t.Z())
                                                    : d.nablatRt(t.W(), t.X(), t.Y(), t.Z());
  return d.phi(d.phi(v));
}

/// phi^2 of (nabla_X Q)(Y) or (nablat_X Qt)(Y).
inline Tensor phi_ricci_vector(ConnectionKind c, const PointData& d, const VectorTuple& t) {
  const Tensor v = c == ConnectionKind::levi_civita ? d.nablaQ(t.X(), t.Y()) : d.nablatQt(t.X(), t.Y());
  return d.phi(d.phi(v));
}

inline double phi_symmetry_at(ConnectionKind c, const PointData& d, const VectorTuple& t, bool horizontal_only) {
  const Tensor v = phi_symmetry_vector(c, d, horizontal_only ? horizontal_tuple(d, t) : t);
  return normalized_residual(v, Tensor({1, 0}, d.n));
}

inline double phi_ricci_at(ConnectionKind c, const PointData& d, const VectorTuple& t, bool horizontal_only) {
  const Tensor v = phi_ricci_vector(c, d, horizontal_only ? horizontal_tuple(d, t) : t);
  return normalized_residual(v, Tensor({1, 0}, d.n));
}

inline ResidualReport phi_symmetry_residual(ConnectionKind c, const SampleSet& set, bool horizontal_only,
                                            double tolerance = kConditionTolerance) {
  return residual_report(std::string("phi_symmetry_") + std::string(connection_name(c)) + (horizontal_only ? "_horizontal" : ""),
                         set, tolerance, [=](const PointData& d, const VectorTuple& t) {
                           return phi_symmetry_at(c, d, t, horizontal_only);
                         });
}

inline ResidualReport phi_ricci_residual(ConnectionKind c, const SampleSet& set, bool horizontal_only,
                                         double tolerance = kConditionTolerance) {
  return residual_report(std::string("phi_ricci_") + std::string(connection_name(c)) + (horizontal_only ? "_horizontal" : ""),
                         set, tolerance, [=](const PointData& d, const VectorTuple& t) {
                           return phi_ricci_at(c, d, t, horizontal_only);
                         });
}

/// max |nabla R| over the evaluated points (component max norm).
inline double nabla_curvature_norm(const SampleSet& set) {
  double m = 0.0;
  for (const auto& d : set.data)
    if (d) m = std::max(m, max_abs(d->nabla(Symbol::R)));
  return m;
}

// ---------------------------------------------------------------------------
// Theorem relations.  Each returns (lhs, rhs) at one tuple.

/// Which eta factor multiplies the 2{eta(X)g(Y,Z) - eta(Y)g(X,Z)} term of the
/// relations for nabla R under phi-symmetry: eta(Y) or eta(W).
enum class EtaFactorReading { eta_y, eta_w };

inline std::string_view reading_name(EtaFactorReading r) { return r == EtaFactorReading::eta_y ? "eta_y" : "eta_w"; }

namespace relations {

/// The xi coefficient shared by the horizontal characterization of phi-symmetry.
inline double horizontal_bracket(const PointData& d, const Tensor& W, const Tensor& X, const Tensor& Y, const Tensor& Z) {
  const Tensor phiW = d.phi(W);
  const double gxw = d.g(X, W), gyw = d.g(Y, W), gxz = d.g(X, Z), gyz = d.g(Y, Z);
  const double oxw = d.Om(X, W), oyw = d.Om(Y, W), oxz = d.Om(X, Z), oyz = d.Om(Y, Z);
  return d.g(d.R(X, Y, W), Z) - d.g(d.R(X, Y, phiW), Z) + d.al(X, W) * gyz - d.al(Y, W) * gxz + gxw * d.al(Y, Z) -
         gyw * d.al(X, Z) + d.al(Y, phiW) * gxz - d.al(X, phiW) * gyz + oyw * d.al(X, Z) - oxw * d.al(Y, Z) +
         gxw * gyz - gyw * gxz + gyw * oxz - gxw * oyz + oyw * gxz - oxw * gyz + oxw * oyz - oyw * oxz;
}

/// (nablat_W Rt)(X,Y)Z against [horizontal_bracket] xi; meant for horizontal arguments.
inline std::pair<Tensor, Tensor> phi_symmetric_ssmc_form(const PointData& d, const VectorTuple& t) {
  const Tensor &X = t.X(), &Y = t.Y(), &Z = t.Z(), &W = t.W();
  return {d.nablatRt(W, X, Y, Z), horizontal_bracket(d, W, X, Y, Z) * d.xi()};
}

/// R(X,Y)W - R(X,Y)phi W against its expression in g, Omega, alpha, L.
inline std::pair<Tensor, Tensor> curvature_form(const PointData& d, const VectorTuple& t) {
  const Tensor &X = t.X(), &Y = t.Y(), &W = t.W();
  const Tensor phiW = d.phi(W), phiX = d.phi(X), phiY = d.phi(Y), LX = d.L(X), LY = d.L(Y);
  const double gxw = d.g(X, W), gyw = d.g(Y, W), oxw = d.Om(X, W), oyw = d.Om(Y, W);
  Tensor rhs = gyw * X - gxw * Y + gxw * phiY - gyw * phiX + oxw * Y - oyw * X + oyw * phiX - oxw * phiY +
               d.al(Y, W) * X - d.al(X, W) * Y + gyw * LX - gxw * LY + d.al(X, phiW) * Y - d.al(Y, phiW) * X +
               oxw * LY - oyw * LX;
  return {d.R(X, Y, W) - d.R(X, Y, phiW), std::move(rhs)};
}

/// S(Y,W) - S(Y,phi W) against (n-1+a-psi)[g - Omega](Y,W) + (n-2)[alpha(Y,W) - alpha(Y,phi W)].
inline std::pair<Tensor, Tensor> ricci_form(const PointData& d, const VectorTuple& t) {
  const Tensor &Y = t.Y(), &W = t.W();
  const double n = d.n, a = d.scalar(Symbol::a), psi = d.scalar(Symbol::psi);
  const Tensor phiW = d.phi(W);
  const double lhs = d.S(Y, W) - d.S(Y, phiW);
  const double rhs = (n - 1.0 + a - psi) * (d.g(Y, W) - d.Om(Y, W)) + (n - 2.0) * (d.al(Y, W) - d.al(Y, phiW));
  return {Tensor::scalar(lhs, d.n), Tensor::scalar(rhs, d.n)};
}

/// (nabla_W R)(X,Y)Z against the Levi-Civita phi-symmetry characterization.
inline std::pair<Tensor, Tensor> phi_symmetric_lc_form(const PointData& d, const VectorTuple& t) {
  const Tensor &X = t.X(), &Y = t.Y(), &Z = t.Z(), &W = t.W();
  const Tensor& xi = d.xi();
  const double ex = d.eta(X), ey = d.eta(Y), ez = d.eta(Z), ew = d.eta(W);
  const Tensor phiW = d.phi(W), phiX = d.phi(X), phiY = d.phi(Y);
  const Tensor rxyw = d.R(X, Y, W);
  const Tensor phi_rxyw = d.phi(rxyw);
  const double bracket = 2.0 * (d.Om(Y, W) * d.g(X, Z) - d.Om(X, W) * d.g(Y, Z)) + d.Om(Y, Z) * d.g(X, W) -
                         d.Om(X, Z) * d.g(Y, W) + 2.0 * (d.Om(Y, Z) * ex * ew - d.Om(X, Z) * ey * ew) -
                         d.g(phi_rxyw, Z);
  Tensor rhs = bracket * xi + ex * (d.Om(W, Z) * Y - d.g(Y, Z) * phiW - d.R(Y, phiW, Z)) -
               ey * (d.Om(W, Z) * X - d.g(X, Z) * phiW - d.R(X, phiW, Z)) -
               ez * (2.0 * (d.Om(Y, W) * X - d.Om(X, W) * Y) - phi_rxyw - d.g(Y, W) * phiX + d.g(X, W) * phiY) +
               2.0 * (ey * phiX - ex * phiY) * ez * ew;
  return {d.nablaR(W, X, Y, Z), std::move(rhs)};
}

/// The non-xi part shared by the general SSMC characterization and the derived
/// expression for nabla R.
inline Tensor ssmc_vector_terms(const PointData& d, const Tensor& W, const Tensor& X, const Tensor& Y, const Tensor& Z) {
  const double ex = d.eta(X), ey = d.eta(Y), ez = d.eta(Z);
  const Tensor phiW = d.phi(W);
  return ez * d.R(X, Y, phiW) + ey * d.R(X, phiW, Z) - ex * d.R(Y, phiW, Z) -
         0.5 * (ez * (d.Om(Y, W) * X - d.Om(X, W) * Y) + ey * d.Om(W, Z) * X - ex * d.Om(W, Z) * Y) +
         ez * (d.al(Y, phiW) * X - d.al(X, phiW) * Y) - ey * d.al(Z, phiW) * X + ex * d.al(Z, phiW) * Y +
         ex * d.al(Y, Z) * W + 0.5 * (ex * d.g(Y, Z) * W - ey * d.g(X, Z) * W);
}

/// (nablat_W Rt)(X,Y)Z against its general characterization under SSMC phi-symmetry.
inline std::pair<Tensor, Tensor> phi_symmetric_ssmc_general_form(const PointData& d, const VectorTuple& t) {
  const Tensor &X = t.X(), &Y = t.Y(), &Z = t.Z(), &W = t.W();
  const double ex = d.eta(X), ey = d.eta(Y), ez = d.eta(Z), ew = d.eta(W);
  const Tensor phiW = d.phi(W);
  const double gxw = d.g(X, W), gyw = d.g(Y, W), gxz = d.g(X, Z), gyz = d.g(Y, Z);
  const double oxw = d.Om(X, W), oyw = d.Om(Y, W), oxz = d.Om(X, Z), oyz = d.Om(Y, Z);
  const double bracket = d.g(d.R(X, Y, W), Z) - d.g(d.R(X, Y, phiW), Z) + d.al(X, W) * gyz - d.al(Y, W) * gxz +
                         d.al(Y, Z) * gxw - d.al(X, Z) * gyw + 0.5 * (ey * gxw - ex * gyw) * ez -
                         ey * ew * d.al(X, Z) + d.al(Y, phiW) * gxz - d.al(X, phiW) * gyz + oyw * d.al(X, Z) -
                         oxw * d.al(Y, Z) + 0.5 * (ex * oyw - ey * oxw) * ez + gxw * gyz - gyw * gxz + gyw * oxz -
                         gxw * oyz + (ey * oxz - ex * oyz) * ew + oyw * gxz - oxw * gyz + (ex * oyw - ey * oxw) * ez +
                         oxw * oyz - oyw * oxz;
  return {d.nablatRt(W, X, Y, Z), bracket * d.xi() + ssmc_vector_terms(d, W, X, Y, Z)};
}

/// Terms common to the derived nabla R expression and the invariance condition
/// (everything except the xi coefficient and the curvature terms).
inline Tensor invariance_vector_terms(const PointData& d, const Tensor& W, const Tensor& X, const Tensor& Y,
                                      const Tensor& Z) {
  const double ex = d.eta(X), ey = d.eta(Y), ez = d.eta(Z), ew = d.eta(W);
  return (d.Om(W, Y) - d.g(W, Y)) * ez * X + (d.Om(W, Z) - d.g(W, Z)) * ey * X + 2.0 * ez * ew * (ex * Y - ey * X) +
         (d.al(Y, Z) * ex - d.al(X, Z) * ey) * W + (d.g(W, X) - d.Om(W, X)) * ez * Y +
         (d.g(W, Z) - d.Om(W, Z)) * ex * Y;
}

/// The xi coefficient of the derived nabla R expression and of the invariance
/// condition; they differ in the curvature term and the Omega g multiplier.
inline double derived_bracket(const PointData& d, const Tensor& W, const Tensor& X, const Tensor& Y, const Tensor& Z,
                              EtaFactorReading reading, double omega_g_factor) {
  const double ex = d.eta(X), ey = d.eta(Y), ez = d.eta(Z), ew = d.eta(W);
  const Tensor phiW = d.phi(W);
  const double gxw = d.g(X, W), gyw = d.g(Y, W), gxz = d.g(X, Z), gyz = d.g(Y, Z);
  const double oxw = d.Om(X, W), oyw = d.Om(Y, W), oxz = d.Om(X, Z), oyz = d.Om(Y, Z);
  const double factor = reading == EtaFactorReading::eta_y ? ey : ew;
  return 2.0 * (ex * gyz - ey * gxz) * factor + 0.5 * (ey * gxw - ex * gyw) * ez - ey * ew * d.al(X, Z) +
         d.al(Y, phiW) * gxz - d.al(X, phiW) * gyz + oyw * d.al(X, Z) - oxw * d.al(Y, Z) +
         1.5 * (ex * oyw - ey * oxw) * ez + gyw * oxz - gxw * oyz + (ey * oxz - ex * oyz) * ew +
         omega_g_factor * (oyw * gxz - oxw * gyz) + oxw * oyz - oyw * oxz;
}

/// (nabla_W R)(X,Y)Z against the expression derived for it under SSMC phi-symmetry.
inline std::pair<Tensor, Tensor> derived_nabla_r_form(const PointData& d, const VectorTuple& t, EtaFactorReading reading) {
  const Tensor &X = t.X(), &Y = t.Y(), &Z = t.Z(), &W = t.W();
  const double ex = d.eta(X), ey = d.eta(Y);
  const Tensor half_w_minus_phi_w = 0.5 * W - d.phi(W);
  const double bracket = derived_bracket(d, W, X, Y, Z, reading, 2.0) - d.g(d.R(X, Y, d.phi(W)), Z);
  Tensor rhs = invariance_vector_terms(d, W, X, Y, Z) + d.g(Y, Z) * ex * half_w_minus_phi_w -
               d.g(X, Z) * ey * half_w_minus_phi_w + ssmc_vector_terms(d, W, X, Y, Z) + bracket * d.xi();
  return {d.nablaR(W, X, Y, Z), std::move(rhs)};
}

/// The nabla R obtained by equating the general SSMC characterization with the
/// closed form of nablat Rt: general rhs - (closed rhs - nabla R).
inline Tensor nabla_r_from_ssmc_forms(const PointData& d, const VectorTuple& t) {
  const Tensor &X = t.X(), &Y = t.Y(), &Z = t.Z(), &W = t.W();
  return phi_symmetric_ssmc_general_form(d, t).second - nabla_tilde_curvature_closed(d, W, X, Y, Z) +
         d.nablaR(W, X, Y, Z);
}

/// The derived nabla R expression against nabla_r_from_ssmc_forms; algebraic,
/// so it must vanish everywhere if the derivation is consistent.
inline std::pair<Tensor, Tensor> derived_endpoint_form(const PointData& d, const VectorTuple& t, EtaFactorReading reading) {
  return {derived_nabla_r_form(d, t, reading).second, nabla_r_from_ssmc_forms(d, t)};
}

/// The vector condition equivalent to invariance of phi-symmetry, against zero.
inline std::pair<Tensor, Tensor> invariance_form(const PointData& d, const VectorTuple& t, EtaFactorReading reading) {
  const Tensor &X = t.X(), &Y = t.Y(), &Z = t.Z(), &W = t.W();
  const double ex = d.eta(X), ey = d.eta(Y), ez = d.eta(Z);
  const double gxz = d.g(X, Z), gyz = d.g(Y, Z), owz = d.Om(W, Z);
  const Tensor phiW = d.phi(W);
  Tensor v = invariance_vector_terms(d, W, X, Y, Z) + 0.5 * (gyz * ex - gxz * ey) * W +
             ez * (d.g(Y, W) * d.phi(X) - d.g(X, W) * d.phi(Y)) -
             0.5 * (ex * owz * Y - ey * owz * X - ez * (d.Om(Y, W) * X - d.Om(X, W) * Y)) +
             ez * (d.al(Y, phiW) * X - d.al(X, phiW) * Y) - ey * d.al(Z, phiW) * X + ex * d.al(Z, phiW) * Y +
             ex * d.al(Y, Z) * W + 0.5 * (ex * gyz - ey * gxz) * W +
             derived_bracket(d, W, X, Y, Z, reading, 1.0) * d.xi();
  return {std::move(v), Tensor({1, 0}, d.n)};
}

/// (nabla_X S)(Y,Z) against its form when nablat St vanishes and tr alpha is constant.
inline std::pair<Tensor, Tensor> ricci_derivative_form(const PointData& d, const VectorTuple& t) {
  const Tensor &X = t.X(), &Y = t.Y(), &Z = t.Z();
  const double n = d.n, ex = d.eta(X), ey = d.eta(Y), ez = d.eta(Z), da = d.da(X);
  const Tensor phiX = d.phi(X);
  const double rhs = ez * d.S(Y, phiX) - ey * (d.S(X, Z) - d.S(Z, phiX)) - ey * d.al(X, Z) -
                     ((2.0 * n - 1.0) * ex - da) * ey * ez - (n - 1.0) * ez * d.Om(X, Y) +
                     (n - 3.0) * ey * d.Om(X, Z) - (n - 0.5) * ey * d.g(X, Z) + da * d.g(Y, Z);
  return {Tensor::scalar(d.nablaS(X, Y, Z), d.n), Tensor::scalar(rhs, d.n)};
}

/// S(X,Z) against the Ricci form stated when nablat St vanishes.
inline std::pair<Tensor, Tensor> ricci_value_form(const PointData& d, const VectorTuple& t) {
  const Tensor &X = t.X(), &Z = t.Z();
  const double n = d.n;
  const double rhs = 2.0 * (n - 2.0) * d.Om(X, Z) - d.al(X, Z) - (n - 0.5) * d.g(X, Z) +
                     (2.0 * n - 1.0) * d.eta(X) * d.eta(Z);
  return {Tensor::scalar(d.S(X, Z), d.n), Tensor::scalar(rhs, d.n)};
}

}  // namespace relations

}  // namespace geomlab
