#pragma once

// The unconditional identity catalog.  Each evaluator returns the identity as a
// list of (lhs, rhs) parts evaluated at one point with one argument tuple; the
// residual is the largest normalized residual over the parts.

#include <array>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "geomlab/error.hpp"
#include "geomlab/fixtures/fixtures.hpp"
#include "geomlab/ssmc/closed_forms.hpp"
#include "geomlab/verifier/sample_set.hpp"

namespace geomlab {

enum class IdentityId {
  E2_4, E2_5, E2_6, E2_6a, E2_7, E2_8, E2_8a, E2_8b, E2_9, E2_10, E2_15, E2_16,
  E2_17, E2_18, E2_19, E2_20, E2_21, E2_22, E2_23, E2_24, E2_25, E2_26, E2_27, E2_28,
  E2_29, E2_30, E2_33, E2_34, E2_35, E2_37, E2_38, E3_14, E3_15, E3_16, E3_17
};
inline constexpr int kIdentityCount = 35;

inline constexpr double kLowOrderTolerance = 1e-9;
inline constexpr double kThirdOrderTolerance = 1e-7;

inline constexpr std::array<IdentityId, kIdentityCount> all_identities() {
  using I = IdentityId;
  return {I::E2_4,  I::E2_5,  I::E2_6,  I::E2_6a, I::E2_7,  I::E2_8,  I::E2_8a, I::E2_8b, I::E2_9,
          I::E2_10, I::E2_15, I::E2_16, I::E2_17, I::E2_18, I::E2_19, I::E2_20, I::E2_21, I::E2_22,
          I::E2_23, I::E2_24, I::E2_25, I::E2_26, I::E2_27, I::E2_28, I::E2_29, I::E2_30, I::E2_33,
          I::E2_34, I::E2_35, I::E2_37, I::E2_38, I::E3_14, I::E3_15, I::E3_16, I::E3_17};
}

inline std::string_view identity_name(IdentityId id) {
  static constexpr std::array<std::string_view, kIdentityCount> names = {
      "E2_4",  "E2_5",  "E2_6",  "E2_6a", "E2_7",  "E2_8",  "E2_8a", "E2_8b", "E2_9",
      "E2_10", "E2_15", "E2_16", "E2_17", "E2_18", "E2_19", "E2_20", "E2_21", "E2_22",
      "E2_23", "E2_24", "E2_25", "E2_26", "E2_27", "E2_28", "E2_29", "E2_30", "E2_33",
      "E2_34", "E2_35", "E2_37", "E2_38", "E3_14", "E3_15", "E3_16", "E3_17"};
  return names[static_cast<std::size_t>(id)];
}

inline std::optional<IdentityId> parse_identity(std::string_view s) {
  for (IdentityId id : all_identities())
    if (identity_name(id) == s) return id;
  return std::nullopt;
}

/// Identities that involve third derivatives of the metric.
inline bool is_third_order(IdentityId id) {
  using I = IdentityId;
  switch (id) {
    case I::E2_8a:
    case I::E2_8b:
    case I::E2_28:
    case I::E2_29:
    case I::E2_30:
    case I::E2_37:
    case I::E2_38: return true;
    default: return false;
  }
}

inline double identity_tolerance(IdentityId id) { return is_third_order(id) ? kThirdOrderTolerance : kLowOrderTolerance; }

using Parts = std::vector<std::pair<Tensor, Tensor>>;

/// The two ways of reading the mixed Y/Z variables of the xi-slot derivative identity.
enum class MixedSlotReading { y_for_z, literal };

inline std::string_view reading_name(MixedSlotReading r) { return r == MixedSlotReading::y_for_z ? "y_for_z" : "literal"; }

/// (nabla_W R)(X,xi)Y against Omega(W,Z)X - g(X,Z)phi W - R(X,phi W)Z, with Z
/// either identified with Y or taken as an independent argument.
inline Parts mixed_slot_parts(const PointData& d, const VectorTuple& t, MixedSlotReading reading) {
  const Tensor &X = t.X(), &Y = t.Y(), &W = t.W();
  const Tensor& Z = reading == MixedSlotReading::y_for_z ? t.Y() : t.Z();
  const Tensor phiW = d.phi(W);
  return {{d.nablaR(W, X, d.xi(), Y), d.Om(W, Z) * X - d.g(X, Z) * phiW - d.R(X, phiW, Z)}};
}

inline Parts identity_parts(IdentityId id, const PointData& d, const VectorTuple& t) {
  using I = IdentityId;
  const int n_int = d.n;
  const double n = n_int;
  const Tensor &X = t.X(), &Y = t.Y(), &Z = t.Z(), &W = t.W(), &U = t.U();
  const Tensor& xi = d.xi();
  const Tensor zero_v({1, 0}, n_int);
  auto sc = [n_int](double v) { return Tensor::scalar(v, n_int); };
  auto phi2 = [&d](const Tensor& v) { return d.phi(d.phi(v)); };

  switch (id) {
    case I::E2_4:
      return {{d.phi(xi), zero_v},
              {sc(d.eta(d.phi(X))), sc(0.0)},
              {sc(static_cast<double>(d.rank_phi)), sc(n - 1.0)}};
    case I::E2_5:
      return {{sc(d.nablaEta(X, Y)), sc(d.Om(X, Y))}, {sc(d.Om(X, xi)), sc(0.0)}};
    case I::E2_6:
      return {{d.R(X, Y, xi), d.eta(Y) * X - d.eta(X) * Y}};
    case I::E2_6a:
      return {{sc(d.eta(d.R(X, Y, Z))), sc(d.eta(X) * d.g(Y, Z) - d.eta(Y) * d.g(X, Z))}};
    case I::E2_7:
      return {{sc(d.S(X, xi)), sc((n - 1.0) * d.eta(X))}};
    case I::E2_8:
      return {{sc(d.S(d.phi(X), d.phi(Y))), sc(d.S(X, Y) + (n - 1.0) * d.eta(X) * d.eta(Y))}};
    case I::E2_8a:
      return {{d.nablaR(W, X, Y, xi), d.Om(Y, W) * X - d.Om(X, W) * Y - d.R(X, Y, d.phi(W))}};
    case I::E2_8b:
      return mixed_slot_parts(d, t, MixedSlotReading::y_for_z);
    case I::E2_9:
      return {{d.tau(X, Y), d.eta(Y) * X - d.eta(X) * Y}};
    case I::E2_10:
      return {{d.nablat(Symbol::g), Tensor({0, 3}, n_int)}};
    case I::E2_15:
      return {{sc(d.g(d.L(X), Y)), sc(d.al(X, Y))}};
    case I::E2_16:
      return {{d.Rt(X, Y, Z) + d.Rt(Y, Z, X) + d.Rt(Z, X, Y), zero_v}};
    case I::E2_17:
      return {{sc(d.g(d.Rt(X, Y, Z), U)), sc(-d.g(d.Rt(Y, X, Z), U))}};
    case I::E2_18:
      return {{sc(d.g(d.Rt(X, Y, Z), U)), sc(-d.g(d.Rt(X, Y, U), Z))}};
    case I::E2_19:
      return {{sc(d.g(d.Rt(X, Y, Z), U)), sc(d.g(d.Rt(Z, U, X), Y))}};
    case I::E2_20:
      return {{sc(d.St(X, Y)), sc(d.S(X, Y) - (n - 2.0) * d.al(X, Y) - d.scalar(Symbol::a) * d.g(X, Y))}};
    case I::E2_21:
      return {{sc(d.scalar(Symbol::rt)), sc(d.scalar(Symbol::r) - 2.0 * (n - 1.0) * d.scalar(Symbol::a))}};
    case I::E2_22: {
      const Tensor rt = d.Rt(X, Y, Z);
      return {{sc(d.g(rt, xi)), sc(d.eta(rt))},
              {sc(d.eta(rt)), sc(d.nablatEta(X, Z) * d.eta(Y) - d.nablatEta(Y, Z) * d.eta(X))}};
    }
    case I::E2_23:
      return {{d.Rt(xi, X, xi), -1.0 * d.nablatXi(X)}, {-1.0 * d.nablatXi(X), X + d.eta(X) * xi - d.phi(X)}};
    case I::E2_24:
      return {{d.Rt(X, Y, xi), d.eta(X) * d.nablatXi(Y) - d.eta(Y) * d.nablatXi(X)}};
    case I::E2_25: {
      const Tensor nx = d.nablatXi(X);
      return {{d.Rt(xi, X, Y), d.eta(Y) * nx - d.g(Y, nx) * xi}};
    }
    case I::E2_26:
      return {{sc(d.St(X, xi)), sc((n / 2.0 - d.scalar(Symbol::a)) * d.eta(X))}};
    case I::E2_27: {
      const double a = d.scalar(Symbol::a);
      return {{sc(d.St(d.phi(X), d.phi(Y))),
               sc(d.S(X, Y) + (n / 2.0 - a) * d.eta(X) * d.eta(Y) - (n - 2.0) * d.al(X, Y) - a * d.g(X, Y))}};
    }
    case I::E2_28:
      return {{d.nablatRt(W, X, Y, xi), nabla_tilde_curvature_xi_closed(d, W, X, Y)}};
    case I::E2_29:
      return {{sc(d.g(d.nablatRt(W, X, Y, Z), U)), sc(-d.g(d.nablatRt(W, X, Y, U), Z))}};
    case I::E2_30:
      return {{d.nablatRt(W, X, Y, Z), nabla_tilde_curvature_closed(d, W, X, Y, Z)}};
    case I::E2_33:
      return {{sc(d.al(X, xi)), sc(0.5 * d.eta(X))}};
    case I::E2_34:
      return {{sc(d.nablaAlpha(W, X, xi)), sc(0.5 * d.Om(W, X) - d.al(X, d.phi(W)))}};
    case I::E2_35:
      return {{d.nablaL(W, X), (d.g(W, X) - d.Om(W, X)) * xi + d.eta(X) * (W - d.phi(W)) +
                                   2.0 * d.eta(X) * d.eta(W) * xi}};
    case I::E2_37:
      return {{sc(d.nablatSt(X, Y, Z)), sc(nabla_tilde_ricci_closed(d, X, Y, Z))}};
    case I::E2_38:
      return {{sc(d.nablaS(X, Y, xi)), sc(nabla_ricci_xi_closed(d, X, Y))}};
    case I::E3_14:
      return {{sc(d.g(phi2(X), xi)), sc(0.0)}, {sc(d.g(phi2(Y), xi)), sc(0.0)}, {sc(d.g(phi2(Z), xi)), sc(0.0)}};
    case I::E3_15:
      return {{d.R(phi2(X), phi2(Y), phi2(W)),
               d.R(X, Y, W) + (d.eta(Y) * X - d.eta(X) * Y) * d.eta(W) +
                   (d.g(Y, W) * d.eta(X) - d.g(X, W) * d.eta(Y)) * xi}};
    case I::E3_16:
      return {{d.R(phi2(X), phi2(Y), d.phi(phi2(W))),
               d.R(X, Y, d.phi(W)) + (d.Om(Y, W) * d.eta(X) - d.Om(X, W) * d.eta(Y)) * xi}};
    case I::E3_17:
      return {{sc(d.al(phi2(X), phi2(W))), sc(d.al(X, W) + 0.5 * d.eta(X) * d.eta(W))}};
  }
  throw ArgumentError("identity_parts: unknown identity");
}

inline double parts_residual(const Parts& parts) {
  double r = 0.0;
  for (const auto& [lhs, rhs] : parts) r = std::max(r, normalized_residual(lhs, rhs));
  return r;
}

inline double identity_residual(IdentityId id, const PointData& d, const VectorTuple& t) {
  return parts_residual(identity_parts(id, d, t));
}

inline ResidualReport check_identity(IdentityId id, const SampleSet& set) {
  return residual_report(std::string(identity_name(id)), set, identity_tolerance(id),
                         [id](const PointData& d, const VectorTuple& t) { return identity_residual(id, d, t); });
}

inline std::vector<ResidualReport> check_catalog(const SampleSet& set) {
  std::vector<ResidualReport> out;
  out.reserve(kIdentityCount);
  for (IdentityId id : all_identities()) out.push_back(check_identity(id, set));
  return out;
}

/// Bundle for a fixture: verified for positive fixtures, unchecked (falsification
/// mode) for negative controls when `allow_unverified` is set.
inline SSMCBundle fixture_bundle(const FixtureSpec& f, const SampleSpec& spec, bool allow_unverified = false) {
  if (allow_unverified && !f.positive) return build_ssmc_unchecked(f.structure);
  return build_ssmc(f.structure, verify_axioms(f.structure, spec));
}

inline ResidualReport check_identity(IdentityId id, const FixtureSpec& f, const SampleSpec& spec,
                                     bool falsification_mode = false) {
  const SSMCBundle b = fixture_bundle(f, spec, falsification_mode);
  return check_identity(id, prepare_samples(b, sample(spec), f.id));
}

/// Both readings of the mixed-slot identity, evaluated on the same samples.
struct MixedSlotAdjudication {
  ResidualReport y_for_z;
  ResidualReport literal;
  /// Set when neither reading holds on the fixture.
  bool flagged_for_review = false;
};

inline MixedSlotAdjudication adjudicate_mixed_slot(const SampleSet& set) {
  auto run = [&set](MixedSlotReading r) {
    return residual_report(std::string("E2_8b_") + std::string(reading_name(r)), set, kThirdOrderTolerance,
                           [r](const PointData& d, const VectorTuple& t) { return parts_residual(mixed_slot_parts(d, t, r)); });
  };
  MixedSlotAdjudication adj{run(MixedSlotReading::y_for_z), run(MixedSlotReading::literal), false};
  adj.flagged_for_review = !adj.y_for_z.passed && !adj.literal.passed;
  return adj;
}

// ---------------------------------------------------------------------------
// Closed form versus generic computation

struct CrossCheck {
  std::string id;
  ResidualReport report;
};

/// Closed forms against the generic objects: the Rt tensor, St and rt, and the
/// derivative of Rt.  Tolerances 1e-8, 1e-9 and 1e-7.
inline std::vector<CrossCheck> closed_form_cross_checks(const SampleSet& set) {
  std::vector<CrossCheck> out;
  out.push_back({"E2_12", residual_report("E2_12", set, 1e-8, [](const PointData& d, const VectorTuple&) {
                   return normalized_residual(d.value(Symbol::Rt), curvature_tilde_closed(d));
                 })});
  out.push_back({"E2_20_tensor", residual_report("E2_20_tensor", set, 1e-9, [](const PointData& d, const VectorTuple&) {
                   return normalized_residual(d.value(Symbol::St), ricci_tilde_closed(d).ricci);
                 })});
  out.push_back({"E2_21_scalar", residual_report("E2_21_scalar", set, 1e-9, [](const PointData& d, const VectorTuple&) {
                   return normalized_residual(d.scalar(Symbol::rt), ricci_tilde_closed(d).scalar);
                 })});
  out.push_back({"E2_30_generic", residual_report("E2_30_generic", set, 1e-7, [](const PointData& d, const VectorTuple& t) {
                   return normalized_residual(d.nablatRt(t.W(), t.X(), t.Y(), t.Z()),
                                              nabla_tilde_curvature_closed(d, t.W(), t.X(), t.Y(), t.Z()));
                 })});
  return out;
}

}  // namespace geomlab
