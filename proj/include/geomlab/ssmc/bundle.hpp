#pragma once

#include <utility>

#include "geomlab/error.hpp"
#include "geomlab/fixtures/sampler.hpp"
#include "geomlab/lp_structure/axioms.hpp"
#include "geomlab/ssmc/point_data.hpp"

namespace geomlab {

/// The semi-symmetric metric connection of an LP-Sasakian structure together
/// with the deformation fields alpha, L and the traces a = tr alpha, psi = tr Omega.
class SSMCBundle {
 public:
  const LPStructure& base() const { return base_; }
  const ConnectionCoefficients& gamma_tilde() const { return gamma_tilde_; }
  const TensorField& alpha() const { return alpha_; }
  const TensorField& l_op() const { return l_op_; }
  const ScalarField& a() const { return a_; }
  const ScalarField& psi() const { return psi_; }
  int dim() const { return base_.dim(); }
  /// Whether the base structure was checked against the axioms before construction.
  bool verified() const { return verified_; }

  PointData point_data(const Point& p) const { return compute_point_data(base_, p); }

  friend SSMCBundle build_ssmc(const LPStructure& s, const AxiomReport& report);
  friend SSMCBundle build_ssmc_unchecked(const LPStructure& s);

 private:
  LPStructure base_;
  ConnectionCoefficients gamma_tilde_;
  TensorField alpha_;
  TensorField l_op_;
  ScalarField a_;
  ScalarField psi_;
  bool verified_ = false;
};

/// Construct without consulting the axioms; used to run evaluators on negative
/// controls, where results are informational only.
inline SSMCBundle build_ssmc_unchecked(const LPStructure& s) {
  SSMCBundle b;
  b.base_ = s;
  const int n = s.dim();
  b.gamma_tilde_ = ConnectionCoefficients(
      n, [s](const Point& p, int order) { return ssmc_gamma(structure_jets(s, p, order + 1)); }, "semi-symmetric");
  b.alpha_ = TensorField::from_point_function(
      {0, 2}, n,
      [s](const Point& p, int order) {
        const StructureJets sj = structure_jets(s, p, order + 1);
        return alpha_from(sj, ssmc_gamma(sj));
      },
      "alpha");
  b.l_op_ = TensorField::from_point_function(
      {1, 1}, n,
      [s](const Point& p, int order) {
        const StructureJets sj = structure_jets(s, p, order + 1);
        return l_from(sj, ssmc_gamma(sj));
      },
      "L");
  b.a_ = ScalarField(TensorField::from_point_function(
      {0, 0}, n,
      [s, n](const Point& p, int order) {
        const StructureJets sj = structure_jets(s, p, order + 1);
        return JetTensor::scalar(trace_with(sj.g_inv, alpha_from(sj, ssmc_gamma(sj))), n);
      },
      "a"));
  b.psi_ = ScalarField(TensorField::from_point_function(
      {0, 0}, n,
      [s, n](const Point& p, int order) {
        const StructureJets sj = structure_jets(s, p, std::max(order, 1));
        return JetTensor::scalar(trace_with(sj.g_inv, omega_from(sj.g, sj.phi)), n);
      },
      "psi"));
  return b;
}

/// Construct from a structure that has passed verify_axioms; anything else is refused.
inline SSMCBundle build_ssmc(const LPStructure& s, const AxiomReport& report) {
  if (!report.all_passed()) {
    std::string failing;
    for (Axiom a : report.failing()) failing += (failing.empty() ? "" : ", ") + std::string(axiom_name(a));
    if (!report.failures.empty()) failing += (failing.empty() ? "" : ", ") + std::string("evaluation failures");
    throw ConstructionError("build_ssmc: structure fails the axioms (" + failing + ")");
  }
  SSMCBundle b = build_ssmc_unchecked(s);
  b.verified_ = true;
  return b;
}

/// Verify on a small default sample, then construct.
inline SSMCBundle build_ssmc(const LPStructure& s, const std::vector<Interval>& bounds) {
  return build_ssmc(s, verify_axioms(s, SampleSpec{42, 20, 4, bounds}));
}

}  // namespace geomlab
