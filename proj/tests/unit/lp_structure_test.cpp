#include <algorithm>

#include <gtest/gtest.h>

#include "geomlab/fixtures/fixtures.hpp"
#include "geomlab/lp_structure/axioms.hpp"

using namespace geomlab;

namespace {

constexpr std::uint64_t kSeed = 42;

AxiomReport report_for(const std::string& id, int points = 60) {
  const FixtureSpec& f = find_fixture(id);
  return verify_axioms(f.structure, f.sample_spec(kSeed, points, 4));
}

}  // namespace

TEST(Axioms, WarpedFixturesSatisfyEveryAxiom) {
  for (const std::string id : {"F3", "F5"}) {
    const AxiomReport r = report_for(id);
    EXPECT_TRUE(r.all_passed()) << id;
    EXPECT_EQ(r.samples, 60u);
    for (const AxiomResidual& a : r.axioms) EXPECT_LT(a.max_residual, 1e-9) << id << " " << axiom_name(a.axiom);
    EXPECT_LT(r.d_eta_residual, 1e-12) << id;
  }
}

TEST(Axioms, NegativeControlsFailTheirDeclaredSets) {
  for (const std::string id : {"W3c2", "N_flat", "N_rank", "N_asym"}) {
    const FixtureSpec& f = find_fixture(id);
    const AxiomReport r = report_for(id);
    ASSERT_TRUE(f.declared_axiom.has_value());
    EXPECT_GT(r[*f.declared_axiom].max_residual, 1e-2) << id;
    EXPECT_EQ(r.failing(), f.expected_failures) << id;
    EXPECT_FALSE(r.all_passed());
  }
}

TEST(Axioms, WarpRateOtherThanOneBreaksOnlyTheDerivativeAxioms) {
  for (double c : {0.5, 1.5, 2.0}) {
    const FixtureSpec f = make_warped_fixture(3, c);
    EXPECT_FALSE(f.positive);
    const AxiomReport r = verify_axioms(f.structure, f.sample_spec(kSeed, 20, 2));
    EXPECT_EQ(r.failing(), (std::vector<Axiom>{Axiom::nabla_xi, Axiom::nabla_phi})) << c;
    EXPECT_GT(r[Axiom::nabla_xi].max_residual, 1e-2) << c;
  }
}

TEST(Axioms, ReportIsDeterministic) {
  const AxiomReport a = report_for("F5", 20), b = report_for("F5", 20);
  for (std::size_t k = 0; k < a.axioms.size(); ++k) EXPECT_EQ(a.axioms[k].max_residual, b.axioms[k].max_residual);
  EXPECT_EQ(a.d_eta_residual, b.d_eta_residual);
}

TEST(Axioms, NamesRoundTrip) {
  for (Axiom a : all_axioms()) EXPECT_EQ(parse_axiom(axiom_name(a)), a);
  EXPECT_FALSE(parse_axiom("nabla_psi").has_value());
}

TEST(Calibration, ExactlyOneConventionFitsTheWarpedFixtures) {
  for (const std::string id : {"F3", "F5"}) {
    const FixtureSpec& f = find_fixture(id);
    const auto conv = calibrate_conventions(f.structure, sample(f.sample_spec(kSeed, 10, 2)));
    ASSERT_EQ(conv.size(), 1u) << id;
    EXPECT_EQ(conv.front(), kCalibratedConvention);
  }
}

TEST(Structure, PhiSquaredProjectsOntoHorizontalVectors) {
  const FixtureSpec& f = find_fixture("F5");
  for (const Sample& smp : sample(f.sample_spec(kSeed, 10, 3))) {
    const StructureJets sj = structure_jets(f.structure, smp.point, 1);
    const Tensor g = value_of(sj.g), xi = value_of(sj.xi), eta = value_of(sj.eta), phi = value_of(sj.phi);
    EXPECT_NEAR(inner(g, xi, xi), -1.0, 1e-14);
    EXPECT_EQ(numerical_rank(phi), f.dim - 1);
    for (const VectorTuple& t : smp.tuples) {
      const Tensor h = apply(phi, {apply(phi, {t.X()})});
      EXPECT_NEAR(scalar_value(apply(eta, {h})), 0.0, 1e-13);   // phi^2 X is horizontal
      EXPECT_NEAR(inner(g, h, xi), 0.0, 1e-13);
      const Tensor p = horizontal_project(eta, xi, t.X());
      EXPECT_LT(max_abs(p - h), 1e-13);                            // and agrees with X + eta(X) xi
      EXPECT_LT(max_abs(horizontal_project(eta, xi, p) - p), 1e-13);  // idempotent
      EXPECT_LT(max_abs(horizontal_project(f.structure, t.X(), smp.point) - p), 1e-13);
    }
    const Tensor om = omega(f.structure, smp.point);
    EXPECT_LT(max_abs(om - transpose(om)), 1e-14);
  }
}

TEST(Structure, ImplicitEtaIsTheMetricDualOfXi) {
  const FixtureSpec& f = find_fixture("F3");
  const Point p{0.2, 0.4, -0.3};
  const StructureJets sj = structure_jets(f.structure, p, 1);
  EXPECT_LT(max_abs(value_of(sj.eta) - lower(value_of(sj.g), value_of(sj.xi))), 1e-15);
}

TEST(Structure, RejectsMismatchedFields) {
  const FixtureSpec& f = find_fixture("F3");
  EXPECT_THROW(LPStructure(f.structure.xi(), f.structure.xi(), f.structure.metric()), ArgumentError);
  EXPECT_THROW(LPStructure(f.structure.phi(), f.structure.phi(), f.structure.metric()), ArgumentError);
}

TEST(Rank, NumericalRankOfSimpleMatrices) {
  EXPECT_EQ(numerical_rank(identity_tensor(4)), 4);
  EXPECT_EQ(numerical_rank(Tensor({1, 1}, 3)), 0);
  Tensor m = identity_tensor(3);
  m(2, 2) = 0.0;
  m(0, 1) = 5.0;
  EXPECT_EQ(numerical_rank(m), 2);
}
