#include <gtest/gtest.h>

#include "geomlab/fixtures/fixtures.hpp"
#include "geomlab/parallel.hpp"

using namespace geomlab;

TEST(Registry, DefaultRegistryListsAllFixtures) {
  const auto& reg = default_registry();
  std::vector<std::string> ids;
  for (const auto& f : reg) ids.push_back(f.id);
  EXPECT_EQ(ids, (std::vector<std::string>{"F3", "F5", "W3c2", "N_flat", "N_rank", "N_asym"}));
  EXPECT_TRUE(find_fixture("F3").positive);
  EXPECT_EQ(find_fixture("F5").dim, 5);
  EXPECT_FALSE(find_fixture("W3c2").positive);
  EXPECT_EQ(find_fixture("W3c2").c, 2.0);
  EXPECT_EQ(find_fixture("N_rank").declared_axiom, Axiom::rank_phi);
  EXPECT_EQ(find_fixture("N_asym").declared_axiom, Axiom::omega_symmetric);
  EXPECT_THROW(find_fixture("F4"), ArgumentError);
}

TEST(Registry, ShippedRegistryFileMatchesTheBuiltIn) {
  const auto file = load_registry(std::string(GEOMLAB_SOURCE_DIR) + "/catalog/fixtures.txt");
  const auto& builtin = default_registry();
  ASSERT_EQ(file.size(), builtin.size());
  for (std::size_t i = 0; i < file.size(); ++i) {
    EXPECT_EQ(file[i].id, builtin[i].id);
    EXPECT_EQ(file[i].kind, builtin[i].kind);
    EXPECT_EQ(file[i].dim, builtin[i].dim);
    EXPECT_EQ(file[i].c, builtin[i].c);
    EXPECT_EQ(file[i].expected_failures, builtin[i].expected_failures);
  }
}

TEST(Registry, ParsesOptionalColumnsAndComments) {
  const auto reg = parse_registry("# comment\n\nA warped 4 1 -0.5 0.25  # trailing\nB flat_minkowski 5\n");
  ASSERT_EQ(reg.size(), 2u);
  EXPECT_EQ(reg[0].dim, 4);
  EXPECT_EQ(reg[0].bounds.back().lo, -0.5);
  EXPECT_EQ(reg[0].bounds.back().hi, 0.25);
  EXPECT_EQ(reg[0].bounds.front().lo, -1.0);
  EXPECT_EQ(reg[1].kind, FixtureKind::flat_minkowski);
  EXPECT_EQ(reg[1].dim, 5);
}

TEST(Registry, MalformedLinesAreRejected) {
  EXPECT_THROW(parse_registry("A warped\n"), ArgumentError);
  EXPECT_THROW(parse_registry("A spherical 3\n"), ArgumentError);
  EXPECT_THROW(parse_registry("A warped 3.5\n"), ArgumentError);
  EXPECT_THROW(parse_registry("A warped 2\n"), ArgumentError);
  EXPECT_THROW(parse_registry("A warped 3 x\n"), ArgumentError);
  EXPECT_THROW(parse_registry("A warped 3\nA warped 5\n"), ArgumentError);
  EXPECT_THROW(parse_registry("A warped 3 1 1 -1\n"), ArgumentError);
  EXPECT_THROW(load_registry("/nonexistent/registry.txt"), ArgumentError);
}

TEST(Registry, KindNamesRoundTrip) {
  for (FixtureKind k : {FixtureKind::warped, FixtureKind::flat_minkowski, FixtureKind::rank_deficient_phi,
                        FixtureKind::asymmetric_omega})
    EXPECT_EQ(parse_fixture_kind(fixture_kind_name(k)), k);
  EXPECT_FALSE(parse_fixture_kind("hyperbolic").has_value());
  EXPECT_THROW(make_negative_fixture(FixtureKind::warped), ArgumentError);
}

TEST(Sampler, SameSpecSameStream) {
  const SampleSpec spec = find_fixture("F5").sample_spec(42, 30, 3);
  const auto a = sample(spec), b = sample(spec);
  ASSERT_EQ(a.size(), 30u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].point, b[i].point);
    ASSERT_EQ(a[i].tuples.size(), 3u);
    for (std::size_t t = 0; t < 3; ++t)
      for (int k = 0; k < VectorTuple::kSize; ++k) EXPECT_EQ(a[i].tuples[t].v[k], b[i].tuples[t].v[k]);
  }
  SampleSpec other = spec;
  other.seed = 43;
  EXPECT_NE(sample(other)[0].point, a[0].point);
}

TEST(Sampler, PointsStayInsideTheBox) {
  SampleSpec spec{7, 500, 1, {{-1, 1}, {0, 0.5}, {-0.25, -0.125}}};
  for (const Sample& s : sample(spec)) {
    EXPECT_GE(s.point[0], -1.0);
    EXPECT_LT(s.point[0], 1.0);
    EXPECT_GE(s.point[1], 0.0);
    EXPECT_LT(s.point[1], 0.5);
    EXPECT_GE(s.point[2], -0.25);
    EXPECT_LT(s.point[2], -0.125);
    for (const Tensor& v : s.tuples[0].v) EXPECT_LE(max_abs(v), 1.0);
  }
}

TEST(Sampler, RejectsBadSpecs) {
  EXPECT_THROW(sample(SampleSpec{1, 5, 1, {}}), ArgumentError);
  EXPECT_THROW(sample(SampleSpec{1, -1, 1, {{0, 1}, {0, 1}, {0, 1}}}), ArgumentError);
  EXPECT_THROW(sample(SampleSpec{1, 5, 1, {{0, 1}, {1, 0}, {0, 1}}}), ArgumentError);
}

TEST(Sampler, SplitMixUniformIsInUnitInterval) {
  SplitMix64 rng(0);
  double lo = 1.0, hi = 0.0, sum = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.uniform();
    lo = std::min(lo, u);
    hi = std::max(hi, u);
    sum += u;
  }
  EXPECT_GE(lo, 0.0);
  EXPECT_LT(hi, 1.0);
  EXPECT_NEAR(sum / 10000.0, 0.5, 0.02);
}

TEST(Parallel, ResultsLandInIndexOrder) {
  const auto out = parallel_map<std::size_t>(1000, [](std::size_t i) { return i * i; });
  for (std::size_t i = 0; i < out.size(); ++i) EXPECT_EQ(out[i], i * i);
  EXPECT_GE(worker_count(), 1);
  EXPECT_THROW(parallel_map<int>(10, [](std::size_t i) -> int {
                 if (i == 7) throw EvaluationError("boom");
                 return 0;
               }),
               EvaluationError);
}
