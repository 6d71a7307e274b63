#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "geomlab/tensor_core/field.hpp"

using namespace geomlab;

namespace {

Tensor random_tensor(Valence v, int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Tensor t(v, n);
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = u(rng);
  return t;
}

Tensor random_vector(int n, std::mt19937_64& rng) { return random_tensor({1, 0}, n, rng); }

ScalarField sample_field() {
  // mixes every elementary function the jets support
  return ScalarField(3, [](std::span<const Jet> x) {
    return exp(0.3 * x[0]) * sin(x[1] + x[2]) + x[0] * x[1] * x[2] / (2.0 + cos(x[1])) + sqrt(3.0 + x[2] * x[2]) +
           log(2.0 + x[0] * x[0]) + pow(1.5 + x[1] * x[1], 1.5);
  });
}

}  // namespace

TEST(Jet, ExponentialWarpFactorHasClosedFormDerivatives) {
  // e^{2z}: every z-derivative of order k is 2^k e^{2z}, everything else vanishes
  const ScalarField f(3, [](std::span<const Jet> x) { return exp(2.0 * x[2]); });
  for (double z : {-1.0, -0.3, 0.0, 0.7}) {
    const Point p{0.1, -0.4, z};
    const Jet j = jet_eval(f, p, 3);
    const double e = std::exp(2.0 * z);
    EXPECT_NEAR(j.value(), e, 1e-15 * e);
    EXPECT_NEAR(j.d(2), 2.0 * e, 1e-14 * e);
    EXPECT_NEAR(j.d(2, 2), 4.0 * e, 1e-14 * e);
    EXPECT_NEAR(j.d(2, 2, 2), 8.0 * e, 1e-14 * e);
    EXPECT_EQ(j.d(0), 0.0);
    EXPECT_EQ(j.d(0, 2), 0.0);
    EXPECT_EQ(j.d(1, 2, 2), 0.0);
  }
}

TEST(Jet, AgreesWithCentralDifferences) {
  const ScalarField f = sample_field();
  for (const Point& p : {Point{0.2, -0.5, 0.4}, Point{-0.7, 0.3, -0.9}, Point{0.0, 0.0, 0.0}}) {
    EXPECT_LT(fd_check(f, p, 1), 1e-7);
    EXPECT_LT(fd_check(f, p, 2), 1e-5);
    EXPECT_LT(fd_check(f, p, 3), 1e-3);
  }
}

TEST(Jet, MixedPartialsAreSymmetric) {
  const Jet j = jet_eval(sample_field(), Point{0.3, 0.1, -0.2}, 3);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      EXPECT_DOUBLE_EQ(j.d(a, b), j.d(b, a));
      for (int c = 0; c < 3; ++c) {
        EXPECT_NEAR(j.d(a, b, c), j.d(c, a, b), 1e-12);
        EXPECT_NEAR(j.d(a, b, c), j.d(b, c, a), 1e-12);
      }
    }
}

TEST(Jet, PartialLowersOrder) {
  const Jet j = jet_eval(sample_field(), Point{0.3, 0.1, -0.2}, 3);
  const Jet dj = j.partial(1);
  EXPECT_EQ(dj.order(), 2);
  EXPECT_DOUBLE_EQ(dj.value(), j.d(1));
  EXPECT_DOUBLE_EQ(dj.d(0), j.d(1, 0));
  EXPECT_DOUBLE_EQ(dj.d(2, 0), j.d(1, 2, 0));
}

TEST(Jet, RejectsOutOfRangeOrders) {
  const ScalarField f = sample_field();
  EXPECT_THROW(jet_eval(f, Point{0, 0, 0}, 4), ArgumentError);
  EXPECT_THROW(fd_check(f, Point{0, 0, 0}, -1), ArgumentError);
  const Jet j = jet_eval(f, Point{0, 0, 0}, 1);
  EXPECT_THROW(j.d(0, 0), ArgumentError);
}

TEST(Point, RejectsNonFiniteCoordinates) {
  EXPECT_THROW(Point({0.0, std::nan(""), 1.0}), ArgumentError);
  EXPECT_THROW(Point({0.0, HUGE_VAL, 1.0}), ArgumentError);
}

TEST(Tensor, TraceMatchesBruteForce) {
  std::mt19937_64 rng(1);
  for (int n : {3, 4, 5}) {
    const Tensor t = random_tensor({1, 2}, n, rng);
    const Tensor c0 = contract(t, 0, 0), c1 = contract(t, 0, 1);
    for (int j = 0; j < n; ++j) {
      double s0 = 0.0, s1 = 0.0;
      for (int i = 0; i < n; ++i) {
        s0 += t(i, i, j);
        s1 += t(i, j, i);
      }
      EXPECT_NEAR(c0(j), s0, 1e-14);
      EXPECT_NEAR(c1(j), s1, 1e-14);
    }
  }
}

TEST(Tensor, ApplyingAnOperatorIsMatrixVectorProduct) {
  std::mt19937_64 rng(2);
  const int n = 4;
  const Tensor a = random_tensor({1, 1}, n, rng);
  const Tensor b = random_tensor({1, 1}, n, rng);
  const Tensor v = random_vector(n, rng);
  const Tensor av = apply(a, {v});
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += a(i, j) * v(j);
    EXPECT_NEAR(av(i), s, 1e-14);
  }
  // contraction of a (x) b over the inner pair is the naive matrix product
  const Tensor ab = contract(tensor_product(a, b), 1, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      double s = 0.0;
      for (int j = 0; j < n; ++j) s += a(i, j) * b(j, k);
      EXPECT_NEAR(ab(i, k), s, 1e-14);
    }
}

TEST(Tensor, ApplyFillsLeadingSlotsInOrder) {
  std::mt19937_64 rng(3);
  const int n = 3;
  const Tensor r = random_tensor({1, 3}, n, rng);
  const Tensor x = random_vector(n, rng), y = random_vector(n, rng), z = random_vector(n, rng);
  const Tensor rxyz = apply(r, {x, y, z});
  const Tensor rxy = apply(r, {x, y});
  EXPECT_EQ(rxy.valence(), (Valence{1, 1}));
  for (int l = 0; l < n; ++l) {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) s += r(l, i, j, k) * x(i) * y(j) * z(k);
    EXPECT_NEAR(rxyz(l), s, 1e-13);
  }
  EXPECT_LT(max_abs(apply(rxy, {z}) - rxyz), 1e-14);
  EXPECT_THROW(apply(x, {x}), ArgumentError);
}

TEST(Tensor, ContractionIsLinear) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const Tensor s = random_tensor({2, 2}, 3, rng), t = random_tensor({2, 2}, 3, rng);
    const double a = std::uniform_real_distribution<double>(-2, 2)(rng);
    for (int u = 0; u < 2; ++u)
      for (int l = 0; l < 2; ++l) {
        const Tensor lhs = contract(a * s + t, u, l);
        const Tensor rhs = a * contract(s, u, l) + contract(t, u, l);
        EXPECT_LT(max_abs(lhs - rhs), 1e-13);
      }
  }
}

TEST(Tensor, SwapLowerIsAnInvolution) {
  std::mt19937_64 rng(5);
  const Tensor t = random_tensor({1, 3}, 3, rng);
  EXPECT_EQ(swap_lower(swap_lower(t, 0, 2), 0, 2), t);
  const Tensor s = swap_lower(t, 1, 2);
  EXPECT_DOUBLE_EQ(s(0, 1, 2, 0), t(0, 1, 0, 2));
}

TEST(Tensor, ShapeMismatchesThrow) {
  EXPECT_THROW(Tensor({1, 0}, 3) + Tensor({0, 1}, 3), ArgumentError);
  EXPECT_THROW(Tensor({1, 0}, 3) + Tensor({1, 0}, 4), ArgumentError);
  EXPECT_THROW(contract(Tensor({0, 2}, 3), 0, 0), ArgumentError);
  EXPECT_THROW(insert_vector(Tensor({1, 1}, 3), 0, Tensor({1, 0}, 4)), ArgumentError);
  EXPECT_THROW(scalar_value(Tensor({1, 0}, 3)), ArgumentError);
}

TEST(JetTensor, ValueAndDerivativesOfAField) {
  // v = (x y, sin z, 1): the jet tensor carries both the values and the partials
  const TensorField v({1, 0}, 3, [](std::span<const Jet> x) {
    JetTensor t({1, 0}, 3);
    t(0) = x[0] * x[1];
    t(1) = sin(x[2]);
    t(2) = Jet(1.0);
    return t;
  });
  const Point p{0.5, -2.0, 0.25};
  const JetTensor j = v.jets(p, 1);
  const Tensor val = value_of(j);
  EXPECT_DOUBLE_EQ(val(0), -1.0);
  EXPECT_DOUBLE_EQ(val(1), std::sin(0.25));
  const JetTensor dv = partial_derivatives(j);  // dv(i, m) = d_m v^i
  EXPECT_EQ(dv.valence(), (Valence{1, 1}));
  EXPECT_DOUBLE_EQ(dv(0, 0).value(), -2.0);
  EXPECT_DOUBLE_EQ(dv(0, 1).value(), 0.5);
  EXPECT_DOUBLE_EQ(dv(1, 2).value(), std::cos(0.25));
  EXPECT_DOUBLE_EQ(dv(2, 0).value(), 0.0);
}
