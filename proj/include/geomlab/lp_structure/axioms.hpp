#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "geomlab/error.hpp"
#include "geomlab/fixtures/sampler.hpp"
#include "geomlab/lp_structure/structure.hpp"
#include "geomlab/parallel.hpp"
#include "geomlab/residual.hpp"

namespace geomlab {

enum class Axiom { eta_xi, g_x_xi, phi_square, phi_compat, nabla_xi, nabla_phi, rank_phi, omega_symmetric };
inline constexpr int kAxiomCount = 8;
inline constexpr double kAxiomTolerance = 1e-9;

inline constexpr std::array<Axiom, kAxiomCount> all_axioms() {
  return {Axiom::eta_xi,     Axiom::g_x_xi,    Axiom::phi_square, Axiom::phi_compat,
          Axiom::nabla_xi,   Axiom::nabla_phi, Axiom::rank_phi,   Axiom::omega_symmetric};
}

inline std::string_view axiom_name(Axiom a) {
  switch (a) {
    case Axiom::eta_xi: return "eta_xi";
    case Axiom::g_x_xi: return "g_x_xi";
    case Axiom::phi_square: return "phi_square";
    case Axiom::phi_compat: return "phi_compat";
    case Axiom::nabla_xi: return "nabla_xi";
    case Axiom::nabla_phi: return "nabla_phi";
    case Axiom::rank_phi: return "rank_phi";
    case Axiom::omega_symmetric: return "omega_symmetric";
  }
  return "?";
}

inline std::optional<Axiom> parse_axiom(std::string_view s) {
  for (Axiom a : all_axioms())
    if (axiom_name(a) == s) return a;
  return std::nullopt;
}

/// Numerical rank: singular values above n * eps * sigma_max.
inline int numerical_rank(const Tensor& m) {
  const int n = m.dim();
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = m(i, j);
  const Eigen::VectorXd sv = Eigen::JacobiSVD<Eigen::MatrixXd>(a).singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  const double threshold = n * std::numeric_limits<double>::epsilon() * sv(0);
  int r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > threshold) ++r;
  return r;
}

/// Composition of two (1,1) tensors: (a b)^i_j = a^i_k b^k_j.
inline Tensor matmul(const Tensor& a, const Tensor& b) {
  const int n = a.dim();
  Tensor r({1, 1}, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double acc = 0.0;
      for (int k = 0; k < n; ++k) acc += a(i, k) * b(k, j);
      r(i, j) = acc;
    }
  return r;
}

/// Transpose of a (0,2) tensor.
inline Tensor transpose(const Tensor& t) { return swap_lower(t, 0, 1); }

struct AxiomResidual {
  Axiom axiom = Axiom::eta_xi;
  double max_residual = 0.0;
  bool passed = true;
};

struct PointFailure {
  std::size_t index = 0;
  Point point;
  std::string message;
};

struct AxiomReport {
  double tolerance = kAxiomTolerance;
  std::size_t samples = 0;
  std::array<AxiomResidual, kAxiomCount> axioms{};
  /// Closedness of eta (antisymmetric part of nabla eta); reported, not counted as an axiom.
  double d_eta_residual = 0.0;
  std::vector<PointFailure> failures;

  const AxiomResidual& operator[](Axiom a) const { return axioms[static_cast<std::size_t>(a)]; }
  bool all_passed() const {
    return failures.empty() && std::all_of(axioms.begin(), axioms.end(), [](const AxiomResidual& r) { return r.passed; });
  }
  std::vector<Axiom> failing() const {
    std::vector<Axiom> out;
    for (const AxiomResidual& r : axioms)
      if (!r.passed) out.push_back(r.axiom);
    return out;
  }
};

namespace detail {

struct AxiomPointResult {
  std::array<double, kAxiomCount> residual{};
  double d_eta = 0.0;
  std::optional<std::string> error;
};

inline AxiomPointResult axioms_at(const LPStructure& s, const Sample& smp) {
  AxiomPointResult out;
  try {
    const int n = s.dim();
    const StructureJets sj = structure_jets(s, smp.point, 1);
    const Tensor g = value_of(sj.g), xi = value_of(sj.xi), eta = value_of(sj.eta), phi = value_of(sj.phi);
    const Tensor nabla_xi = value_of(covariant_derivative(sj.gamma, sj.xi));    // (1,1), direction last
    const Tensor nabla_phi = value_of(covariant_derivative(sj.gamma, sj.phi));  // (1,2), direction last
    const Tensor nabla_eta = value_of(covariant_derivative(sj.gamma, sj.eta));  // (0,2), direction last
    std::optional<Tensor> explicit_eta;
    if (s.explicit_eta()) explicit_eta = s.explicit_eta()->value(smp.point);

    auto& r = out.residual;
    auto bump = [&r](Axiom a, double v) {
      double& slot = r[static_cast<std::size_t>(a)];
      slot = std::max(slot, v);
    };
    bump(Axiom::eta_xi, normalized_residual(scalar_value(apply(eta, {xi})), -1.0));
    bump(Axiom::rank_phi, normalized_residual(static_cast<double>(numerical_rank(phi)), static_cast<double>(n - 1)));
    const Tensor om = omega_from(g, phi);
    bump(Axiom::omega_symmetric, normalized_residual(om, transpose(om)));
    out.d_eta = normalized_residual(nabla_eta, transpose(nabla_eta));

    for (const VectorTuple& t : smp.tuples) {
      const Tensor &x = t.X(), &y = t.Y();
      const double ex = scalar_value(apply(eta, {x})), ey = scalar_value(apply(eta, {y}));
      if (explicit_eta) bump(Axiom::g_x_xi, normalized_residual(inner(g, x, xi), scalar_value(apply(*explicit_eta, {x}))));
      const Tensor phix = apply(phi, {x}), phiy = apply(phi, {y});
      bump(Axiom::phi_square, normalized_residual(apply(phi, {phix}), x + ex * xi));
      bump(Axiom::phi_compat, normalized_residual(inner(g, phix, phiy), inner(g, x, y) + ex * ey));
      bump(Axiom::nabla_xi, normalized_residual(apply(nabla_xi, {x}), phix));
      const Tensor lhs = apply(nabla_phi, {y, x});
      const Tensor rhs = inner(g, x, y) * xi + ey * x + 2.0 * ex * ey * xi;
      bump(Axiom::nabla_phi, normalized_residual(lhs, rhs));
    }
  } catch (const Error& e) {
    out.error = e.what();
  }
  return out;
}

}  // namespace detail

inline AxiomReport verify_axioms(const LPStructure& s, const std::vector<Sample>& samples,
                                 double tolerance = kAxiomTolerance) {
  const auto per_point = parallel_map<detail::AxiomPointResult>(
      samples.size(), [&](std::size_t i) { return detail::axioms_at(s, samples[i]); });
  AxiomReport rep;
  rep.tolerance = tolerance;
  for (Axiom a : all_axioms()) rep.axioms[static_cast<std::size_t>(a)].axiom = a;
  for (std::size_t i = 0; i < per_point.size(); ++i) {
    const auto& pr = per_point[i];
    if (pr.error) {
      rep.failures.push_back({i, samples[i].point, *pr.error});
      continue;
    }
    ++rep.samples;
    for (std::size_t k = 0; k < kAxiomCount; ++k)
      rep.axioms[k].max_residual = std::max(rep.axioms[k].max_residual, pr.residual[k]);
    rep.d_eta_residual = std::max(rep.d_eta_residual, pr.d_eta);
  }
  for (AxiomResidual& r : rep.axioms) r.passed = r.max_residual < tolerance;
  return rep;
}

inline AxiomReport verify_axioms(const LPStructure& s, const SampleSpec& spec, double tolerance = kAxiomTolerance) {
  return verify_axioms(s, sample(spec), tolerance);
}

/// Every curvature convention under which R(X,Y)xi = eta(Y)X - eta(X)Y and
/// S(X,xi) = (n-1)eta(X) hold on the given structure, to `tolerance`.
inline std::vector<CurvatureConvention> calibrate_conventions(const LPStructure& s, const std::vector<Sample>& samples,
                                                              double tolerance = kAxiomTolerance) {
  const int n = s.dim();
  std::vector<CurvatureConvention> passing;
  for (const CurvatureConvention& conv : all_conventions()) {
    double worst = 0.0;
    for (const Sample& smp : samples) {
      const StructureJets sj = structure_jets(s, smp.point, 2);
      const Tensor r = value_of(curvature_jets(sj.gamma, conv.sign));
      const Tensor ric = ricci_from_curvature(r, conv);
      const Tensor xi = value_of(sj.xi), eta = value_of(sj.eta);
      for (const VectorTuple& t : smp.tuples) {
        const double ex = scalar_value(apply(eta, {t.X()})), ey = scalar_value(apply(eta, {t.Y()}));
        worst = std::max(worst, normalized_residual(apply(r, {t.X(), t.Y(), xi}), ey * t.X() - ex * t.Y()));
        worst = std::max(worst, normalized_residual(scalar_value(apply(ric, {t.X(), xi})), (n - 1) * ex));
      }
    }
    if (worst < tolerance) passing.push_back(conv);
  }
  return passing;
}

}  // namespace geomlab
