#pragma once

// Theorem harness: each theorem pairs a hypothesis residual (a symmetry
// condition) with a conclusion residual (a displayed relation) on the same
// samples and classifies the pair into a verdict.

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "geomlab/verifier/conditions.hpp"

namespace geomlab {

enum class TheoremId { T3_1, T3_2, T3_3, T3_4, T3_5_corollary, T3_6_invariance, T4_1, T4_2 };

inline constexpr int kTheoremCount = 8;

inline constexpr std::array<TheoremId, kTheoremCount> all_theorems() {
  return {TheoremId::T3_1, TheoremId::T3_2, TheoremId::T3_3, TheoremId::T3_4,
          TheoremId::T3_5_corollary, TheoremId::T3_6_invariance, TheoremId::T4_1, TheoremId::T4_2};
}

inline std::string_view theorem_name(TheoremId id) {
  static constexpr std::array<std::string_view, kTheoremCount> names = {
      "T3_1", "T3_2", "T3_3", "T3_4", "T3_5_corollary", "T3_6_invariance", "T4_1", "T4_2"};
  return names[static_cast<std::size_t>(id)];
}

inline std::optional<TheoremId> parse_theorem(std::string_view s) {
  for (TheoremId id : all_theorems())
    if (theorem_name(id) == s) return id;
  return std::nullopt;
}

/// Theorems stated as equivalences.
inline bool is_iff(TheoremId id) {
  switch (id) {
    case TheoremId::T3_1:
    case TheoremId::T3_3:
    case TheoremId::T3_4:
    case TheoremId::T3_6_invariance:
    case TheoremId::T4_1:
      return true;
    default:
      return false;
  }
}

inline constexpr double kTheoremPassTolerance = 1e-6;
inline constexpr double kTheoremFailTolerance = 1e-2;

enum class Band { holds, fails, inconclusive };

inline std::string_view band_name(Band b) {
  switch (b) {
    case Band::holds: return "holds";
    case Band::fails: return "fails";
    default: return "inconclusive";
  }
}

/// A report with no evaluations, or with evaluation failures, never holds.
inline Band classify(const ResidualReport& r, double tol_pass, double tol_fail) {
  if (r.samples == 0) return Band::inconclusive;
  if (r.max_residual < tol_pass && r.passed) return Band::holds;
  if (r.max_residual > tol_fail) return Band::fails;
  return Band::inconclusive;
}

enum class Verdict {
  consistent,    // hypothesis and conclusion both hold
  vacuous,       // hypothesis fails; nothing asserted beyond what the iff requires
  violation,     // hypothesis holds and conclusion fails, or (iff) the converse
  inconclusive,  // some residual in the band between the thresholds
};

inline std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::consistent: return "consistent";
    case Verdict::vacuous: return "vacuous";
    case Verdict::violation: return "violation";
    default: return "inconclusive";
  }
}

inline Verdict decide(bool iff, std::optional<Band> premise, Band hyp, Band concl) {
  if (premise == Band::fails) return Verdict::vacuous;
  if (premise == Band::inconclusive || hyp == Band::inconclusive || concl == Band::inconclusive)
    return Verdict::inconclusive;
  if (hyp == Band::holds) return concl == Band::holds ? Verdict::consistent : Verdict::violation;
  if (iff && concl == Band::holds) return Verdict::violation;
  return Verdict::vacuous;
}

struct TheoremResult {
  TheoremId id{};
  std::string fixture;
  bool iff = false;
  std::optional<ResidualReport> premise;
  ResidualReport hypothesis;
  ResidualReport conclusion;
  /// Component relations and reading variants behind the conclusion.
  std::vector<ResidualReport> details;
  /// Which eta-factor reading the conclusion uses, where there is a choice.
  std::optional<EtaFactorReading> reading;
  std::optional<Band> premise_band;
  Band hypothesis_band = Band::inconclusive;
  Band conclusion_band = Band::inconclusive;
  Verdict verdict = Verdict::inconclusive;

  bool consistent() const { return verdict == Verdict::consistent || verdict == Verdict::vacuous; }
};

namespace detail {

using Relation = std::pair<Tensor, Tensor> (*)(const PointData&, const VectorTuple&);

inline ResidualReport relation_report(std::string id, const SampleSet& set, double tol, bool horizontal,
                                      const std::function<std::pair<Tensor, Tensor>(const PointData&, const VectorTuple&)>& rel) {
  return residual_report(std::move(id), set, tol, [&](const PointData& d, const VectorTuple& t) {
    const auto [l, r] = rel(d, horizontal ? horizontal_tuple(d, t) : t);
    return normalized_residual(l, r);
  });
}

inline ResidualReport max_of(std::string id, const std::vector<ResidualReport>& parts) {
  ResidualReport out = parts.front();
  out.id = std::move(id);
  for (const auto& p : parts) {
    if (p.max_residual > out.max_residual) {
      out.max_residual = p.max_residual;
      out.worst_point = p.worst_point;
    }
    out.mean_residual = std::max(out.mean_residual, p.mean_residual);
    out.passed = out.passed && p.passed;
  }
  return out;
}

inline ResidualReport da_report(const SampleSet& set, double tol) {
  return residual_report("trace_alpha_constant", set, tol, [](const PointData& d, const VectorTuple& t) {
    return normalized_residual(d.da(t.X()), 0.0);
  });
}

/// Both readings of an eta-factor relation plus their endpoint consistency.  The
/// conclusion uses the reading whose endpoint residual is smaller; ties keep
/// eta_y.
inline void reading_details(TheoremResult& res, const SampleSet& set, double tol, const std::string& stem,
                            std::pair<Tensor, Tensor> (*form)(const PointData&, const VectorTuple&, EtaFactorReading)) {
  std::array<ResidualReport, 2> concl, endpoint;
  for (EtaFactorReading r : {EtaFactorReading::eta_y, EtaFactorReading::eta_w}) {
    const auto i = static_cast<std::size_t>(r);
    const std::string suffix = std::string("_") + std::string(reading_name(r));
    concl[i] = relation_report(stem + suffix, set, tol, false,
                               [=](const PointData& d, const VectorTuple& t) { return form(d, t, r); });
    endpoint[i] = relation_report("derived_endpoint" + suffix, set, tol, false, [=](const PointData& d, const VectorTuple& t) {
      return relations::derived_endpoint_form(d, t, r);
    });
    res.details.push_back(concl[i]);
    res.details.push_back(endpoint[i]);
  }
  const bool use_w = endpoint[1].max_residual < endpoint[0].max_residual;
  res.reading = use_w ? EtaFactorReading::eta_w : EtaFactorReading::eta_y;
  res.conclusion = concl[use_w ? 1 : 0];
}

}  // namespace detail

/// Hypothesis and conclusion residuals of a theorem on one prepared sample set.
inline TheoremResult theorem_residuals(TheoremId id, const SampleSet& set, double tol_pass = kTheoremPassTolerance,
                                       double tol_fail = kTheoremFailTolerance) {
  using namespace relations;
  TheoremResult res;
  res.id = id;
  res.fixture = set.fixture;
  res.iff = is_iff(id);
  const auto ssmc_h = [&] { return phi_symmetry_residual(ConnectionKind::ssmc, set, true, tol_pass); };
  const auto lc_h = [&] { return phi_symmetry_residual(ConnectionKind::levi_civita, set, true, tol_pass); };
  const auto ricci_h = [&] { return phi_ricci_residual(ConnectionKind::ssmc, set, true, tol_pass); };
  switch (id) {
    case TheoremId::T3_1:
      res.hypothesis = ssmc_h();
      res.conclusion = detail::relation_report("phi_symmetric_ssmc_horizontal", set, tol_pass, true, phi_symmetric_ssmc_form);
      break;
    case TheoremId::T3_2:
      res.hypothesis = ssmc_h();
      res.details.push_back(detail::relation_report("curvature_form_horizontal", set, tol_pass, true, curvature_form));
      res.details.push_back(detail::relation_report("ricci_form_horizontal", set, tol_pass, true, ricci_form));
      res.conclusion = detail::max_of("curvature_and_ricci_forms", res.details);
      break;
    case TheoremId::T3_3:
      res.hypothesis = lc_h();
      res.conclusion = detail::relation_report("phi_symmetric_lc", set, tol_pass, false, phi_symmetric_lc_form);
      break;
    case TheoremId::T3_4:
      res.hypothesis = ssmc_h();
      res.conclusion = detail::relation_report("phi_symmetric_ssmc", set, tol_pass, false, phi_symmetric_ssmc_general_form);
      break;
    case TheoremId::T3_5_corollary:
      res.hypothesis = ssmc_h();
      detail::reading_details(res, set, tol_pass, "derived_nabla_r", derived_nabla_r_form);
      break;
    case TheoremId::T3_6_invariance:
      res.premise = lc_h();
      res.hypothesis = ssmc_h();
      detail::reading_details(res, set, tol_pass, "invariance", invariance_form);
      break;
    case TheoremId::T4_1:
      res.premise = detail::da_report(set, tol_pass);
      res.hypothesis = ricci_h();
      res.conclusion = detail::relation_report("ricci_derivative_form", set, tol_pass, false, ricci_derivative_form);
      break;
    case TheoremId::T4_2:
      res.hypothesis = ricci_h();
      res.conclusion = detail::relation_report("ricci_value_form", set, tol_pass, false, ricci_value_form);
      break;
  }
  if (res.premise) res.premise_band = classify(*res.premise, tol_pass, tol_fail);
  res.hypothesis_band = classify(res.hypothesis, tol_pass, tol_fail);
  res.conclusion_band = classify(res.conclusion, tol_pass, tol_fail);
  res.verdict = decide(res.iff, res.premise_band, res.hypothesis_band, res.conclusion_band);
  return res;
}

inline std::vector<TheoremResult> all_theorem_residuals(const SampleSet& set, double tol_pass = kTheoremPassTolerance,
                                                        double tol_fail = kTheoremFailTolerance) {
  std::vector<TheoremResult> out;
  for (TheoremId id : all_theorems()) out.push_back(theorem_residuals(id, set, tol_pass, tol_fail));
  return out;
}

}  // namespace geomlab
