#pragma once

// Grouped identity suites for the SSMC: the curvature lemma identities and the
// derivative identities for alpha and L.  Each returns one combined report plus
// the per-identity rows it was built from.

#include <string>
#include <vector>

#include "geomlab/verifier/catalog.hpp"

namespace geomlab {

struct SuiteReport {
  ResidualReport combined;
  std::vector<ResidualReport> rows;
};

inline SuiteReport run_suite(std::string id, const SampleSet& set, const std::vector<IdentityId>& ids) {
  SuiteReport out;
  for (IdentityId i : ids) out.rows.push_back(check_identity(i, set));
  out.combined = out.rows.front();
  out.combined.id = std::move(id);
  double sum = 0.0;
  for (const auto& r : out.rows) {
    if (r.max_residual > out.combined.max_residual) {
      out.combined.max_residual = r.max_residual;
      out.combined.worst_point = r.worst_point;
    }
    out.combined.tolerance = std::max(out.combined.tolerance, r.tolerance);
    out.combined.passed = out.combined.passed && r.passed;
    sum += r.mean_residual;
  }
  out.combined.mean_residual = sum / static_cast<double>(out.rows.size());
  return out;
}

/// Pair symmetry, antisymmetries and the xi contractions of Rt and St.
inline SuiteReport lemma_suite(const SampleSet& set) {
  using I = IdentityId;
  return run_suite("lemma_suite", set,
                   {I::E2_16, I::E2_17, I::E2_18, I::E2_19, I::E2_20, I::E2_21, I::E2_22, I::E2_23, I::E2_24,
                    I::E2_25, I::E2_26, I::E2_27});
}

inline SuiteReport lemma_suite(const SSMCBundle& b, const SampleSpec& spec) {
  return lemma_suite(prepare_samples(b, sample(spec)));
}

/// Covariant derivatives of alpha and L.
inline SuiteReport nabla_alpha_l_identities(const SampleSet& set) {
  using I = IdentityId;
  return run_suite("nabla_alpha_l", set, {I::E2_33, I::E2_34, I::E2_35});
}

inline SuiteReport nabla_alpha_l_identities(const SSMCBundle& b, const SampleSpec& spec) {
  return nabla_alpha_l_identities(prepare_samples(b, sample(spec)));
}

}  // namespace geomlab
