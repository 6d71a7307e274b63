#pragma once

#include <algorithm>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "geomlab/fixtures/sampler.hpp"
#include "geomlab/lp_structure/axioms.hpp"
#include "geomlab/parallel.hpp"
#include "geomlab/residual.hpp"
#include "geomlab/ssmc/bundle.hpp"

namespace geomlab {

/// Sample points with their evaluated PointData.  Points where evaluation
/// failed are kept in `failures` and skipped by every residual.
struct SampleSet {
  std::string fixture;
  std::vector<Sample> samples;
  std::vector<std::optional<PointData>> data;
  std::vector<PointFailure> failures;
};

inline SampleSet prepare_samples(const SSMCBundle& b, std::vector<Sample> samples, std::string fixture = {}) {
  SampleSet set;
  set.fixture = std::move(fixture);
  set.samples = std::move(samples);
  struct Slot {
    std::optional<PointData> data;
    std::optional<std::string> error;
  };
  auto slots = parallel_map<Slot>(set.samples.size(), [&](std::size_t i) {
    Slot s;
    try {
      s.data = b.point_data(set.samples[i].point);
    } catch (const Error& e) {
      s.error = e.what();
    }
    return s;
  });
  set.data.reserve(slots.size());
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (slots[i].error) set.failures.push_back({i, set.samples[i].point, *slots[i].error});
    set.data.push_back(std::move(slots[i].data));
  }
  return set;
}

struct ResidualReport {
  std::string id;
  std::string fixture;
  std::size_t samples = 0;  // number of (point, argument tuple) evaluations
  double max_residual = 0.0;
  double mean_residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  Point worst_point;
};

/// Residual of one (point, tuple) evaluation.
using TupleResidual = std::function<double(const PointData&, const VectorTuple&)>;

/// Max and mean of `fn` over every evaluated point and argument tuple, reduced
/// in sample order so the result does not depend on scheduling.
inline ResidualReport residual_report(std::string id, const SampleSet& set, double tolerance, const TupleResidual& fn) {
  struct Partial {
    double max = 0.0, sum = 0.0;
    std::size_t count = 0;
  };
  const auto parts = parallel_map<Partial>(set.samples.size(), [&](std::size_t i) {
    Partial p;
    if (!set.data[i]) return p;
    for (const VectorTuple& t : set.samples[i].tuples) {
      double r = fn(*set.data[i], t);
      if (std::isnan(r)) r = std::numeric_limits<double>::infinity();
      p.max = std::max(p.max, r);
      p.sum += r;
      ++p.count;
    }
    return p;
  });
  ResidualReport rep;
  rep.id = std::move(id);
  rep.fixture = set.fixture;
  rep.tolerance = tolerance;
  double sum = 0.0;
  bool have_worst = false;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].count == 0) continue;
    if (!have_worst || parts[i].max > rep.max_residual) {
      rep.max_residual = parts[i].max;
      rep.worst_point = set.samples[i].point;
      have_worst = true;
    }
    sum += parts[i].sum;
    rep.samples += parts[i].count;
  }
  rep.mean_residual = rep.samples ? sum / static_cast<double>(rep.samples) : 0.0;
  rep.passed = rep.samples > 0 && set.failures.empty() && rep.max_residual < tolerance;
  return rep;
}

}  // namespace geomlab
