#pragma once

// Deterministic sample streams.
//
// The generator is SplitMix64 (Steele, Lea & Flood): a 64-bit Weyl sequence
// with step 0x9E3779B97F4A7C15 passed through a two-round xor-shift-multiply
// finalizer.  Doubles take the top 53 bits, so the stream is identical on every
// platform with IEEE-754 doubles.

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "geomlab/error.hpp"
#include "geomlab/tensor_core/point.hpp"
#include "geomlab/tensor_core/tensor.hpp"

namespace geomlab {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::uint64_t state_;
};

struct Interval {
  double lo = -1.0;
  double hi = 1.0;
};

struct SampleSpec {
  std::uint64_t seed = 42;
  int point_count = 200;
  int vector_tuples_per_point = 4;
  std::vector<Interval> bounds;  // one per chart coordinate
};

/// Argument vectors for one evaluation: X, Y, Z, W, U.
struct VectorTuple {
  static constexpr int kSize = 5;
  std::array<Tensor, kSize> v;

  const Tensor& X() const { return v[0]; }
  const Tensor& Y() const { return v[1]; }
  const Tensor& Z() const { return v[2]; }
  const Tensor& W() const { return v[3]; }
  const Tensor& U() const { return v[4]; }
};

struct Sample {
  Point point;
  std::vector<VectorTuple> tuples;
};

/// The full sample stream for a spec: points uniform in the bounds, vector
/// components uniform in [-1, 1].  Identical specs give identical streams.
inline std::vector<Sample> sample(const SampleSpec& spec) {
  if (spec.bounds.empty()) throw ArgumentError("sample: bounds are required");
  if (spec.point_count < 0 || spec.vector_tuples_per_point < 0) throw ArgumentError("sample: negative counts");
  for (const Interval& b : spec.bounds)
    if (!(b.lo <= b.hi)) throw ArgumentError("sample: empty interval");
  const int n = static_cast<int>(spec.bounds.size());
  SplitMix64 rng(spec.seed);
  std::vector<Sample> out;
  out.reserve(static_cast<std::size_t>(spec.point_count));
  for (int p = 0; p < spec.point_count; ++p) {
    std::vector<double> x(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = rng.uniform(spec.bounds[i].lo, spec.bounds[i].hi);
    Sample s{Point(std::move(x)), {}};
    s.tuples.resize(static_cast<std::size_t>(spec.vector_tuples_per_point));
    for (VectorTuple& t : s.tuples)
      for (Tensor& v : t.v) {
        std::vector<double> c(static_cast<std::size_t>(n));
        for (double& ci : c) ci = rng.uniform(-1.0, 1.0);
        v = make_vector(std::move(c));
      }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace geomlab
