#pragma once

// Shared helpers for the unit and acceptance tests: cached sample sets and
// random generators for the expression language.

#include <map>
#include <random>
#include <string>
#include <vector>

#include "geomlab/fixtures/fixtures.hpp"
#include "geomlab/verifier/catalog.hpp"

namespace geomlab::testing {

inline constexpr std::uint64_t kSeed = 42;

/// Sample set for a registry fixture, built once per (id, points, tuples).
/// Negative controls get the unchecked bundle.
inline const SampleSet& cached_set(const std::string& id, int points, int tuples = 4) {
  static std::map<std::tuple<std::string, int, int>, SampleSet> cache;
  const auto key = std::make_tuple(id, points, tuples);
  auto it = cache.find(key);
  if (it == cache.end()) {
    const FixtureSpec& f = find_fixture(id);
    const SampleSpec spec = f.sample_spec(kSeed, points, tuples);
    it = cache.emplace(key, prepare_samples(fixture_bundle(f, spec, !f.positive), sample(spec), f.id)).first;
  }
  return it->second;
}

inline std::string catalog_dir() { return std::string(GEOMLAB_SOURCE_DIR) + "/catalog"; }

/// Random well-typed identities: scalar = scalar or vector = vector, numbers non-negative.
class ExpressionGenerator {
 public:
  explicit ExpressionGenerator(std::uint64_t seed) : rng_(seed) {}

  std::string identity() {
    if (pick(2) == 0) return scalar(3) + " = " + scalar(3);
    return vector(3) + " = " + vector(3);
  }

  std::string scalar(int depth) {
    if (depth <= 0) return scalar_leaf();
    switch (pick(8)) {
      case 0: return scalar(depth - 1) + " + " + scalar(depth - 1);
      case 1: return scalar(depth - 1) + " - " + scalar(depth - 1);
      case 2: return factor(depth) + " * " + factor(depth);
      case 3: return "-" + factor(depth);
      case 4: return "g(" + vector(depth - 1) + ", " + vector(depth - 1) + ")";
      case 5: return "eta(" + vector(depth - 1) + ")";
      case 6: return "nabla[" + vector(depth - 1) + "](S)(" + vector(depth - 1) + ", " + vector(depth - 1) + ")";
      default: return scalar_leaf();
    }
  }

  std::string vector(int depth) {
    if (depth <= 0) return vector_leaf();
    switch (pick(8)) {
      case 0: return vector(depth - 1) + " + " + vector(depth - 1);
      case 1: return vector(depth - 1) + " - " + vector(depth - 1);
      case 2: return factor(depth) + " * " + vector_leaf();
      case 3: return "phi(" + vector(depth - 1) + ")";
      case 4: return "R(" + vector(depth - 1) + ", " + vector_leaf() + ", " + vector_leaf() + ")";
      case 5: return "nablat[" + vector_leaf() + "](Rt)(" + vector_leaf() + ", " + vector_leaf() + ", " + vector_leaf() + ")";
      case 6: return "-" + vector_leaf();
      default: return vector_leaf();
    }
  }

 private:
  std::string factor(int depth) {
    const std::string s = scalar(depth - 1);
    return "(" + s + ")";
  }
  std::string scalar_leaf() {
    static const std::vector<std::string> leaves{"a", "r", "rt", "psi", "n", "0", "2", "1/2", "0.25", "3.5e-2"};
    return leaves[pick(leaves.size())];
  }
  std::string vector_leaf() {
    static const std::vector<std::string> leaves{"X", "Y", "Z", "W", "U", "xi"};
    return leaves[pick(leaves.size())];
  }
  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  std::mt19937_64 rng_;
};

/// Random inputs for parser fuzzing: mutations of valid identities mixed with
/// token soup and raw bytes.
class FuzzGenerator {
 public:
  explicit FuzzGenerator(std::uint64_t seed) : rng_(seed), exprs_(seed ^ 0x9e3779b97f4a7c15ULL) {}

  std::string next() {
    switch (pick(3)) {
      case 0: return mutate(exprs_.identity());
      case 1: return soup();
      default: return bytes();
    }
  }

 private:
  std::string mutate(std::string s) {
    const int edits = 1 + static_cast<int>(pick(4));
    for (int e = 0; e < edits && !s.empty(); ++e) {
      const std::size_t at = pick(s.size());
      switch (pick(3)) {
        case 0: s.erase(at, 1); break;
        case 1: s.insert(at, 1, alphabet()[pick(alphabet().size())]); break;
        default: s[at] = alphabet()[pick(alphabet().size())];
      }
    }
    return s;
  }
  std::string soup() {
    static const std::vector<std::string> toks{"g", "R", "nabla", "nablat", "[", "]", "(", ")", ",", "+", "-", "*",
                                               "=", "X", "xi", "1/0", "1e999", "0.", "..", "S", "phi", "eta", "Q"};
    std::string s;
    const std::size_t len = pick(24);
    for (std::size_t i = 0; i < len; ++i) s += toks[pick(toks.size())] + (pick(3) == 0 ? " " : "");
    return s;
  }
  std::string bytes() {
    std::string s(pick(32), '\0');
    for (char& c : s) c = static_cast<char>(pick(256));
    return s;
  }
  static const std::string& alphabet() {
    static const std::string a = "gRSQXYZWUxi[](),+-*=/.0123456789e ~#\t";
    return a;
  }
  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  std::mt19937_64 rng_;
  ExpressionGenerator exprs_;
};

}  // namespace geomlab::testing
