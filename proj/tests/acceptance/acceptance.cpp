// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "geomlab/dsl/dsl.hpp"
#include "geomlab/verifier/theorems.hpp"
#include "support.hpp"

using namespace geomlab;
using geomlab::testing::cached_set;

namespace {

constexpr int kPoints = 200;
constexpr int kTuples = 4;
const std::vector<std::string> kPositive{"F3", "F5"};
const std::vector<std::string> kNegative{"W3c2", "N_flat", "N_rank", "N_asym"};

struct Outcome {
  bool passed = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

const SampleSet& full(const std::string& id) { return cached_set(id, kPoints, kTuples); }

Outcome fixture_legitimacy() {
  Outcome o;
  for (const std::string& id : kPositive) {
    const FixtureSpec& f = find_fixture(id);
    const AxiomReport r = verify_axioms(f.structure, f.sample_spec(testing::kSeed, kPoints, kTuples));
    for (const auto& a : r.axioms)
      o.require(a.max_residual < 1e-9, id + " " + std::string(axiom_name(a.axiom)) + "=" + num(a.max_residual));
  }
  for (const std::string& id : kNegative) {
    const FixtureSpec& f = find_fixture(id);
    const AxiomReport r = verify_axioms(f.structure, f.sample_spec(testing::kSeed, kPoints, kTuples));
    const auto failing = r.failing();
    o.require(std::set<Axiom>(failing.begin(), failing.end()) ==
                  std::set<Axiom>(f.expected_failures.begin(), f.expected_failures.end()),
              id + " failing set differs from its declaration");
    o.require(f.declared_axiom && r[*f.declared_axiom].max_residual > 1e-2, id + " declared axiom residual too small");
  }
  return o;
}

Outcome catalog() {
  Outcome o;
  for (const std::string& id : kPositive)
    for (const ResidualReport& r : check_catalog(full(id)))
      o.require(r.passed, id + " " + r.id + "=" + num(r.max_residual) + " tol " + num(r.tolerance));
  return o;
}

Outcome cross_checks() {
  Outcome o;
  for (const std::string& id : kPositive)
    for (const CrossCheck& c : closed_form_cross_checks(full(id))) {
      o.require(c.report.passed, id + " " + c.id + "=" + num(c.report.max_residual));
      o.require(c.report.samples >= 50, id + " " + c.id + " has " + std::to_string(c.report.samples) + " samples");
    }
  return o;
}

Outcome calibration() {
  Outcome o;
  const FixtureSpec& f = find_fixture("F3");
  const auto passing = calibrate_conventions(f.structure, sample(f.sample_spec(testing::kSeed, kPoints, kTuples)));
  o.require(passing.size() == 1, std::to_string(passing.size()) + " conventions pass");
  return o;
}

Outcome theorem_consistency() {
  Outcome o;
  for (const std::string& id : kPositive)
    for (const TheoremResult& t : all_theorem_residuals(full(id)))
      o.require(t.verdict != Verdict::violation && t.verdict != Verdict::inconclusive,
                id + " " + std::string(theorem_name(t.id)) + " " + std::string(verdict_name(t.verdict)) +
                    " (hyp " + num(t.hypothesis.max_residual) + ", concl " + num(t.conclusion.max_residual) + ")");
  return o;
}

Outcome local_symmetry() {
  Outcome o;
  const SampleSet& set = full("F3");
  const double nr = nabla_curvature_norm(set);
  o.require(nr < 1e-7, "|nabla R|=" + num(nr));
  for (bool h : {false, true}) {
    const double s = phi_symmetry_residual(ConnectionKind::levi_civita, set, h).max_residual;
    const double q = phi_ricci_residual(ConnectionKind::levi_civita, set, h).max_residual;
    o.require(s < 1e-7, "phi-symmetry=" + num(s));
    o.require(q < 1e-7, "phi-Ricci=" + num(q));
  }
  return o;
}

Outcome dsl_fidelity() {
  Outcome o;
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(testing::catalog_dir()))
    if (e.path().extension() == ".idn") files.push_back(e.path());
  for (const std::string& id : kPositive) {
    const SampleSet& set = full(id);
    for (const auto& p : files)
      for (const auto& [tag, lines] : dsl::group_by_tag(dsl::load_catalog(p.string()))) {
        const auto native = [&tag](const PointData& d, const VectorTuple& t) {
          if (tag == "E2_8b_literal") return parts_residual(mixed_slot_parts(d, t, MixedSlotReading::literal));
          if (tag == "E2_12")
            return normalized_residual(d.Rt(t.X(), t.Y(), t.Z()), apply(curvature_tilde_closed(d), {t.X(), t.Y(), t.Z()}));
          return identity_residual(*parse_identity(tag), d, t);
        };
        double worst = 0.0;
        for (std::size_t i = 0; i < set.samples.size(); ++i)
          for (const VectorTuple& t : set.samples[i].tuples)
            worst = std::max(worst, std::abs(dsl::lines_residual(lines, *set.data[i], t) - native(*set.data[i], t)));
        o.require(worst < 1e-12, id + " " + tag + " differs by " + num(worst));
      }
  }

  testing::FuzzGenerator fuzz(testing::kSeed);
  int crashes = 0;
  for (int i = 0; i < 10000; ++i) {
    const std::string src = fuzz.next();
    try {
      dsl::parse_identity(src);
    } catch (const dsl::ParseError& e) {
      if (e.span().end > src.size() || e.span().begin > e.span().end) ++crashes;
    } catch (...) {
      ++crashes;
    }
  }
  o.require(crashes == 0, std::to_string(crashes) + " fuzz inputs escaped the parser");

  testing::ExpressionGenerator gen(testing::kSeed);
  int mismatches = 0;
  for (int i = 0; i < 1000; ++i) {
    const dsl::Identity a = dsl::parse_identity(gen.identity());
    if (!dsl::structurally_equal(a, dsl::parse_identity(dsl::unparse(a)))) ++mismatches;
  }
  o.require(mismatches == 0, std::to_string(mismatches) + " round-trip mismatches");
  return o;
}

Outcome determinism() {
  Outcome o;
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "geomlab_acceptance";
  fs::create_directories(dir);
  std::string bytes[2];
  for (int i = 0; i < 2; ++i) {
    const fs::path out = dir / ("out" + std::to_string(i) + ".json");
    fs::remove(out);
    const std::string cmd = std::string(GEOMLAB_CLI) + " verify --fixture F3 --seed 42 --points 200 --json " +
                            out.string() + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    o.require(WIFEXITED(status) && WEXITSTATUS(status) != 2, "cli run " + std::to_string(i) + " did not complete");
    std::ifstream f(out, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    bytes[i] = ss.str();
  }
  o.require(!bytes[0].empty(), "no JSON written");
  o.require(bytes[0] == bytes[1], "JSON differs between runs");
  fs::remove_all(dir);
  return o;
}

Outcome adjudication() {
  Outcome o;
  for (const std::string& id : kPositive) {
    const MixedSlotAdjudication a = adjudicate_mixed_slot(full(id));
    o.require(a.y_for_z.samples > 0 && a.literal.samples > 0, id + " readings not evaluated");
    o.require(a.y_for_z.passed || a.literal.passed, id + " neither reading passes");
    o.require(!a.flagged_for_review, id + " flagged for review");
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"fixture legitimacy", fixture_legitimacy},
      {"identity catalog on F3/F5", catalog},
      {"closed forms vs generic", cross_checks},
      {"calibration uniqueness", calibration},
      {"theorem consistency", theorem_consistency},
      {"local symmetry of F3", local_symmetry},
      {"DSL fidelity, fuzz, round trip", dsl_fidelity},
      {"deterministic JSON", determinism},
      {"E2_8b adjudication", adjudication},
  };
  const auto start = std::chrono::steady_clock::now();
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.require(false, std::string("threw: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %zu %s: %s (%.1fs)%s%s\n", i + 1, o.passed ? "PASS" : "FAIL", criteria[i].first.c_str(), secs,
                o.passed ? "" : " -- ", o.detail.c_str());
    std::fflush(stdout);
    if (!o.passed) ++failed;
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("total %.1fs, %d of %zu criteria failed\n", total, failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
