#pragma once

// Report assembly for the command-line tool.  Every command produces a Report
// (rows plus an exit status) that renders to text and to JSON; both renderings
// depend only on the configuration and seed.  Needs nlohmann_json.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "geomlab/dsl/dsl.hpp"
#include "geomlab/fixtures/fixtures.hpp"
#include "geomlab/ssmc/suites.hpp"
#include "geomlab/verifier/theorems.hpp"

namespace geomlab::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { kExitPass = 0, kExitFailure = 1, kExitUsage = 2, kExitInconclusive = 3 };

/// Raised for bad command-line input; maps to kExitUsage.
class UsageError : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

struct RunConfig {
  std::vector<std::string> fixtures;
  std::uint64_t seed = 42;
  int points = 200;
  int tuples = 4;
  double tol_pass = kTheoremPassTolerance;
  double tol_fail = kTheoremFailTolerance;
  std::optional<std::string> json_path;
  std::optional<std::string> registry_path;

  void validate() const {
    if (points < 1) throw UsageError("--points must be at least 1");
    if (tuples < 1) throw UsageError("--tuples must be at least 1");
    if (!(tol_pass > 0.0) || !(tol_fail > tol_pass)) throw UsageError("tolerances must satisfy 0 < tol-pass < tol-fail");
  }
};

/// Number of points used for the curvature convention scan.
inline constexpr int kCalibrationPoints = 10;

struct Row {
  std::string kind;     // axiom, calibration, identity, cross_check, adjudication, condition, theorem, dsl
  std::string fixture;
  std::string id;
  std::string verdict;  // pass, fail, expected_fail, unexpected_pass, informational, flagged, or a theorem verdict
  double max_residual = 0.0;
  std::optional<double> mean_residual;  // absent for axiom rows
  double tolerance = 0.0;
  std::size_t samples = 0;
  std::optional<Point> worst_point;
  Json extra = Json::object();
};

struct Report {
  std::string command;
  RunConfig config;
  std::vector<Row> rows;
  std::vector<std::string> notes;
  int exit_code = kExitPass;

  void fail(int code) {
    // failure outranks inconclusive, which outranks pass
    if (code == kExitFailure || (code == kExitInconclusive && exit_code == kExitPass)) exit_code = code;
  }
};

inline Row row_from(std::string kind, const ResidualReport& r, std::string verdict) {
  Row row;
  row.kind = std::move(kind);
  row.fixture = r.fixture;
  row.id = r.id;
  row.verdict = std::move(verdict);
  row.max_residual = r.max_residual;
  row.mean_residual = r.mean_residual;
  row.tolerance = r.tolerance;
  row.samples = r.samples;
  if (r.samples > 0) row.worst_point = r.worst_point;
  return row;
}

inline Json residual_json(const ResidualReport& r) {
  return Json{{"id", r.id}, {"max_residual", r.max_residual}, {"mean_residual", r.mean_residual},
              {"tolerance", r.tolerance}, {"samples", r.samples}, {"passed", r.passed}};
}

// ---------------------------------------------------------------------------
// Rendering

inline Json to_json(const Report& rep) {
  Json rows = Json::array();
  for (const Row& r : rep.rows) {
    Json j{{"kind", r.kind}, {"fixture", r.fixture}, {"id", r.id}, {"verdict", r.verdict},
           {"max_residual", r.max_residual}, {"mean_residual", r.mean_residual ? Json(*r.mean_residual) : Json(nullptr)},
           {"tolerance", r.tolerance}, {"samples", r.samples}};
    if (r.worst_point) {
      Json p = Json::array();
      for (double c : r.worst_point->coords()) p.push_back(c);
      j["worst_point"] = p;
    } else {
      j["worst_point"] = nullptr;
    }
    for (const auto& [k, v] : r.extra.items()) j[k] = v;
    rows.push_back(std::move(j));
  }
  Json fixtures = Json::array();
  for (const auto& f : rep.config.fixtures) fixtures.push_back(f);
  return Json{{"tool", "geomlab"},
              {"command", rep.command},
              {"config",
               {{"fixtures", fixtures},
                {"seed", rep.config.seed},
                {"points", rep.config.points},
                {"tuples", rep.config.tuples},
                {"tol_pass", rep.config.tol_pass},
                {"tol_fail", rep.config.tol_fail}}},
              {"rows", rows},
              {"notes", rep.notes},
              {"exit_code", rep.exit_code}};
}

inline std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

inline std::string to_text(const Report& rep) {
  std::ostringstream out;
  std::string fixture;
  for (const Row& r : rep.rows) {
    if (r.fixture != fixture) {
      fixture = r.fixture;
      out << "== " << fixture << "\n";
    }
    char line[256];
    if (r.kind == "theorem") {
      std::snprintf(line, sizeof line, "  %-12s %-18s hyp=%s concl=%s  %s\n", r.kind.c_str(), r.id.c_str(),
                    format_real(r.extra.value("hyp_residual", 0.0)).c_str(),
                    format_real(r.extra.value("concl_residual", 0.0)).c_str(), r.verdict.c_str());
    } else {
      std::snprintf(line, sizeof line, "  %-12s %-36s max=%s mean=%s tol=%s  %s\n", r.kind.c_str(), r.id.c_str(),
                    format_real(r.max_residual).c_str(), r.mean_residual ? format_real(*r.mean_residual).c_str() : "-",
                    format_real(r.tolerance).c_str(), r.verdict.c_str());
    }
    out << line;
  }
  for (const auto& n : rep.notes) out << "note: " << n << "\n";
  out << "exit status " << rep.exit_code << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Shared plumbing

inline std::vector<FixtureSpec> load_fixtures(const RunConfig& cfg, std::vector<std::string> fallback) {
  std::vector<FixtureSpec> reg;
  try {
    reg = cfg.registry_path ? load_registry(*cfg.registry_path) : default_registry();
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  const auto& ids = cfg.fixtures.empty() ? fallback : cfg.fixtures;
  std::vector<FixtureSpec> out;
  for (const auto& id : ids) {
    try {
      out.push_back(find_fixture(reg, id));
    } catch (const ArgumentError& e) {
      throw UsageError(e.what());
    }
  }
  return out;
}

struct Prepared {
  FixtureSpec fixture;
  AxiomReport axioms;
  std::optional<SSMCBundle> bundle;
  SampleSet set;
};

/// Sample the fixture, check the axioms and evaluate every point.  Negative
/// controls get an unchecked bundle so their results are informational.
inline Prepared prepare(const FixtureSpec& f, const RunConfig& cfg) {
  Prepared p{f, {}, std::nullopt, {}};
  std::vector<Sample> samples = sample(f.sample_spec(cfg.seed, cfg.points, cfg.tuples));
  p.axioms = verify_axioms(f.structure, samples);
  if (f.positive && p.axioms.all_passed())
    p.bundle = build_ssmc(f.structure, p.axioms);
  else
    p.bundle = build_ssmc_unchecked(f.structure);
  p.set = prepare_samples(*p.bundle, std::move(samples), f.id);
  return p;
}

inline void add_axiom_rows(Report& rep, const Prepared& p) {
  const FixtureSpec& f = p.fixture;
  bool ok = p.axioms.failures.empty();
  for (const AxiomResidual& a : p.axioms.axioms) {
    Row row;
    row.kind = "axiom";
    row.fixture = f.id;
    row.id = std::string(axiom_name(a.axiom));
    row.max_residual = a.max_residual;
    row.tolerance = p.axioms.tolerance;
    row.samples = p.axioms.samples;
    const bool expected = std::find(f.expected_failures.begin(), f.expected_failures.end(), a.axiom) != f.expected_failures.end();
    if (f.positive) {
      row.verdict = a.passed ? "pass" : "fail";
      ok = ok && a.passed;
    } else if (expected) {
      const bool clear = !a.passed && a.max_residual > rep.config.tol_fail;
      row.verdict = clear ? "expected_fail" : "unexpected_pass";
      ok = ok && clear;
    } else {
      row.verdict = a.passed ? "pass" : "unexpected_fail";
      ok = ok && a.passed;
    }
    if (f.declared_axiom == a.axiom) row.extra["declared"] = true;
    rep.rows.push_back(std::move(row));
  }
  Row deta;
  deta.kind = "axiom";
  deta.fixture = f.id;
  deta.id = "d_eta_closed";
  deta.max_residual = p.axioms.d_eta_residual;
  deta.tolerance = p.axioms.tolerance;
  deta.samples = p.axioms.samples;
  deta.verdict = "informational";
  rep.rows.push_back(std::move(deta));
  for (const auto& fail : p.axioms.failures)
    rep.notes.push_back(f.id + ": axiom evaluation failed at sample " + std::to_string(fail.index) + ": " + fail.message);
  if (!ok) rep.fail(kExitFailure);
}

// ---------------------------------------------------------------------------
// Commands

inline Report cmd_verify(const RunConfig& cfg) {
  cfg.validate();
  Report rep{"verify", cfg, {}, {}, kExitPass};
  const auto fixtures = load_fixtures(cfg, {"F3"});
  rep.config.fixtures.clear();
  for (const auto& f : fixtures) rep.config.fixtures.push_back(f.id);
  for (const FixtureSpec& f : fixtures) {
    const Prepared p = prepare(f, cfg);
    add_axiom_rows(rep, p);
    const bool positive = f.positive && p.axioms.all_passed();
    for (const auto& fail : p.set.failures)
      rep.notes.push_back(f.id + ": evaluation failed at sample " + std::to_string(fail.index) + ": " + fail.message);
    if (positive && !p.set.failures.empty()) rep.fail(kExitFailure);
    if (positive) {
      const std::vector<Sample> calib(p.set.samples.begin(),
                                      p.set.samples.begin() + std::min<std::size_t>(kCalibrationPoints, p.set.samples.size()));
      const auto conventions = calibrate_conventions(f.structure, calib);
      Row row;
      row.kind = "calibration";
      row.fixture = f.id;
      row.id = "curvature_convention";
      row.tolerance = kAxiomTolerance;
      row.samples = calib.size();
      row.verdict = conventions.size() == 1 ? "pass" : "fail";
      row.extra["passing_conventions"] = conventions.size();
      rep.rows.push_back(std::move(row));
      if (conventions.size() != 1) rep.fail(kExitFailure);
    }
    for (const ResidualReport& r : check_catalog(p.set)) {
      rep.rows.push_back(row_from("identity", r, positive ? (r.passed ? "pass" : "fail") : "informational"));
      if (positive && !r.passed) rep.fail(kExitFailure);
    }
    for (const CrossCheck& c : closed_form_cross_checks(p.set)) {
      rep.rows.push_back(row_from("cross_check", c.report, positive ? (c.report.passed ? "pass" : "fail") : "informational"));
      if (positive && !c.report.passed) rep.fail(kExitFailure);
    }
    const MixedSlotAdjudication adj = adjudicate_mixed_slot(p.set);
    for (const ResidualReport* r : {&adj.y_for_z, &adj.literal}) {
      Row row = row_from("adjudication", *r, positive && adj.flagged_for_review ? "flagged" : "informational");
      row.extra["reading_passed"] = r->passed;
      rep.rows.push_back(std::move(row));
    }
    if (positive && adj.flagged_for_review) {
      rep.notes.push_back(f.id + ": neither reading of the mixed-slot identity holds; flagged for review");
      rep.fail(kExitFailure);
    }
  }
  return rep;
}

inline Report cmd_theorems(const RunConfig& cfg) {
  cfg.validate();
  Report rep{"theorems", cfg, {}, {}, kExitPass};
  const auto fixtures = load_fixtures(cfg, {"F3"});
  rep.config.fixtures.clear();
  for (const auto& f : fixtures) rep.config.fixtures.push_back(f.id);
  for (const FixtureSpec& f : fixtures) {
    const Prepared p = prepare(f, cfg);
    const bool positive = f.positive && p.axioms.all_passed();
    if (!positive) rep.notes.push_back(f.id + ": not a verified LP-Sasakian structure; theorem rows are informational");

    Row nr;
    nr.kind = "condition";
    nr.fixture = f.id;
    nr.id = "nabla_R_max_abs";
    nr.max_residual = nabla_curvature_norm(p.set);
    nr.verdict = "informational";
    rep.rows.push_back(std::move(nr));
    for (ConnectionKind c : {ConnectionKind::levi_civita, ConnectionKind::ssmc})
      for (bool h : {false, true}) {
        rep.rows.push_back(row_from("condition", phi_symmetry_residual(c, p.set, h, cfg.tol_pass), "informational"));
        rep.rows.push_back(row_from("condition", phi_ricci_residual(c, p.set, h, cfg.tol_pass), "informational"));
      }

    for (const TheoremResult& t : all_theorem_residuals(p.set, cfg.tol_pass, cfg.tol_fail)) {
      Row row = row_from("theorem", t.conclusion, std::string(verdict_name(t.verdict)));
      row.id = std::string(theorem_name(t.id));
      row.extra["theorem"] = row.id;
      row.extra["hyp_residual"] = t.hypothesis.max_residual;
      row.extra["concl_residual"] = t.conclusion.max_residual;
      row.extra["premise_residual"] = t.premise ? Json(t.premise->max_residual) : Json(nullptr);
      row.extra["tol_fail"] = cfg.tol_fail;
      row.extra["iff"] = t.iff;
      row.extra["hypothesis"] = t.hypothesis.id;
      row.extra["conclusion"] = t.conclusion.id;
      row.extra["premise_band"] = t.premise_band ? Json(std::string(band_name(*t.premise_band))) : Json(nullptr);
      row.extra["hypothesis_band"] = band_name(t.hypothesis_band);
      row.extra["conclusion_band"] = band_name(t.conclusion_band);
      row.extra["reading"] = t.reading ? Json(std::string(reading_name(*t.reading))) : Json(nullptr);
      Json details = Json::array();
      for (const auto& d : t.details) details.push_back(residual_json(d));
      row.extra["details"] = details;
      if (!positive) row.extra["informational"] = true;
      rep.rows.push_back(std::move(row));
      if (positive && t.verdict == Verdict::violation) rep.fail(kExitFailure);
      if (positive && t.verdict == Verdict::inconclusive) rep.fail(kExitInconclusive);
    }
  }
  return rep;
}

/// Identity text, or "@path" for an identity file.
inline std::vector<dsl::CatalogLine> load_identity_argument(const std::string& arg) {
  try {
    if (!arg.empty() && arg[0] == '@') return dsl::load_catalog(arg.substr(1));
    return {dsl::CatalogLine{"input", 1, arg, dsl::parse_identity(arg)}};
  } catch (const dsl::ParseError& e) {
    throw UsageError(dsl::format_diagnostic(arg, e));
  } catch (const ArgumentError& e) {
    throw UsageError(e.what());
  }
}

inline Report cmd_residual(const std::string& identity, const RunConfig& cfg) {
  cfg.validate();
  const auto lines = load_identity_argument(identity);
  Report rep{"residual", cfg, {}, {}, kExitPass};
  const auto fixtures = load_fixtures(cfg, {"F3"});
  rep.config.fixtures.clear();
  for (const auto& f : fixtures) rep.config.fixtures.push_back(f.id);
  for (const FixtureSpec& f : fixtures) {
    const Prepared p = prepare(f, cfg);
    for (const auto& [tag, group] : dsl::group_by_tag(lines)) {
      const ResidualReport r = dsl::dsl_residual_report(tag, group, p.set, cfg.tol_pass);
      Row row = row_from("dsl", r, r.passed ? "pass" : "fail");
      Json texts = Json::array();
      for (const auto& l : group) texts.push_back(dsl::unparse(l.identity));
      row.extra["identity"] = texts;
      rep.rows.push_back(std::move(row));
      if (!r.passed) rep.fail(kExitFailure);
    }
  }
  return rep;
}

inline Report cmd_fixtures(const RunConfig& cfg) {
  Report rep{"fixtures", cfg, {}, {}, kExitPass};
  std::vector<FixtureSpec> reg;
  try {
    reg = cfg.registry_path ? load_registry(*cfg.registry_path) : default_registry();
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  rep.config.fixtures.clear();
  for (const FixtureSpec& f : reg) {
    if (!cfg.fixtures.empty() && std::find(cfg.fixtures.begin(), cfg.fixtures.end(), f.id) == cfg.fixtures.end()) continue;
    rep.config.fixtures.push_back(f.id);
    Row row;
    row.kind = "fixture";
    row.fixture = f.id;
    row.id = f.id;
    row.verdict = f.positive ? "positive" : "negative";
    row.extra["fixture_kind"] = fixture_kind_name(f.kind);
    row.extra["dim"] = f.dim;
    row.extra["c"] = f.c;
    row.extra["declared_axiom"] = f.declared_axiom ? Json(std::string(axiom_name(*f.declared_axiom))) : Json(nullptr);
    Json expected = Json::array();
    for (Axiom a : f.expected_failures) expected.push_back(std::string(axiom_name(a)));
    row.extra["expected_failures"] = expected;
    rep.rows.push_back(std::move(row));
  }
  for (const auto& id : cfg.fixtures)
    if (std::find(rep.config.fixtures.begin(), rep.config.fixtures.end(), id) == rep.config.fixtures.end())
      throw UsageError("unknown fixture id: " + id);
  return rep;
}

inline std::string fixtures_text(const Report& rep) {
  std::ostringstream out;
  for (const Row& r : rep.rows) {
    out << r.id << "  " << r.extra["fixture_kind"].get<std::string>() << "  n=" << r.extra["dim"].get<int>()
        << "  c=" << r.extra["c"].get<double>() << "  " << r.verdict;
    if (!r.extra["declared_axiom"].is_null()) out << "  declared=" << r.extra["declared_axiom"].get<std::string>();
    out << "\n";
  }
  return out.str();
}

inline void write_json(const Report& rep, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << to_json(rep).dump(2) << "\n";
}

}  // namespace geomlab::cli
