// geomlab: verify LP-Sasakian fixtures, evaluate identities, run the theorem checks.

#include <iostream>

#include "CLI11.hpp"

#include "geomlab/cli/runner.hpp"

namespace gc = geomlab::cli;

namespace {

void add_common(CLI::App* cmd, gc::RunConfig& cfg) {
  cmd->add_option("--fixture", cfg.fixtures, "fixture id (repeatable, default F3)");
  cmd->add_option("--seed", cfg.seed, "sampler seed")->capture_default_str();
  cmd->add_option("--points", cfg.points, "sample points per fixture")->capture_default_str();
  cmd->add_option("--tuples", cfg.tuples, "vector tuples per point")->capture_default_str();
  cmd->add_option("--json", cfg.json_path, "write the JSON report to this path");
  cmd->add_option("--registry", cfg.registry_path, "fixture registry file");
}

int emit(const gc::Report& rep, const gc::RunConfig& cfg, bool fixtures_listing = false) {
  std::cout << (fixtures_listing ? gc::fixtures_text(rep) : gc::to_text(rep));
  if (cfg.json_path) gc::write_json(rep, *cfg.json_path);
  return rep.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"LP-Sasakian SSMC numerical verification"};
  app.require_subcommand(1);

  gc::RunConfig verify_cfg, theorems_cfg, residual_cfg, fixtures_cfg;
  std::string identity;

  auto* verify = app.add_subcommand("verify", "check axioms, identity catalog and cross-checks");
  add_common(verify, verify_cfg);

  auto* theorems = app.add_subcommand("theorems", "evaluate the theorem hypotheses and conclusions");
  add_common(theorems, theorems_cfg);
  theorems->add_option("--tol-pass", theorems_cfg.tol_pass, "residual below which a condition holds")->capture_default_str();
  theorems->add_option("--tol-fail", theorems_cfg.tol_fail, "residual above which a condition fails")->capture_default_str();

  auto* residual = app.add_subcommand("residual", "evaluate an identity given as text or @file");
  residual->add_option("identity", identity, "identity text, or @path to an identity file")->required();
  add_common(residual, residual_cfg);
  residual->add_option("--tol", residual_cfg.tol_pass, "pass tolerance")->capture_default_str();

  auto* fixtures = app.add_subcommand("fixtures", "list the fixture registry");
  fixtures->add_option("--fixture", fixtures_cfg.fixtures, "restrict to these ids");
  fixtures->add_option("--json", fixtures_cfg.json_path, "write the JSON listing to this path");
  fixtures->add_option("--registry", fixtures_cfg.registry_path, "fixture registry file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? gc::kExitPass : gc::kExitUsage;
  }

  try {
    if (*verify) return emit(gc::cmd_verify(verify_cfg), verify_cfg);
    if (*theorems) return emit(gc::cmd_theorems(theorems_cfg), theorems_cfg);
    if (*residual) return emit(gc::cmd_residual(identity, residual_cfg), residual_cfg);
    if (*fixtures) return emit(gc::cmd_fixtures(fixtures_cfg), fixtures_cfg, true);
  } catch (const gc::UsageError& e) {
    std::cerr << "geomlab: " << e.what() << "\n";
    return gc::kExitUsage;
  } catch (const geomlab::Error& e) {
    std::cerr << "geomlab: " << e.what() << "\n";
    return gc::kExitFailure;
  }
  return gc::kExitUsage;
}
