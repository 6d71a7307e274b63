// Parse identities written in the expression language and evaluate them on the
// warped fixture.  Usage: demo_dsl ["lhs = rhs" ...]

#include <cstdio>
#include <iostream>

#include "geomlab/dsl/dsl.hpp"
#include "geomlab/fixtures/fixtures.hpp"
#include "geomlab/verifier/catalog.hpp"

using namespace geomlab;

int main(int argc, char** argv) {
  std::vector<std::string> sources;
  for (int i = 1; i < argc; ++i) sources.emplace_back(argv[i]);
  if (sources.empty())
    sources = {"R(X, Y, xi) = eta(Y) * X - eta(X) * Y",
               "St(X, Y) = S(X, Y) - (n - 2) * alpha(X, Y) - a * g(X, Y)",
               "nablat[X](eta)(Y) = alpha(X, Y) - 1/2 * g(X, Y)",
               "alpha(X, Y) = 1/2 * g(X, Y)",
               "nabla[W](R)(X, Y, Z) = 0",
               "S(X, Y) = 0"};

  const FixtureSpec f = find_fixture("F3");
  const SampleSet set = prepare_samples(fixture_bundle(f, f.sample_spec(42, 25, 4)), sample(f.sample_spec(42, 25, 4)), f.id);

  int status = 0;
  for (const std::string& src : sources) {
    try {
      const dsl::Identity id = dsl::parse_identity(src);
      const std::vector<dsl::CatalogLine> lines{{"demo", 1, src, id}};
      const ResidualReport r = dsl::dsl_residual_report("demo", lines, set, 1e-9);
      std::printf("%-70s max %.2e  %s\n", dsl::unparse(id).c_str(), r.max_residual, r.passed ? "holds" : "fails");
    } catch (const dsl::ParseError& e) {
      std::cerr << dsl::format_diagnostic(src, e) << "\n";
      status = 2;
    }
  }
  return status;
}
