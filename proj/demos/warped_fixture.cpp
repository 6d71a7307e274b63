// Build the warped structure in dimension 5, check the axioms, then look at the
// semi-symmetric metric connection at one point.

#include <cstdio>

#include "geomlab/fixtures/fixtures.hpp"
#include "geomlab/ssmc/bundle.hpp"

using namespace geomlab;

int main() {
  const FixtureSpec f = make_warped_fixture(5);
  const AxiomReport report = verify_axioms(f.structure, f.sample_spec(7, 20, 2));
  for (const AxiomResidual& a : report.axioms)
    std::printf("%-16s %.2e %s\n", std::string(axiom_name(a.axiom)).c_str(), a.max_residual, a.passed ? "ok" : "FAIL");
  if (!report.all_passed()) return 1;

  const SSMCBundle b = build_ssmc(f.structure, report);
  const Point p{0.3, -0.2, 0.5, 0.1, 0.4};
  const PointData d = b.point_data(p);
  const Tensor x = make_vector({0.2, -0.7, 0.4, 0.1, 0.9});
  const Tensor y = make_vector({-0.5, 0.3, 0.8, -0.2, 0.6});

  std::printf("\nat z = %.2f\n", p[4]);
  std::printf("  eta(X)           %+.6f\n", d.eta(x));
  std::printf("  alpha(X,Y)       %+.6f\n", d.al(x, y));
  std::printf("  g(X,Y) / 2       %+.6f\n", 0.5 * d.g(x, y));
  std::printf("  a = tr alpha     %+.6f\n", d.scalar(Symbol::a));
  std::printf("  psi = tr Omega   %+.6f\n", d.scalar(Symbol::psi));
  std::printf("  r, r~            %+.6f %+.6f\n", d.scalar(Symbol::r), d.scalar(Symbol::rt));
  // the torsion of the new connection is eta(Y)X - eta(X)Y
  const Tensor tau = d.tau(x, y);
  const Tensor expected = d.eta(y) * x - d.eta(x) * y;
  std::printf("  torsion residual %.2e\n", normalized_residual(tau, expected));
  return 0;
}
