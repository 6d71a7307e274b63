#pragma once

// Concrete chart manifolds.  Coordinates are (x_1, ..., x_{n-1}, z) with the
// timelike coordinate last.

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "geomlab/error.hpp"
#include "geomlab/fixtures/sampler.hpp"
#include "geomlab/lp_structure/axioms.hpp"
#include "geomlab/lp_structure/structure.hpp"

namespace geomlab {

enum class FixtureKind { warped, flat_minkowski, rank_deficient_phi, asymmetric_omega };

inline std::string_view fixture_kind_name(FixtureKind k) {
  switch (k) {
    case FixtureKind::warped: return "warped";
    case FixtureKind::flat_minkowski: return "flat_minkowski";
    case FixtureKind::rank_deficient_phi: return "rank_deficient_phi";
    case FixtureKind::asymmetric_omega: return "asymmetric_omega";
  }
  return "?";
}

inline std::optional<FixtureKind> parse_fixture_kind(std::string_view s) {
  for (FixtureKind k : {FixtureKind::warped, FixtureKind::flat_minkowski, FixtureKind::rank_deficient_phi,
                        FixtureKind::asymmetric_omega})
    if (fixture_kind_name(k) == s) return k;
  return std::nullopt;
}

/// Size of the skew perturbation in the asymmetric_omega control.
inline constexpr double kSkewPerturbation = 0.5;

struct FixtureSpec {
  std::string id;
  FixtureKind kind = FixtureKind::warped;
  int dim = 3;
  double c = 1.0;
  std::vector<Interval> bounds;
  LPStructure structure;
  /// True when the structure is meant to satisfy every axiom.
  bool positive = true;
  /// For negative controls: the axiom the control is built to break, and the
  /// complete set of axioms it is expected to fail (in all_axioms() order).
  std::optional<Axiom> declared_axiom;
  std::vector<Axiom> expected_failures;

  SampleSpec sample_spec(std::uint64_t seed, int points, int tuples) const {
    return SampleSpec{seed, points, tuples, bounds};
  }
};

namespace detail {

inline std::vector<Interval> box_bounds(int n, double zmin, double zmax) {
  std::vector<Interval> b(static_cast<std::size_t>(n), Interval{-1.0, 1.0});
  b.back() = Interval{zmin, zmax};
  return b;
}

/// g = e^{2cz} sum dx_i^2 - dz^2.
inline MetricField warped_metric(int n, double c) {
  return MetricField(TensorField(
      {0, 2}, n,
      [n, c](std::span<const Jet> x) {
        JetTensor g({0, 2}, n);
        const Jet w = exp(2.0 * c * x[static_cast<std::size_t>(n - 1)]);
        for (int i = 0; i + 1 < n; ++i) g(i, i) = w;
        g(n - 1, n - 1) = Jet(-1.0);
        return g;
      },
      "warped metric"));
}

inline MetricField minkowski_metric(int n) {
  return MetricField(TensorField(
      {0, 2}, n,
      [n](std::span<const Jet>) {
        JetTensor g({0, 2}, n);
        for (int i = 0; i + 1 < n; ++i) g(i, i) = Jet(1.0);
        g(n - 1, n - 1) = Jet(-1.0);
        return g;
      },
      "minkowski metric"));
}

/// d/dz, the unit timelike field.
inline TensorField time_vector(int n) {
  return TensorField(
      {1, 0}, n,
      [n](std::span<const Jet>) {
        JetTensor v({1, 0}, n);
        v(n - 1) = Jet(1.0);
        return v;
      },
      "xi");
}

/// Constant (1,1) field.
inline TensorField constant_operator(const Tensor& m, std::string name) {
  const int n = m.dim();
  return TensorField(
      {1, 1}, n, [m](std::span<const Jet>) { return lift(m); }, std::move(name));
}

/// phi = I + eta (x) xi for xi = d/dz, eta = -dz: the identity on the x block, 0 on z.
inline Tensor horizontal_identity(int n) {
  Tensor m = identity_tensor(n);
  m(n - 1, n - 1) = 0.0;
  return m;
}

}  // namespace detail

/// The warped LP-Sasakian candidate with warp rate c; c = 1 is the positive fixture.
inline FixtureSpec make_warped_fixture(int n, double c = 1.0, double zmin = -1.0, double zmax = 1.0,
                                       std::string id = {}) {
  if (n < 3) throw ArgumentError("make_warped_fixture: dimension must be at least 3");
  if (!(zmin <= zmax)) throw ArgumentError("make_warped_fixture: empty z range");
  FixtureSpec f;
  f.id = id.empty() ? "W" + std::to_string(n) : std::move(id);
  f.kind = FixtureKind::warped;
  f.dim = n;
  f.c = c;
  f.bounds = detail::box_bounds(n, zmin, zmax);
  f.structure = LPStructure(detail::constant_operator(detail::horizontal_identity(n), "phi"), detail::time_vector(n),
                            detail::warped_metric(n, c));
  f.positive = (c == 1.0);
  if (!f.positive) {
    f.declared_axiom = Axiom::nabla_xi;
    f.expected_failures = {Axiom::nabla_xi, Axiom::nabla_phi};
  }
  return f;
}

inline FixtureSpec make_negative_fixture(FixtureKind kind, int n = 3, std::string id = {}) {
  if (n < 3) throw ArgumentError("make_negative_fixture: dimension must be at least 3");
  FixtureSpec f;
  f.kind = kind;
  f.dim = n;
  f.bounds = detail::box_bounds(n, -1.0, 1.0);
  f.positive = false;
  switch (kind) {
    case FixtureKind::flat_minkowski:
      f.id = "N_flat";
      f.structure = LPStructure(detail::constant_operator(detail::horizontal_identity(n), "phi"),
                                detail::time_vector(n), detail::minkowski_metric(n));
      f.declared_axiom = Axiom::nabla_xi;
      f.expected_failures = {Axiom::nabla_xi, Axiom::nabla_phi};
      break;
    case FixtureKind::rank_deficient_phi:
      f.id = "N_rank";
      f.structure = LPStructure(detail::constant_operator(Tensor({1, 1}, n), "phi"), detail::time_vector(n),
                                detail::warped_metric(n, 1.0));
      f.declared_axiom = Axiom::rank_phi;
      f.expected_failures = {Axiom::phi_square, Axiom::phi_compat, Axiom::nabla_xi, Axiom::nabla_phi,
                             Axiom::rank_phi};
      break;
    case FixtureKind::asymmetric_omega: {
      f.id = "N_asym";
      Tensor m = detail::horizontal_identity(n);
      m(0, 1) = kSkewPerturbation;
      m(1, 0) = -kSkewPerturbation;
      f.structure = LPStructure(detail::constant_operator(m, "phi"), detail::time_vector(n),
                                detail::warped_metric(n, 1.0));
      f.declared_axiom = Axiom::omega_symmetric;
      f.expected_failures = {Axiom::phi_square, Axiom::phi_compat, Axiom::nabla_xi, Axiom::nabla_phi,
                             Axiom::omega_symmetric};
      break;
    }
    case FixtureKind::warped:
      throw ArgumentError("make_negative_fixture: warped is not a negative kind (use make_warped_fixture)");
  }
  if (!id.empty()) f.id = std::move(id);
  return f;
}

// ---------------------------------------------------------------------------
// Registry: one fixture per line, "id kind n c zmin zmax"; c, zmin and zmax are
// optional (defaults 1, -1, 1).  '#' starts a comment.

inline constexpr std::string_view kDefaultRegistry =
    "# id     kind                n  c  zmin zmax\n"
    "F3       warped              3  1  -1   1\n"
    "F5       warped              5  1  -1   1\n"
    "W3c2     warped              3  2  -1   1\n"
    "N_flat   flat_minkowski      3\n"
    "N_rank   rank_deficient_phi  3\n"
    "N_asym   asymmetric_omega    3\n";

namespace detail {

inline double parse_real(const std::string& tok, int line) {
  double v = 0.0;
  const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
    throw ArgumentError("registry line " + std::to_string(line) + ": not a number: " + tok);
  return v;
}

}  // namespace detail

inline std::vector<FixtureSpec> parse_registry(std::string_view text) {
  std::vector<FixtureSpec> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok.size() < 3 || tok.size() > 6)
      throw ArgumentError("registry line " + std::to_string(line_no) + ": expected 'id kind n [c zmin zmax]'");
    const auto kind = parse_fixture_kind(tok[1]);
    if (!kind) throw ArgumentError("registry line " + std::to_string(line_no) + ": unknown kind " + tok[1]);
    const double nd = detail::parse_real(tok[2], line_no);
    const int n = static_cast<int>(nd);
    if (static_cast<double>(n) != nd) throw ArgumentError("registry line " + std::to_string(line_no) + ": bad dimension");
    const double c = tok.size() > 3 ? detail::parse_real(tok[3], line_no) : 1.0;
    const double zmin = tok.size() > 4 ? detail::parse_real(tok[4], line_no) : -1.0;
    const double zmax = tok.size() > 5 ? detail::parse_real(tok[5], line_no) : 1.0;
    for (const FixtureSpec& f : out)
      if (f.id == tok[0]) throw ArgumentError("registry line " + std::to_string(line_no) + ": duplicate id " + tok[0]);
    FixtureSpec f = *kind == FixtureKind::warped ? make_warped_fixture(n, c, zmin, zmax, tok[0])
                                                 : make_negative_fixture(*kind, n, tok[0]);
    f.bounds = detail::box_bounds(n, zmin, zmax);
    out.push_back(std::move(f));
  }
  return out;
}

inline std::vector<FixtureSpec> load_registry(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open fixture registry " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_registry(ss.str());
}

inline const std::vector<FixtureSpec>& default_registry() {
  static const std::vector<FixtureSpec> reg = parse_registry(kDefaultRegistry);
  return reg;
}

inline const FixtureSpec& find_fixture(const std::vector<FixtureSpec>& reg, std::string_view id) {
  for (const FixtureSpec& f : reg)
    if (f.id == id) return f;
  throw ArgumentError("unknown fixture id: " + std::string(id));
}

inline const FixtureSpec& find_fixture(std::string_view id) { return find_fixture(default_registry(), id); }

}  // namespace geomlab
