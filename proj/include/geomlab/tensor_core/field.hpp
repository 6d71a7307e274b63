#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "geomlab/error.hpp"
#include "geomlab/tensor_core/jet.hpp"
#include "geomlab/tensor_core/point.hpp"
#include "geomlab/tensor_core/tensor.hpp"

namespace geomlab {

/// A tensor field written as a function of the chart coordinates.  The function
/// receives coordinate jets and must build its output with Jet arithmetic, so the
/// same code yields values and exact derivatives.
using FieldFunction = std::function<JetTensor(std::span<const Jet> coords)>;

class TensorField {
 public:
  /// Evaluator that expands the field at a point directly (used for derived fields).
  using PointFunction = std::function<JetTensor(const Point&, int order)>;

  TensorField() = default;
  TensorField(Valence valence, int dim, FieldFunction fn, std::string name = {})
      : valence_(valence), dim_(dim), name_(std::move(name)) {
    if (dim < 1) throw ArgumentError("TensorField: dimension must be positive");
    eval_ = [fn = std::move(fn), dim](const Point& p, int order) {
      std::vector<Jet> coords;
      coords.reserve(static_cast<std::size_t>(dim));
      for (int i = 0; i < dim; ++i) coords.push_back(Jet::variable(p[i], i, dim, order));
      return fn(coords);
    };
  }

  static TensorField from_point_function(Valence valence, int dim, PointFunction fn, std::string name = {}) {
    TensorField f;
    f.valence_ = valence;
    f.dim_ = dim;
    f.eval_ = std::move(fn);
    f.name_ = std::move(name);
    return f;
  }

  Valence valence() const { return valence_; }
  int dim() const { return dim_; }
  const std::string& name() const { return name_; }

  /// Expand the field to `order` at p.
  JetTensor jets(const Point& p, int order) const {
    if (order < 0 || order > kMaxJetOrder) throw ArgumentError("TensorField: order must be in 0..3");
    if (p.dim() != dim_) throw ArgumentError("TensorField: point dimension does not match chart");
    JetTensor out = eval_(p, order);
    if (!(out.valence() == valence_) || out.dim() != dim_)
      throw EvaluationError("TensorField " + name_ + ": evaluator returned the wrong shape");
    for (Jet& c : out.components()) {
      if (!c.finite()) throw EvaluationError("TensorField " + name_ + ": non-finite value");
      if (c.order() < order) throw EvaluationError("TensorField " + name_ + ": evaluator lost derivative order");
      c = c.truncated(order);
    }
    return out;
  }

  Tensor value(const Point& p) const { return value_of(jets(p, 0)); }

 private:
  Valence valence_{};
  int dim_ = 1;
  PointFunction eval_;
  std::string name_;
};

/// Scalar field: the (0,0) case, with Jet-valued access.
class ScalarField {
 public:
  using Function = std::function<Jet(std::span<const Jet> coords)>;

  ScalarField() = default;
  ScalarField(int dim, Function fn, std::string name = {})
      : field_({0, 0}, dim,
               [f = std::move(fn), dim](std::span<const Jet> x) { return JetTensor::scalar(f(x), dim); },
               std::move(name)) {}
  /// Wrap a (0,0) tensor field.
  explicit ScalarField(TensorField f) : field_(std::move(f)) {
    if (!(field_.valence() == Valence{0, 0})) throw ArgumentError("ScalarField: field must be (0,0)");
  }

  int dim() const { return field_.dim(); }
  Jet jet(const Point& p, int order) const { return field_.jets(p, order)[0]; }
  double value(const Point& p) const { return jet(p, 0).value(); }
  const TensorField& as_tensor_field() const { return field_; }

 private:
  TensorField field_;
};

/// All partial derivatives of f up to `order` at p, by truncated Taylor arithmetic.
inline Jet jet_eval(const ScalarField& f, const Point& p, int order) {
  if (order < 0 || order > kMaxJetOrder) throw ArgumentError("jet_eval: order must be in 0..3");
  return f.jet(p, order);
}

/// Default central-difference steps per derivative order.  Powers of two keep
/// x +/- h exact for dyadic coordinates; the sizes balance truncation against
/// cancellation error for each order.
inline double default_fd_step(int order) {
  switch (order) {
    case 1: return 0x1p-13;
    case 2: return 0x1p-10;
    default: return 0x1p-8;
  }
}

/// Max relative discrepancy |jet - fd| / max(1, |jet|) over all partial
/// derivatives of order 1..order.  Nested central differences are the oracle.
inline double fd_check(const ScalarField& f, const Point& p, int order, std::optional<double> step = std::nullopt) {
  if (order < 0 || order > kMaxJetOrder) throw ArgumentError("fd_check: order must be in 0..3");
  const int n = p.dim();
  const Jet jet = jet_eval(f, p, order);
  const std::vector<double> base(p.coords().begin(), p.coords().end());

  double worst = 0.0;
  std::vector<int> idx;
  auto visit = [&](auto&& self, int k, int start) -> void {
    if (static_cast<int>(idx.size()) == k) {
      const double h = step.value_or(default_fd_step(k));
      double fd = 0.0;
      for (unsigned mask = 0; mask < (1u << k); ++mask) {
        std::vector<double> x = base;
        double sign = 1.0;
        for (int s = 0; s < k; ++s) {
          const bool minus = (mask >> s) & 1u;
          x[static_cast<std::size_t>(idx[static_cast<std::size_t>(s)])] += minus ? -h : h;
          if (minus) sign = -sign;
        }
        fd += sign * f.value(Point(std::move(x)));
      }
      fd /= std::pow(2.0 * h, k);
      double exact = 0.0;
      if (k == 1) exact = jet.d(idx[0]);
      if (k == 2) exact = jet.d(idx[0], idx[1]);
      if (k == 3) exact = jet.d(idx[0], idx[1], idx[2]);
      worst = std::max(worst, std::abs(exact - fd) / std::max(1.0, std::abs(exact)));
      return;
    }
    for (int i = start; i < n; ++i) {
      idx.push_back(i);
      self(self, k, i);
      idx.pop_back();
    }
  };
  for (int k = 1; k <= order; ++k) visit(visit, k, 0);
  return worst;
}

}  // namespace geomlab
