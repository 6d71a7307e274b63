#pragma once

// Truncated multivariate Taylor arithmetic ("jets") up to third order.
//
// A Jet over n chart coordinates stores the value of a scalar field and all of
// its partial derivatives of order 1..order at one point.  Derivative arrays are
// kept dense (n, n*n, n*n*n entries) but every entry is computed once for the
// sorted index tuple and then mirrored, so mixed partials are bit-for-bit
// symmetric.
//
// A Jet with dim() == 0 is a pure constant; it broadcasts against jets of any
// dimension.  Constants carry order kMaxJetOrder so they never truncate a result.

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstddef>
#include <vector>

#include "geomlab/error.hpp"

namespace geomlab {

inline constexpr int kMaxJetOrder = 3;

class Jet {
 public:
  Jet() : c_(1, 0.0) {}
  Jet(double value) : c_(1, value) {}  // NOLINT(google-explicit-constructor)

  static Jet constant(double value, int dim, int order = kMaxJetOrder) {
    Jet j(dim, order);
    j.c_[0] = value;
    return j;
  }

  /// The coordinate function x_index, expanded around `value`.
  static Jet variable(double value, int index, int dim, int order) {
    if (index < 0 || index >= dim) throw ArgumentError("Jet::variable: index out of range");
    Jet j(dim, order);
    j.c_[0] = value;
    if (order >= 1) j.c_[1 + index] = 1.0;
    return j;
  }

  int dim() const { return dim_; }
  int order() const { return order_; }
  bool is_constant() const { return dim_ == 0; }

  double value() const { return c_[0]; }
  double d(int i) const {
    check_order(1);
    return dim_ == 0 ? 0.0 : c_[off1() + i];
  }
  double d(int i, int j) const {
    check_order(2);
    return dim_ == 0 ? 0.0 : c_[off2() + i * dim_ + j];
  }
  double d(int i, int j, int k) const {
    check_order(3);
    return dim_ == 0 ? 0.0 : c_[off3() + (i * dim_ + j) * dim_ + k];
  }

  /// Partial derivative along coordinate i; the result is one order lower.
  Jet partial(int i) const {
    if (order_ < 1) throw ArgumentError("Jet::partial: jet has no derivative information");
    if (dim_ == 0) return Jet(0.0).with_order(order_ - 1);
    if (i < 0 || i >= dim_) throw ArgumentError("Jet::partial: index out of range");
    const int n = dim_;
    Jet r(n, order_ - 1);
    r.c_[0] = c_[off1() + i];
    if (r.order_ >= 1)
      for (int a = 0; a < n; ++a) r.c_[r.off1() + a] = c_[off2() + i * n + a];
    if (r.order_ >= 2)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) r.c_[r.off2() + a * n + b] = c_[off3() + (i * n + a) * n + b];
    return r;
  }

  Jet truncated(int order) const {
    if (order >= order_) return *this;
    Jet r = *this;
    r.order_ = std::max(order, 0);
    r.c_.resize(storage_size(dim_, r.order_));
    return r;
  }

  Jet& operator+=(const Jet& o) { return *this = *this + o; }
  Jet& operator-=(const Jet& o) { return *this = *this - o; }
  Jet& operator*=(const Jet& o) { return *this = *this * o; }
  Jet& operator*=(double s) {
    for (double& v : c_) v *= s;
    return *this;
  }

  friend Jet operator-(const Jet& a) {
    Jet r = a;
    for (double& v : r.c_) v = -v;
    return r;
  }

  friend Jet operator+(const Jet& a, const Jet& b) { return combine(a, b, 1.0); }
  friend Jet operator-(const Jet& a, const Jet& b) { return combine(a, b, -1.0); }

  friend Jet operator*(double s, Jet a) { return a *= s; }
  friend Jet operator*(Jet a, double s) { return a *= s; }

  friend Jet operator*(const Jet& a, const Jet& b) {
    if (a.dim_ == 0) return (a.c_[0] * b).with_order(std::min(a.order_, b.order_));
    if (b.dim_ == 0) return (b.c_[0] * a).with_order(std::min(a.order_, b.order_));
    if (a.dim_ != b.dim_) throw ArgumentError("Jet: dimension mismatch");
    const int n = a.dim_;
    const int ord = std::min(a.order_, b.order_);
    Jet r(n, ord);
    const double a0 = a.c_[0], b0 = b.c_[0];
    r.c_[0] = a0 * b0;
    if (ord >= 1) {
      const double* a1 = a.c_.data() + off1();
      const double* b1 = b.c_.data() + off1();
      double* r1 = r.c_.data() + off1();
      for (int i = 0; i < n; ++i) r1[i] = a1[i] * b0 + a0 * b1[i];
      if (ord >= 2) {
        const double* a2 = a.c_.data() + a.off2();
        const double* b2 = b.c_.data() + b.off2();
        for (int i = 0; i < n; ++i)
          for (int j = i; j < n; ++j)
            r.set2(i, j, a2[i * n + j] * b0 + a1[i] * b1[j] + a1[j] * b1[i] + a0 * b2[i * n + j]);
        if (ord >= 3) {
          const double* a3 = a.c_.data() + a.off3();
          const double* b3 = b.c_.data() + b.off3();
          for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j)
              for (int k = j; k < n; ++k) {
                const int ij = i * n + j, ik = i * n + k, jk = j * n + k;
                r.set3(i, j, k,
                       a3[ij * n + k] * b0 + a2[ij] * b1[k] + a2[ik] * b1[j] + a2[jk] * b1[i] +
                           a1[i] * b2[jk] + a1[j] * b2[ik] + a1[k] * b2[ij] + a0 * b3[ij * n + k]);
              }
        }
      }
    }
    return r;
  }

  friend Jet operator/(const Jet& a, const Jet& b) { return a * reciprocal(b); }
  friend Jet operator/(const Jet& a, double s) { return a * (1.0 / s); }

  /// h(f) given h and its first three derivatives at f.value().
  friend Jet compose(const Jet& f, double h0, double h1, double h2, double h3) {
    if (f.dim_ == 0) return Jet(h0).with_order(f.order_);
    const int n = f.dim_;
    Jet r(n, f.order_);
    r.c_[0] = h0;
    if (f.order_ >= 1) {
      const double* f1 = f.c_.data() + off1();
      for (int i = 0; i < n; ++i) r.c_[off1() + i] = h1 * f1[i];
      if (f.order_ >= 2) {
        const double* f2 = f.c_.data() + f.off2();
        for (int i = 0; i < n; ++i)
          for (int j = i; j < n; ++j) r.set2(i, j, h2 * f1[i] * f1[j] + h1 * f2[i * n + j]);
        if (f.order_ >= 3) {
          const double* f3 = f.c_.data() + f.off3();
          for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j)
              for (int k = j; k < n; ++k) {
                const int ij = i * n + j, ik = i * n + k, jk = j * n + k;
                r.set3(i, j, k,
                       h3 * f1[i] * f1[j] * f1[k] + h2 * (f2[ij] * f1[k] + f2[ik] * f1[j] + f2[jk] * f1[i]) +
                           h1 * f3[ij * n + k]);
              }
        }
      }
    }
    return r;
  }

  friend Jet reciprocal(const Jet& f) {
    const double x = f.value();
    if (x == 0.0 || !std::isfinite(x)) throw EvaluationError("Jet: division by zero");
    const double r = 1.0 / x;
    return compose(f, r, -r * r, 2.0 * r * r * r, -6.0 * r * r * r * r);
  }
  friend Jet exp(const Jet& f) {
    const double e = std::exp(f.value());
    return compose(f, e, e, e, e);
  }
  friend Jet log(const Jet& f) {
    const double x = f.value();
    if (!(x > 0.0)) throw EvaluationError("Jet: log of non-positive value");
    return compose(f, std::log(x), 1.0 / x, -1.0 / (x * x), 2.0 / (x * x * x));
  }
  friend Jet sin(const Jet& f) {
    const double s = std::sin(f.value()), c = std::cos(f.value());
    return compose(f, s, c, -s, -c);
  }
  friend Jet cos(const Jet& f) {
    const double s = std::sin(f.value()), c = std::cos(f.value());
    return compose(f, c, -s, -c, s);
  }
  friend Jet sqrt(const Jet& f) {
    const double x = f.value();
    if (!(x > 0.0)) throw EvaluationError("Jet: sqrt of non-positive value");
    const double s = std::sqrt(x);
    return compose(f, s, 0.5 / s, -0.25 / (s * x), 0.375 / (s * x * x));
  }
  friend Jet pow(const Jet& f, double p) {
    const double x = f.value();
    if (!(x > 0.0) && p != std::floor(p)) throw EvaluationError("Jet: fractional power of non-positive value");
    return compose(f, std::pow(x, p), p * std::pow(x, p - 1), p * (p - 1) * std::pow(x, p - 2),
                   p * (p - 1) * (p - 2) * std::pow(x, p - 3));
  }

  /// True when every stored coefficient is finite.
  bool finite() const {
    return std::all_of(c_.begin(), c_.end(), [](double v) { return std::isfinite(v); });
  }

  friend bool operator==(const Jet& a, const Jet& b) {
    return a.dim_ == b.dim_ && a.order_ == b.order_ && a.c_ == b.c_;
  }

 private:
  Jet(int dim, int order) : dim_(dim), order_(order), c_(storage_size(dim, order), 0.0) {
    if (order < 0 || order > kMaxJetOrder) throw ArgumentError("Jet: order must be in 0..3");
  }

  static std::size_t storage_size(int n, int order) {
    std::size_t s = 1, term = 1;
    for (int k = 1; k <= order && n > 0; ++k) {
      term *= static_cast<std::size_t>(n);
      s += term;
    }
    return s;
  }
  static constexpr int off1() { return 1; }
  int off2() const { return 1 + dim_; }
  int off3() const { return 1 + dim_ + dim_ * dim_; }

  void check_order(int k) const {
    if (order_ < k) throw ArgumentError("Jet: derivative order not available");
  }

  void set2(int i, int j, double v) {
    const int n = dim_;
    c_[off2() + i * n + j] = v;
    c_[off2() + j * n + i] = v;
  }
  void set3(int i, int j, int k, double v) {
    const int n = dim_, o = off3();
    c_[o + (i * n + j) * n + k] = v;
    c_[o + (i * n + k) * n + j] = v;
    c_[o + (j * n + i) * n + k] = v;
    c_[o + (j * n + k) * n + i] = v;
    c_[o + (k * n + i) * n + j] = v;
    c_[o + (k * n + j) * n + i] = v;
  }

  Jet with_order(int order) const {
    Jet r = *this;
    r.order_ = std::min(order_, order);
    if (r.dim_ > 0) r.c_.resize(storage_size(r.dim_, r.order_));
    return r;
  }

  static Jet combine(const Jet& a, const Jet& b, double sign) {
    if (a.dim_ == 0 && b.dim_ == 0) {
      Jet r(a.c_[0] + sign * b.c_[0]);
      r.order_ = std::min(a.order_, b.order_);
      return r;
    }
    if (a.dim_ == 0) {
      Jet r = sign * b;
      r.c_[0] += a.c_[0];
      return r.with_order(a.order_);
    }
    if (b.dim_ == 0) {
      Jet r = a;
      r.c_[0] += sign * b.c_[0];
      return r.with_order(b.order_);
    }
    if (a.dim_ != b.dim_) throw ArgumentError("Jet: dimension mismatch");
    const int ord = std::min(a.order_, b.order_);
    Jet r(a.dim_, ord);
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] + sign * b.c_[i];
    return r;
  }

  int dim_ = 0;
  int order_ = kMaxJetOrder;
  std::vector<double> c_;
};

}  // namespace geomlab
