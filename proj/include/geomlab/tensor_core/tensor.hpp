#pragma once

// Dense valence-typed tensors over an n-dimensional chart.
//
// Index convention (stable, golden reports depend on it): a tensor of valence
// (p, q) stores its components row-major with all p contravariant slots first,
// then the q covariant slots, each group in declared order.  So R^l_{ijk} is
// stored at ((l*n + i)*n + j)*n + k.  Operations that add a slot (tensor
// products, covariant derivatives) append it at the end of its group.

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "geomlab/error.hpp"
#include "geomlab/tensor_core/jet.hpp"

namespace geomlab {

struct Valence {
  int upper = 0;
  int lower = 0;

  int rank() const { return upper + lower; }
  friend bool operator==(const Valence&, const Valence&) = default;
};

inline std::string to_string(Valence v) {
  return "(" + std::to_string(v.upper) + "," + std::to_string(v.lower) + ")";
}

inline std::size_t ipow(int n, int k) {
  std::size_t r = 1;
  for (int i = 0; i < k; ++i) r *= static_cast<std::size_t>(n);
  return r;
}

template <class T>
class BasicTensor {
 public:
  using value_type = T;

  BasicTensor() : components_(1, T(0.0)) {}
  BasicTensor(Valence valence, int dim)
      : valence_(valence), dim_(dim), components_(ipow(dim, valence.rank()), T(0.0)) {
    if (dim < 1 || valence.upper < 0 || valence.lower < 0) throw ArgumentError("Tensor: invalid shape");
  }
  BasicTensor(Valence valence, int dim, std::vector<T> components)
      : valence_(valence), dim_(dim), components_(std::move(components)) {
    if (components_.size() != ipow(dim, valence.rank()))
      throw ArgumentError("Tensor: component count does not match n^(p+q)");
  }

  static BasicTensor scalar(T value, int dim) { return BasicTensor({0, 0}, dim, {std::move(value)}); }

  Valence valence() const { return valence_; }
  int dim() const { return dim_; }
  int rank() const { return valence_.rank(); }
  std::size_t size() const { return components_.size(); }

  T& operator[](std::size_t i) { return components_[i]; }
  const T& operator[](std::size_t i) const { return components_[i]; }

  template <std::integral... I>
  T& operator()(I... idx) {
    return components_[flat(idx...)];
  }
  template <std::integral... I>
  const T& operator()(I... idx) const {
    return components_[flat(idx...)];
  }

  std::span<const T> components() const { return components_; }
  std::span<T> components() { return components_; }

  /// Row-major stride of slot s (0-based over all slots, upper first).
  std::size_t stride(int slot) const { return ipow(dim_, rank() - 1 - slot); }

  BasicTensor& operator+=(const BasicTensor& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < components_.size(); ++i) components_[i] += o.components_[i];
    return *this;
  }
  BasicTensor& operator-=(const BasicTensor& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < components_.size(); ++i) components_[i] -= o.components_[i];
    return *this;
  }
  BasicTensor& operator*=(double s) {
    for (T& c : components_) c *= s;
    return *this;
  }

  friend BasicTensor operator+(BasicTensor a, const BasicTensor& b) { return a += b; }
  friend BasicTensor operator-(BasicTensor a, const BasicTensor& b) { return a -= b; }
  friend BasicTensor operator-(BasicTensor a) { return a *= -1.0; }
  friend BasicTensor operator*(double s, BasicTensor a) { return a *= s; }
  friend BasicTensor operator*(BasicTensor a, double s) { return a *= s; }

  friend bool operator==(const BasicTensor&, const BasicTensor&) = default;

 private:
  template <class... I>
  std::size_t flat(I... idx) const {
    if (sizeof...(I) != static_cast<std::size_t>(rank())) throw ArgumentError("Tensor: wrong number of indices");
    std::size_t f = 0;
    ((f = f * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(idx)), ...);
    return f;
  }
  void check_same_shape(const BasicTensor& o) const {
    if (!(valence_ == o.valence_) || dim_ != o.dim_) throw ArgumentError("Tensor: shape mismatch");
  }

  Valence valence_{};
  int dim_ = 1;
  std::vector<T> components_;
};

using Tensor = BasicTensor<double>;
using JetTensor = BasicTensor<Jet>;

// ---------------------------------------------------------------------------
// Construction helpers

inline Tensor make_vector(std::vector<double> c) {
  const int n = static_cast<int>(c.size());
  return Tensor({1, 0}, n, std::move(c));
}

inline Tensor identity_tensor(int n) {
  Tensor t({1, 1}, n);
  for (int i = 0; i < n; ++i) t(i, i) = 1.0;
  return t;
}

inline double scalar_value(const Tensor& t) {
  if (t.rank() != 0) throw ArgumentError("scalar_value: tensor is not a scalar");
  return t[0];
}

inline double max_abs(const Tensor& t) {
  double m = 0.0;
  for (double c : t.components()) m = std::max(m, std::abs(c));
  return m;
}

inline bool all_finite(const Tensor& t) {
  return std::all_of(t.components().begin(), t.components().end(), [](double c) { return std::isfinite(c); });
}

// ---------------------------------------------------------------------------
// Algebra

namespace detail {

// Decompose a flat index into per-slot indices.
inline void unflatten(std::size_t f, int n, std::span<int> out) {
  for (std::size_t s = out.size(); s-- > 0;) {
    out[s] = static_cast<int>(f % static_cast<std::size_t>(n));
    f /= static_cast<std::size_t>(n);
  }
}

inline std::size_t flatten(std::span<const int> idx, int n) {
  std::size_t f = 0;
  for (int i : idx) f = f * static_cast<std::size_t>(n) + static_cast<std::size_t>(i);
  return f;
}

}  // namespace detail

/// Trace over one contravariant slot and one covariant slot (both 0-based within their group).
template <class T>
BasicTensor<T> contract(const BasicTensor<T>& t, int upper_slot, int lower_slot) {
  const Valence v = t.valence();
  if (upper_slot < 0 || upper_slot >= v.upper) throw ArgumentError("contract: upper slot out of range");
  if (lower_slot < 0 || lower_slot >= v.lower) throw ArgumentError("contract: lower slot out of range");
  const int n = t.dim();
  BasicTensor<T> r({v.upper - 1, v.lower - 1}, n);
  const int a = upper_slot, b = v.upper + lower_slot;
  std::vector<int> out(static_cast<std::size_t>(r.rank()));
  std::vector<int> in(static_cast<std::size_t>(t.rank()));
  for (std::size_t f = 0; f < r.size(); ++f) {
    detail::unflatten(f, n, out);
    for (int s = 0, o = 0; s < t.rank(); ++s)
      if (s != a && s != b) in[static_cast<std::size_t>(s)] = out[static_cast<std::size_t>(o++)];
    T acc(0.0);
    for (int m = 0; m < n; ++m) {
      in[static_cast<std::size_t>(a)] = m;
      in[static_cast<std::size_t>(b)] = m;
      acc += t[detail::flatten(in, n)];
    }
    r[f] = acc;
  }
  return r;
}

/// Outer product; upper slots of a then b, followed by lower slots of a then b.
template <class T>
BasicTensor<T> tensor_product(const BasicTensor<T>& a, const BasicTensor<T>& b) {
  if (a.dim() != b.dim()) throw ArgumentError("tensor_product: dimension mismatch");
  const int n = a.dim();
  const Valence va = a.valence(), vb = b.valence();
  BasicTensor<T> r({va.upper + vb.upper, va.lower + vb.lower}, n);
  std::vector<int> idx(static_cast<std::size_t>(r.rank()));
  std::vector<int> ia(static_cast<std::size_t>(a.rank())), ib(static_cast<std::size_t>(b.rank()));
  for (std::size_t f = 0; f < r.size(); ++f) {
    detail::unflatten(f, n, idx);
    int k = 0;
    for (int s = 0; s < va.upper; ++s) ia[static_cast<std::size_t>(s)] = idx[static_cast<std::size_t>(k++)];
    for (int s = 0; s < vb.upper; ++s) ib[static_cast<std::size_t>(s)] = idx[static_cast<std::size_t>(k++)];
    for (int s = 0; s < va.lower; ++s)
      ia[static_cast<std::size_t>(va.upper + s)] = idx[static_cast<std::size_t>(k++)];
    for (int s = 0; s < vb.lower; ++s)
      ib[static_cast<std::size_t>(vb.upper + s)] = idx[static_cast<std::size_t>(k++)];
    r[f] = a[detail::flatten(ia, n)] * b[detail::flatten(ib, n)];
  }
  return r;
}

/// Contract covariant slot `lower_slot` with a vector.
template <class T>
BasicTensor<T> insert_vector(const BasicTensor<T>& t, int lower_slot, const Tensor& v) {
  const Valence tv = t.valence();
  if (!(v.valence() == Valence{1, 0}) || v.dim() != t.dim()) throw ArgumentError("insert_vector: not a vector");
  if (lower_slot < 0 || lower_slot >= tv.lower) throw ArgumentError("insert_vector: slot out of range");
  const int n = t.dim();
  BasicTensor<T> r({tv.upper, tv.lower - 1}, n);
  const int s = tv.upper + lower_slot;
  const std::size_t stride = t.stride(s);
  const std::size_t outer = ipow(n, s);
  for (std::size_t hi = 0; hi < outer; ++hi)
    for (std::size_t lo = 0; lo < stride; ++lo) {
      T acc(0.0);
      for (int m = 0; m < n; ++m) acc += v[static_cast<std::size_t>(m)] * t[(hi * n + m) * stride + lo];
      r[hi * stride + lo] = acc;
    }
  return r;
}

/// Fill the leading covariant slots with vectors, in order: apply(R, {X,Y,Z}) = R(X,Y)Z.
template <class T>
BasicTensor<T> apply(const BasicTensor<T>& t, std::span<const Tensor> vectors) {
  if (static_cast<int>(vectors.size()) > t.valence().lower) throw ArgumentError("apply: too many arguments");
  // Fill the last requested slot first so the remaining slot numbers stay valid.
  BasicTensor<T> r = t;
  for (std::size_t k = vectors.size(); k-- > 0;) r = insert_vector(r, static_cast<int>(k), vectors[k]);
  return r;
}

template <class T>
BasicTensor<T> apply(const BasicTensor<T>& t, std::initializer_list<Tensor> vectors) {
  return apply(t, std::span<const Tensor>(vectors.begin(), vectors.size()));
}

/// Swap two covariant slots.
template <class T>
BasicTensor<T> swap_lower(const BasicTensor<T>& t, int i, int j) {
  const Valence v = t.valence();
  if (i < 0 || j < 0 || i >= v.lower || j >= v.lower) throw ArgumentError("swap_lower: slot out of range");
  const int n = t.dim();
  BasicTensor<T> r(v, n);
  std::vector<int> idx(static_cast<std::size_t>(t.rank()));
  for (std::size_t f = 0; f < t.size(); ++f) {
    detail::unflatten(f, n, idx);
    std::swap(idx[static_cast<std::size_t>(v.upper + i)], idx[static_cast<std::size_t>(v.upper + j)]);
    r[detail::flatten(idx, n)] = t[f];
  }
  return r;
}

// ---------------------------------------------------------------------------
// Jet tensors: tensor fields expanded to some order at a point

inline int jet_order(const JetTensor& t) {
  int o = kMaxJetOrder;
  for (const Jet& c : t.components()) o = std::min(o, c.order());
  return o;
}

inline Tensor value_of(const JetTensor& t) {
  Tensor r(t.valence(), t.dim());
  for (std::size_t i = 0; i < t.size(); ++i) r[i] = t[i].value();
  return r;
}

inline JetTensor lift(const Tensor& t) {
  JetTensor r(t.valence(), t.dim());
  for (std::size_t i = 0; i < t.size(); ++i) r[i] = Jet(t[i]);
  return r;
}

inline JetTensor truncated(const JetTensor& t, int order) {
  JetTensor r = t;
  for (Jet& c : r.components()) c = c.truncated(order);
  return r;
}

/// Coordinate partial derivatives, appended as a trailing covariant slot (not tensorial by itself).
inline JetTensor partial_derivatives(const JetTensor& t) {
  const int n = t.dim();
  JetTensor r({t.valence().upper, t.valence().lower + 1}, n);
  for (std::size_t f = 0; f < t.size(); ++f)
    for (int m = 0; m < n; ++m) r[f * static_cast<std::size_t>(n) + static_cast<std::size_t>(m)] = t[f].partial(m);
  return r;
}

}  // namespace geomlab
