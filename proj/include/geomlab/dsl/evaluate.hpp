#pragma once

// Evaluation of parsed expressions against the structure data at one point.
// Chained calls are flattened and derivative directions go into the last slot,
// so an expression performs the same tensor operations as the native
// evaluators in the catalog.

#include <array>
#include <optional>
#include <vector>

#include "geomlab/dsl/ast.hpp"
#include "geomlab/fixtures/sampler.hpp"
#include "geomlab/residual.hpp"

namespace geomlab::dsl {

/// Vectors bound to X, Y, Z, W, U.
struct Bindings {
  std::array<std::optional<Tensor>, 5> v;

  static Bindings from(const VectorTuple& t) {
    Bindings b;
    for (std::size_t i = 0; i < 5; ++i) b.v[i] = t.v[i];
    return b;
  }
  Bindings& bind(VectorSlot s, Tensor x) {
    v[static_cast<std::size_t>(s)] = std::move(x);
    return *this;
  }
};

inline Tensor evaluate(const Node& n, const PointData& d, const Bindings& b);

namespace detail {

inline std::vector<Tensor> flatten_call(const Node& call, const PointData& d, const Bindings& b, const Node*& root) {
  std::vector<const Node*> chain;
  const Node* c = &call;
  while (c->kind == NodeKind::call) {
    chain.push_back(c);
    c = c->children[0].get();
  }
  root = c;
  std::vector<Tensor> args;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it)
    for (std::size_t i = 1; i < (*it)->children.size(); ++i) args.push_back(evaluate(*(*it)->children[i], d, b));
  return args;
}

/// Derivative of a symbol along `dir`, then the remaining arguments.
inline Tensor evaluate_nabla(const Node& nabla, std::vector<Tensor> args, const PointData& d, const Bindings& b) {
  const Tensor& full = nabla.tilde ? d.nablat(nabla.symbol) : d.nabla(nabla.symbol);
  Tensor dir = evaluate(*nabla.children[0], d, b);
  const int q = symbol_valence(nabla.symbol).lower;
  if (static_cast<int>(args.size()) == q) {
    args.push_back(std::move(dir));
    return geomlab::apply(full, std::span<const Tensor>(args));
  }
  return geomlab::apply(insert_vector(full, q, dir), std::span<const Tensor>(args));
}

}  // namespace detail

inline Tensor evaluate(const Node& n, const PointData& d, const Bindings& b) {
  switch (n.kind) {
    case NodeKind::number: return Tensor::scalar(n.number, d.n);
    case NodeKind::slot: {
      const auto& v = b.v[static_cast<std::size_t>(n.slot)];
      if (!v) throw ArgumentError("evaluate: slot " + std::string(slot_name(n.slot)) + " is not bound");
      return *v;
    }
    case NodeKind::symbol: return d.value(n.symbol);
    case NodeKind::nabla: return detail::evaluate_nabla(n, {}, d, b);
    case NodeKind::call: {
      const Node* root = nullptr;
      std::vector<Tensor> args = detail::flatten_call(n, d, b, root);
      if (root->kind == NodeKind::nabla) return detail::evaluate_nabla(*root, std::move(args), d, b);
      return geomlab::apply(evaluate(*root, d, b), std::span<const Tensor>(args));
    }
    case NodeKind::negate: return -evaluate(*n.children[0], d, b);
    case NodeKind::add: return evaluate(*n.children[0], d, b) + evaluate(*n.children[1], d, b);
    case NodeKind::subtract: return evaluate(*n.children[0], d, b) - evaluate(*n.children[1], d, b);
    case NodeKind::multiply: {
      const Tensor l = evaluate(*n.children[0], d, b);
      const Tensor r = evaluate(*n.children[1], d, b);
      if (l.valence() == Valence{0, 0}) return scalar_value(l) * r;
      return l * scalar_value(r);
    }
  }
  throw ArgumentError("evaluate: unknown node");
}

/// Value of one side of an identity; a literal 0 side is the zero tensor of the identity's valence.
inline Tensor evaluate_side(const Node& side, Valence v, const PointData& d, const Bindings& b) {
  if (is_literal_zero(side)) return Tensor(v, d.n);
  return evaluate(side, d, b);
}

inline double identity_residual(const Identity& id, const PointData& d, const Bindings& b) {
  return normalized_residual(evaluate_side(*id.lhs, id.valence, d, b), evaluate_side(*id.rhs, id.valence, d, b));
}

}  // namespace geomlab::dsl
