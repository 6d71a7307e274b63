#pragma once

// Syntax tree of the identity language.  Nodes are immutable and shared; every
// node carries its source span and its valence, fixed at parse time.

#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "geomlab/ssmc/point_data.hpp"

namespace geomlab::dsl {

/// Byte offsets [begin, end) into the source text.
struct SourceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
};

enum class VectorSlot { X, Y, Z, W, U };

inline constexpr std::array<VectorSlot, 5> all_slots() {
  return {VectorSlot::X, VectorSlot::Y, VectorSlot::Z, VectorSlot::W, VectorSlot::U};
}

inline std::string_view slot_name(VectorSlot s) {
  static constexpr std::array<std::string_view, 5> names = {"X", "Y", "Z", "W", "U"};
  return names[static_cast<std::size_t>(s)];
}

inline std::optional<VectorSlot> parse_slot(std::string_view s) {
  for (VectorSlot v : all_slots())
    if (slot_name(v) == s) return v;
  return std::nullopt;
}

enum class NodeKind { number, slot, symbol, call, nabla, negate, add, subtract, multiply };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
  friend bool operator==(const Rational&, const Rational&) = default;
};

struct Node {
  NodeKind kind = NodeKind::number;
  SourceSpan span;
  Valence valence;
  double number = 0.0;              // number
  std::optional<Rational> rational; // number written as INT/INT
  VectorSlot slot = VectorSlot::X;  // slot
  Symbol symbol = Symbol::g;        // symbol, nabla target
  bool tilde = false;               // nabla: semi-symmetric connection
  // call: callee then arguments; nabla: direction; negate: operand; binary: lhs, rhs
  std::vector<NodePtr> children;
};

/// Identity "lhs = rhs".  A side written as the literal 0 takes the valence of the other side.
struct Identity {
  NodePtr lhs;
  NodePtr rhs;
  Valence valence;
  SourceSpan span;
};

inline bool is_literal_zero(const Node& n) { return n.kind == NodeKind::number && !n.rational && n.number == 0.0; }

/// Equality of tree shape and content; spans are ignored.
inline bool structurally_equal(const Node& a, const Node& b) {
  if (a.kind != b.kind || !(a.valence == b.valence) || a.children.size() != b.children.size()) return false;
  switch (a.kind) {
    case NodeKind::number:
      if (a.rational != b.rational || a.number != b.number) return false;
      break;
    case NodeKind::slot:
      if (a.slot != b.slot) return false;
      break;
    case NodeKind::symbol:
      if (a.symbol != b.symbol) return false;
      break;
    case NodeKind::nabla:
      if (a.symbol != b.symbol || a.tilde != b.tilde) return false;
      break;
    default:
      break;
  }
  for (std::size_t i = 0; i < a.children.size(); ++i)
    if (!structurally_equal(*a.children[i], *b.children[i])) return false;
  return true;
}

inline bool structurally_equal(const Identity& a, const Identity& b) {
  return structurally_equal(*a.lhs, *b.lhs) && structurally_equal(*a.rhs, *b.rhs);
}

// ---------------------------------------------------------------------------
// Canonical text

namespace detail {

inline int precedence(const Node& n) {
  switch (n.kind) {
    case NodeKind::add:
    case NodeKind::subtract: return 1;
    case NodeKind::multiply: return 2;
    case NodeKind::negate: return 3;
    default: return 4;
  }
}

inline std::string format_number(double v) {
  if (std::isfinite(v) && v == std::floor(v) && std::fabs(v) < 1e15) return std::to_string(static_cast<std::int64_t>(v));
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  std::string s(buf.data(), res.ptr);
  if (s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

inline void unparse_into(const Node& n, std::string& out);

inline void unparse_child(const Node& c, bool parens, std::string& out) {
  if (parens) out += '(';
  unparse_into(c, out);
  if (parens) out += ')';
}

inline void unparse_args(const Node& n, std::size_t first, std::string& out) {
  out += '(';
  for (std::size_t i = first; i < n.children.size(); ++i) {
    if (i > first) out += ", ";
    unparse_into(*n.children[i], out);
  }
  out += ')';
}

inline void unparse_into(const Node& n, std::string& out) {
  switch (n.kind) {
    case NodeKind::number:
      if (n.rational)
        out += std::to_string(n.rational->num) + "/" + std::to_string(n.rational->den);
      else
        out += format_number(n.number);
      return;
    case NodeKind::slot: out += slot_name(n.slot); return;
    case NodeKind::symbol: out += symbol_name(n.symbol); return;
    case NodeKind::call:
      unparse_into(*n.children[0], out);
      unparse_args(n, 1, out);
      return;
    case NodeKind::nabla:
      out += n.tilde ? "nablat[" : "nabla[";
      unparse_into(*n.children[0], out);
      out += "](";
      out += symbol_name(n.symbol);
      out += ')';
      return;
    case NodeKind::negate:
      out += '-';
      unparse_child(*n.children[0], precedence(*n.children[0]) < 3, out);
      return;
    case NodeKind::add:
    case NodeKind::subtract:
    case NodeKind::multiply: {
      const int p = precedence(n);
      unparse_child(*n.children[0], precedence(*n.children[0]) < p, out);
      out += n.kind == NodeKind::add ? " + " : n.kind == NodeKind::subtract ? " - " : " * ";
      unparse_child(*n.children[1], precedence(*n.children[1]) <= p, out);
      return;
    }
  }
}

}  // namespace detail

/// Canonical text: ", " between arguments, spaced binary operators, only the
/// parentheses the tree needs.
inline std::string unparse(const Node& n) {
  std::string out;
  detail::unparse_into(n, out);
  return out;
}

inline std::string unparse(const Identity& id) { return unparse(*id.lhs) + " = " + unparse(*id.rhs); }

}  // namespace geomlab::dsl
