#pragma once

// Lexer and recursive-descent parser for the identity language.  Type checking
// happens while the tree is built, so every accepted tree is well typed.
//
//   identity    := expr "=" expr
//   expr        := term (("+"|"-") term)*
//   term        := factor ("*" factor)*
//   factor      := number | rational | "-" factor | "(" expr ")" | primary call*
//   primary     := symbol | slot | nabla
//   nabla       := ("nabla"|"nablat") "[" expr "]" "(" symbol ")"
//   call        := "(" expr ("," expr)* ")"
//
// Extensions: call suffixes may repeat (R(X,Y)(W)), the
// argument list after a nabla is optional, and a side of an identity that is
// the literal 0 takes the valence of the other side.

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "geomlab/dsl/ast.hpp"
#include "geomlab/error.hpp"

namespace geomlab::dsl {

inline constexpr int kMaxNestingDepth = 256;

class ParseError : public ArgumentError {
 public:
  ParseError(std::string message, SourceSpan span)
      : ArgumentError(message), message_(std::move(message)), span_(span) {}
  const std::string& message() const { return message_; }
  SourceSpan span() const { return span_; }

 private:
  std::string message_;
  SourceSpan span_;
};

/// "error at offset B: message", the source line and a caret row under the span.
inline std::string format_diagnostic(std::string_view src, const ParseError& e) {
  const SourceSpan s = e.span();
  const std::size_t b = std::min(s.begin, src.size());
  const std::size_t nl = b == 0 ? std::string_view::npos : src.rfind('\n', b - 1);
  const std::size_t line_start = nl == std::string_view::npos ? 0 : nl + 1;
  std::size_t line_end = src.find('\n', b);
  if (line_end == std::string_view::npos) line_end = src.size();
  const std::size_t width = std::max<std::size_t>(1, std::min(s.end, line_end) > b ? std::min(s.end, line_end) - b : 1);
  std::string out = "error at offset " + std::to_string(b) + ": " + e.message() + "\n  ";
  out += src.substr(line_start, line_end - line_start);
  out += "\n  " + std::string(b - line_start, ' ') + std::string(width, '^') + "\n";
  return out;
}

enum class TokenKind { identifier, integer, decimal, rational, lparen, rparen, lbracket, rbracket, comma, plus, minus, star, equals, end };

struct Token {
  TokenKind kind = TokenKind::end;
  SourceSpan span;
  std::string_view text;
  double value = 0.0;
  Rational rational;
};

inline std::string_view token_description(TokenKind k) {
  switch (k) {
    case TokenKind::identifier: return "identifier";
    case TokenKind::integer:
    case TokenKind::decimal:
    case TokenKind::rational: return "number";
    case TokenKind::lparen: return "'('";
    case TokenKind::rparen: return "')'";
    case TokenKind::lbracket: return "'['";
    case TokenKind::rbracket: return "']'";
    case TokenKind::comma: return "','";
    case TokenKind::plus: return "'+'";
    case TokenKind::minus: return "'-'";
    case TokenKind::star: return "'*'";
    case TokenKind::equals: return "'='";
    default: return "end of input";
  }
}

inline std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto is_digit = [](char c) { return c >= '0' && c <= '9'; };
  auto is_alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
  auto digits = [&](std::size_t j) {
    while (j < src.size() && is_digit(src[j])) ++j;
    return j;
  };
  while (i < src.size()) {
    const char c = src[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    Token t;
    t.span.begin = i;
    if (is_alpha(c)) {
      std::size_t j = i;
      while (j < src.size() && (is_alpha(src[j]) || is_digit(src[j]))) ++j;
      t.kind = TokenKind::identifier;
      i = j;
    } else if (is_digit(c) || (c == '.' && i + 1 < src.size() && is_digit(src[i + 1]))) {
      std::size_t j = digits(i);
      bool decimal = false;
      if (j < src.size() && src[j] == '.') {
        decimal = true;
        j = digits(j + 1);
      }
      if (j < src.size() && (src[j] == 'e' || src[j] == 'E')) {
        std::size_t k = j + 1;
        if (k < src.size() && (src[k] == '+' || src[k] == '-')) ++k;
        if (k < src.size() && is_digit(src[k])) {
          decimal = true;
          j = digits(k);
        }
      }
      if (!decimal && j + 1 < src.size() && src[j] == '/' && is_digit(src[j + 1])) {
        const std::size_t k = digits(j + 1);
        Rational r;
        const auto r1 = std::from_chars(src.data() + i, src.data() + j, r.num);
        const auto r2 = std::from_chars(src.data() + j + 1, src.data() + k, r.den);
        if (r1.ec != std::errc() || r2.ec != std::errc()) throw ParseError("rational out of range", {i, k});
        if (r.den == 0) throw ParseError("zero denominator", {j + 1, k});
        t.kind = TokenKind::rational;
        t.rational = r;
        t.value = static_cast<double>(r.num) / static_cast<double>(r.den);
        i = k;
      } else {
        const auto res = std::from_chars(src.data() + i, src.data() + j, t.value);
        if (res.ec != std::errc() || !std::isfinite(t.value)) throw ParseError("number out of range", {i, j});
        t.kind = decimal ? TokenKind::decimal : TokenKind::integer;
        i = j;
      }
    } else {
      switch (c) {
        case '(': t.kind = TokenKind::lparen; break;
        case ')': t.kind = TokenKind::rparen; break;
        case '[': t.kind = TokenKind::lbracket; break;
        case ']': t.kind = TokenKind::rbracket; break;
        case ',': t.kind = TokenKind::comma; break;
        case '+': t.kind = TokenKind::plus; break;
        case '-': t.kind = TokenKind::minus; break;
        case '*': t.kind = TokenKind::star; break;
        case '=': t.kind = TokenKind::equals; break;
        default: {
          const auto byte = static_cast<unsigned char>(c);
          std::string shown = byte >= 0x20 && byte < 0x7f ? std::string("'") + c + "'" : "byte " + std::to_string(byte);
          throw ParseError("unexpected character " + shown, {i, i + 1});
        }
      }
      ++i;
    }
    t.span.end = i;
    t.text = src.substr(t.span.begin, t.span.end - t.span.begin);
    out.push_back(t);
  }
  Token end;
  end.span = {src.size(), src.size()};
  out.push_back(end);
  return out;
}

namespace detail {

class Parser {
 public:
  explicit Parser(std::string_view src) : tokens_(tokenize(src)) {}

  Identity identity() {
    if (peek().kind == TokenKind::end) throw ParseError("empty input", peek().span);
    Identity id;
    id.lhs = expr();
    expect(TokenKind::equals, "expected '='");
    id.rhs = expr();
    expect_end();
    const bool lz = is_literal_zero(*id.lhs), rz = is_literal_zero(*id.rhs);
    if (lz && !rz) id.lhs = with_valence(id.lhs, id.rhs->valence);
    if (rz && !lz) id.rhs = with_valence(id.rhs, id.lhs->valence);
    if (!(id.lhs->valence == id.rhs->valence))
      throw ParseError("valence mismatch: left side is " + to_string(id.lhs->valence) + ", right side is " +
                           to_string(id.rhs->valence),
                       {id.lhs->span.begin, id.rhs->span.end});
    id.valence = id.lhs->valence;
    id.span = {id.lhs->span.begin, id.rhs->span.end};
    return id;
  }

  NodePtr expression() {
    if (peek().kind == TokenKind::end) throw ParseError("empty input", peek().span);
    NodePtr e = expr();
    expect_end();
    return e;
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  int depth_ = 0;

  struct DepthGuard {
    Parser& p;
    DepthGuard(Parser& parser, SourceSpan at) : p(parser) {
      if (++p.depth_ > kMaxNestingDepth) throw ParseError("nesting deeper than " + std::to_string(kMaxNestingDepth), at);
    }
    ~DepthGuard() { --p.depth_; }
  };

  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

  const Token& expect(TokenKind k, const std::string& message) {
    if (peek().kind != k) throw ParseError(message + ", found " + describe(peek()), peek().span);
    return advance();
  }

  void expect_end() {
    if (peek().kind != TokenKind::end) throw ParseError("unexpected " + describe(peek()), peek().span);
  }

  static std::string describe(const Token& t) {
    if (t.kind == TokenKind::end) return "end of input";
    return std::string(token_description(t.kind)) + (t.kind == TokenKind::identifier || t.kind == TokenKind::integer ||
                                                              t.kind == TokenKind::decimal || t.kind == TokenKind::rational
                                                          ? " '" + std::string(t.text) + "'"
                                                          : "");
  }

  static NodePtr with_valence(const NodePtr& n, Valence v) {
    auto c = std::make_shared<Node>(*n);
    c->valence = v;
    return c;
  }

  static bool is_scalar(const Node& n) { return n.valence == Valence{0, 0}; }
  static bool is_vector(const Node& n) { return n.valence == Valence{1, 0}; }

  NodePtr binary(NodeKind k, NodePtr l, NodePtr r, const Token& op) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->span = {l->span.begin, r->span.end};
    if (k == NodeKind::multiply) {
      if (!is_scalar(*l) && !is_scalar(*r))
        throw ParseError("'*' needs a scalar factor, got " + to_string(l->valence) + " and " + to_string(r->valence), n->span);
      n->valence = is_scalar(*l) ? r->valence : l->valence;
    } else {
      if (!(l->valence == r->valence))
        throw ParseError("valence mismatch in '" + std::string(op.text) + "': " + to_string(l->valence) + " and " +
                             to_string(r->valence),
                         n->span);
      n->valence = l->valence;
    }
    n->children = {std::move(l), std::move(r)};
    return n;
  }

  NodePtr expr() {
    NodePtr l = term();
    while (peek().kind == TokenKind::plus || peek().kind == TokenKind::minus) {
      const Token& op = advance();
      NodePtr r = term();
      l = binary(op.kind == TokenKind::plus ? NodeKind::add : NodeKind::subtract, std::move(l), std::move(r), op);
    }
    return l;
  }

  NodePtr term() {
    NodePtr l = factor();
    while (peek().kind == TokenKind::star) {
      const Token& op = advance();
      NodePtr r = factor();
      l = binary(NodeKind::multiply, std::move(l), std::move(r), op);
    }
    return l;
  }

  NodePtr factor() {
    DepthGuard guard(*this, peek().span);
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::integer:
      case TokenKind::decimal:
      case TokenKind::rational: {
        advance();
        auto n = std::make_shared<Node>();
        n->kind = NodeKind::number;
        n->span = t.span;
        n->number = t.value;
        if (t.kind == TokenKind::rational) n->rational = t.rational;
        return n;
      }
      case TokenKind::minus: {
        advance();
        NodePtr operand = factor();
        auto n = std::make_shared<Node>();
        n->kind = NodeKind::negate;
        n->span = {t.span.begin, operand->span.end};
        n->valence = operand->valence;
        n->children = {std::move(operand)};
        return n;
      }
      case TokenKind::lparen: {
        advance();
        NodePtr inner = expr();
        expect(TokenKind::rparen, "expected ')'");
        return inner;
      }
      case TokenKind::identifier:
        return calls(primary());
      default:
        throw ParseError("expected an operand, found " + describe(t), t.span);
    }
  }

  NodePtr primary() {
    const Token& t = advance();
    if (t.text == "nabla" || t.text == "nablat") {
      expect(TokenKind::lbracket, "expected '[' after " + std::string(t.text));
      NodePtr dir = expr();
      if (!is_vector(*dir)) throw ParseError("derivative direction must be a vector, got " + to_string(dir->valence), dir->span);
      expect(TokenKind::rbracket, "expected ']'");
      expect(TokenKind::lparen, "expected '(' before the differentiated symbol");
      const Token& s = expect(TokenKind::identifier, "expected a structure symbol");
      const auto sym = parse_symbol(s.text);
      if (!sym) throw ParseError("unknown structure symbol '" + std::string(s.text) + "'", s.span);
      const Token& close = expect(TokenKind::rparen, "expected ')'");
      auto n = std::make_shared<Node>();
      n->kind = NodeKind::nabla;
      n->tilde = t.text == "nablat";
      n->symbol = *sym;
      n->valence = symbol_valence(*sym);  // direction already bound
      n->span = {t.span.begin, close.span.end};
      n->children = {std::move(dir)};
      return n;
    }
    auto n = std::make_shared<Node>();
    n->span = t.span;
    if (const auto slot = parse_slot(t.text)) {
      n->kind = NodeKind::slot;
      n->slot = *slot;
      n->valence = {1, 0};
    } else if (const auto sym = parse_symbol(t.text)) {
      n->kind = NodeKind::symbol;
      n->symbol = *sym;
      n->valence = symbol_valence(*sym);
    } else {
      throw ParseError("unknown symbol '" + std::string(t.text) + "'", t.span);
    }
    return n;
  }

  NodePtr calls(NodePtr callee) {
    while (peek().kind == TokenKind::lparen) {
      const Token& open = advance();
      auto n = std::make_shared<Node>();
      n->kind = NodeKind::call;
      n->children.push_back(callee);
      for (;;) {
        n->children.push_back(expr());
        if (peek().kind == TokenKind::comma) {
          advance();
          continue;
        }
        break;
      }
      const Token& close = expect(TokenKind::rparen, "expected ',' or ')'");
      n->span = {callee->span.begin, close.span.end};
      const int k = static_cast<int>(n->children.size()) - 1;
      const Valence v = callee->valence;
      if (v.lower == 0)
        throw ParseError("'" + unparse(*callee) + "' takes no arguments", {open.span.begin, close.span.end});
      if (k > v.lower)
        throw ParseError("too many arguments: '" + unparse(*callee) + "' takes at most " + std::to_string(v.lower),
                         {open.span.begin, close.span.end});
      for (std::size_t i = 1; i < n->children.size(); ++i)
        if (!is_vector(*n->children[i]))
          throw ParseError("argument must be a vector, got " + to_string(n->children[i]->valence), n->children[i]->span);
      n->valence = {v.upper, v.lower - k};
      callee = std::move(n);
    }
    return callee;
  }
};

}  // namespace detail

inline Identity parse_identity(std::string_view src) { return detail::Parser(src).identity(); }

inline NodePtr parse_expression(std::string_view src) { return detail::Parser(src).expression(); }

}  // namespace geomlab::dsl
