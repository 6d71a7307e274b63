#pragma once

// Identity files: one "[tag] lhs = rhs" per line, '#' starts a comment.  Lines
// sharing a tag form one identity whose residual is the max over its lines.

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "geomlab/dsl/evaluate.hpp"
#include "geomlab/dsl/parser.hpp"
#include "geomlab/verifier/sample_set.hpp"

namespace geomlab::dsl {

struct CatalogLine {
  std::string tag;
  int line = 0;
  std::string text;
  Identity identity;
};

/// A parse failure inside a catalog file; `where` is "name:line:column".
class CatalogError : public ArgumentError {
 public:
  CatalogError(std::string where, std::string diagnostic)
      : ArgumentError(where + ": " + diagnostic), where_(std::move(where)), diagnostic_(std::move(diagnostic)) {}
  const std::string& where() const { return where_; }
  const std::string& diagnostic() const { return diagnostic_; }

 private:
  std::string where_;
  std::string diagnostic_;
};

inline std::vector<CatalogLine> parse_catalog(std::string_view text, const std::string& name = "<catalog>") {
  std::vector<CatalogLine> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto where = [&](std::size_t col) { return name + ":" + std::to_string(lineno) + ":" + std::to_string(col + 1); };
    if (line[first] != '[') throw CatalogError(where(first), "expected '[tag]' at the start of the line");
    const auto close = line.find(']', first);
    if (close == std::string::npos) throw CatalogError(where(first), "unterminated tag");
    std::string tag = line.substr(first + 1, close - first - 1);
    if (tag.empty() || tag.find_first_not_of("ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789_") != std::string::npos)
      throw CatalogError(where(first), "tag must be a non-empty identifier");
    const std::string body = line.substr(close + 1);
    try {
      out.push_back({std::move(tag), lineno, body, parse_identity(body)});
    } catch (const ParseError& e) {
      throw CatalogError(where(close + 1 + e.span().begin), format_diagnostic(body, e));
    }
  }
  return out;
}

inline std::vector<CatalogLine> load_catalog(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ArgumentError("cannot open identity file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_catalog(ss.str(), path);
}

/// Lines grouped by tag, in order of first appearance.
inline std::vector<std::pair<std::string, std::vector<CatalogLine>>> group_by_tag(const std::vector<CatalogLine>& lines) {
  std::vector<std::pair<std::string, std::vector<CatalogLine>>> out;
  for (const auto& l : lines) {
    auto it = std::find_if(out.begin(), out.end(), [&](const auto& g) { return g.first == l.tag; });
    if (it == out.end()) {
      out.push_back({l.tag, {}});
      it = std::prev(out.end());
    }
    it->second.push_back(l);
  }
  return out;
}

/// Max residual over the given lines at one point and tuple.
inline double lines_residual(const std::vector<CatalogLine>& lines, const PointData& d, const VectorTuple& t) {
  const Bindings b = Bindings::from(t);
  double r = 0.0;
  for (const auto& l : lines) r = std::max(r, identity_residual(l.identity, d, b));
  return r;
}

inline ResidualReport dsl_residual_report(std::string id, const std::vector<CatalogLine>& lines, const SampleSet& set,
                                          double tolerance) {
  return residual_report(std::move(id), set, tolerance,
                         [&lines](const PointData& d, const VectorTuple& t) { return lines_residual(lines, d, t); });
}

}  // namespace geomlab::dsl
