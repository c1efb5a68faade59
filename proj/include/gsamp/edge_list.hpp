#pragma once

#include <cctype>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "gsamp/errors.hpp"
#include "gsamp/graph.hpp"

namespace gsamp {

// Edge-list text format: one "u v" edge per line, '#' lines are comments,
// blank lines are skipped. Listing an edge twice (in either orientation)
// is a data bug and reported as such rather than collapsed.

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline NodeId parse_node_id(std::string_view token, std::size_t line_no) {
  std::uint64_t value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end)
    throw ParseError(line_no, "expected a nonnegative integer, got '" + std::string(token) + "'");
  if (value >= std::numeric_limits<NodeId>::max())  // id+1 must stay representable
    throw ParseError(line_no, "node id " + std::to_string(value) + " out of range");
  return static_cast<NodeId>(value);
}

}  // namespace detail

inline Graph load_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  std::set<Edge> seen;
  NodeId max_id = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view body = detail::trim(line);
    if (body.empty() || body.front() == '#') continue;
    std::string_view rest = body;
    std::vector<std::string_view> tokens;
    while (!rest.empty()) {
      std::size_t cut = 0;
      while (cut < rest.size() && !std::isspace(static_cast<unsigned char>(rest[cut]))) ++cut;
      tokens.push_back(rest.substr(0, cut));
      rest = detail::trim(rest.substr(cut));
    }
    if (tokens.size() != 2)
      throw ParseError(line_no, "expected two node ids, got " + std::to_string(tokens.size()) + " tokens");
    const NodeId u = detail::parse_node_id(tokens[0], line_no);
    const NodeId v = detail::parse_node_id(tokens[1], line_no);
    if (u == v)
      throw ValidationError(ValidationKind::SelfLoop,
                            "line " + std::to_string(line_no) + ": self-loop at node " + std::to_string(u));
    const Edge e = ordered(u, v);
    if (!seen.insert(e).second)
      throw ValidationError(ValidationKind::DuplicateEdge,
                            "line " + std::to_string(line_no) + ": edge " + std::to_string(u) + "-" +
                                std::to_string(v) + " listed twice");
    edges.push_back(e);
    max_id = std::max(max_id, std::max(u, v));
  }
  const NodeId node_count = edges.empty() ? 0 : max_id + 1;
  return Graph::from_edges(node_count, edges);
}

inline Graph load_edge_list_text(const std::string& text) {
  std::istringstream in(text);
  return load_edge_list(in);
}

inline Graph load_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open edge list file: " + path);
  return load_edge_list(in);
}

// Canonical serialization: one "u v" line per edge with u < v, lines in
// ascending (u, v) order. Determinism checks compare these bytes.
inline void serialize_edge_list(const Graph& graph, std::ostream& out) {
  for (NodeId u = 0; u < graph.node_count(); ++u)
    for (NodeId v : graph.neighbors(u))
      if (u < v) out << u << ' ' << v << '\n';
}

// Same canonical form, but each line carries the source ids of the sample.
// The id map is ascending, so emission order stays canonical.
inline void serialize_edge_list(const SampledGraph& sampled, std::ostream& out) {
  const Graph& g = sampled.graph;
  for (NodeId u = 0; u < g.node_count(); ++u)
    for (NodeId v : g.neighbors(u))
      if (u < v) out << sampled.to_original(u) << ' ' << sampled.to_original(v) << '\n';
}

template <typename GraphLike>
std::string serialize_edge_list(const GraphLike& graph) {
  std::ostringstream out;
  serialize_edge_list(graph, out);
  return out.str();
}

inline void write_edge_list_file(const SampledGraph& sampled, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ArgumentError("cannot open output file: " + path);
  serialize_edge_list(sampled, out);
}

inline void write_edge_list_file(const Graph& graph, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ArgumentError("cannot open output file: " + path);
  serialize_edge_list(graph, out);
}

}  // namespace gsamp
