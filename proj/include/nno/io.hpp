#pragma once

// Graph file formats.
//
// Edge list (1-based):
//   # comment
//   p <n> <m>
//   e <u> <v>        (m lines)
// The header may be omitted, in which case n is the largest id seen.
//
// Adjacency JSON (1-based):
//   {"n": 4, "adjacency": [[3,4],[3,4],[1,2],[1,2]], "labels": ["a","b","c","d"]}
// "labels" is optional; adjacency must be symmetric.

#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

#include "nno/graph.hpp"

namespace nno {

enum class GraphFormat { edge_list, adjacency_json };

namespace detail {

inline InputError line_error(int line, const std::string& what) {
  return InputError("line " + std::to_string(line) + ": " + what);
}

inline long parse_int(const std::string& tok, int line) {
  std::size_t used = 0;
  long value = 0;
  try {
    value = std::stol(tok, &used);
  } catch (const std::exception&) {
    throw line_error(line, "expected integer, got '" + tok + "'");
  }
  if (used != tok.size()) throw line_error(line, "expected integer, got '" + tok + "'");
  return value;
}

inline Graph parse_edge_list(std::istream& in) {
  std::string raw;
  int line = 0;
  long n = -1, m = -1;
  long max_id = 0;
  std::vector<Edge> edges;
  std::vector<int> edge_line;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::string tag;
    if (!(ls >> tag)) continue;
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (tag == "p") {
      if (n >= 0) throw line_error(line, "duplicate header");
      if (!edges.empty()) throw line_error(line, "header after edges");
      if (toks.size() != 2) throw line_error(line, "header must be 'p <n> <m>'");
      n = parse_int(toks[0], line);
      m = parse_int(toks[1], line);
      if (n < 0 || m < 0) throw line_error(line, "negative count in header");
    } else if (tag == "e") {
      if (toks.size() != 2) throw line_error(line, "edge must be 'e <u> <v>'");
      long u = parse_int(toks[0], line), v = parse_int(toks[1], line);
      if (u == v) throw line_error(line, "loop at vertex " + std::to_string(u));
      if (u < 1 || v < 1 || (n >= 0 && (u > n || v > n)))
        throw line_error(line, "vertex index out of range");
      max_id = std::max({max_id, u, v});
      edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
      edge_line.push_back(line);
    } else {
      throw line_error(line, "unknown line tag '" + tag + "'");
    }
  }
  if (n < 0) n = max_id;
  if (m >= 0 && static_cast<long>(edges.size()) != m)
    throw InputError("header announces " + std::to_string(m) + " edges, found " +
                     std::to_string(edges.size()));
  std::set<Edge> seen;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    auto [u, v] = edges[k];
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second)
      throw line_error(edge_line[k], "duplicate edge " + std::to_string(u + 1) + " " +
                                         std::to_string(v + 1));
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

inline Graph parse_adjacency_json(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("json: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("adjacency") || !doc["adjacency"].is_array())
    throw InputError("json: expected object with an 'adjacency' array");
  const auto& adj = doc["adjacency"];
  long n = doc.contains("n") ? doc["n"].get<long>() : static_cast<long>(adj.size());
  if (n != static_cast<long>(adj.size()))
    throw InputError("json: 'n' does not match adjacency length");
  std::set<Edge> directed;
  for (long u = 0; u < n; ++u) {
    if (!adj[u].is_array()) throw InputError("json: adjacency entry " + std::to_string(u + 1) + " is not a list");
    for (const auto& x : adj[u]) {
      if (!x.is_number_integer()) throw InputError("json: non-integer neighbour");
      long v = x.get<long>();
      if (v < 1 || v > n) throw InputError("json: vertex index out of range");
      if (v - 1 == u) throw InputError("json: loop at vertex " + std::to_string(u + 1));
      if (!directed.insert({static_cast<Vertex>(u), static_cast<Vertex>(v - 1)}).second)
        throw InputError("json: duplicate edge " + std::to_string(u + 1) + " " + std::to_string(v));
    }
  }
  std::vector<Edge> edges;
  for (auto [u, v] : directed) {
    if (!directed.count({v, u}))
      throw InputError("json: adjacency not symmetric at " + std::to_string(u + 1) + "-" +
                       std::to_string(v + 1));
    if (u < v) edges.emplace_back(u, v);
  }
  std::vector<std::string> labels;
  if (doc.contains("labels")) labels = doc["labels"].get<std::vector<std::string>>();
  return Graph::from_edges(static_cast<int>(n), edges, std::move(labels));
}

}  // namespace detail

inline Graph parse_graph(std::istream& in, GraphFormat format = GraphFormat::edge_list) {
  return format == GraphFormat::edge_list ? detail::parse_edge_list(in)
                                          : detail::parse_adjacency_json(in);
}

inline Graph parse_graph(const std::string& text, GraphFormat format = GraphFormat::edge_list) {
  std::istringstream in(text);
  return parse_graph(in, format);
}

/// Edge list in normalized form: header, then edges sorted by (u, v), u < v.
inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << "p " << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

inline std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

inline nlohmann::json to_adjacency_json(const Graph& g) {
  nlohmann::json adj = nlohmann::json::array();
  for (Vertex v = 0; v < g.order(); ++v) {
    nlohmann::json row = nlohmann::json::array();
    for (Vertex w : g.neighbors(v)) row.push_back(w + 1);
    adj.push_back(row);
  }
  nlohmann::json doc{{"n", g.order()}, {"adjacency", adj}};
  if (g.has_labels()) doc["labels"] = g.labels();
  return doc;
}

/// 1-based ids for external output.
inline nlohmann::json ids(std::span<const Vertex> vs) {
  nlohmann::json a = nlohmann::json::array();
  for (Vertex v : vs) a.push_back(v + 1);
  return a;
}

inline nlohmann::json to_json(const Verdict& v, const std::string& kind) {
  nlohmann::json j{{"kind", kind}, {"valid", v.valid}};
  if (!v.valid) j["violation"] = v.violation;
  return j;
}

inline nlohmann::json to_json(const CutCertificate& c) {
  return {{"separator", ids(c.separator)},
          {"claimedComponents", c.claimed_components},
          {"mode", c.mode == CutMode::cycle_bound ? "cycle-bound" : "path-bound"}};
}

}  // namespace nno
