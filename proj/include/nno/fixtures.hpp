#pragma once

// Small named graphs used by tests, the acceptance run and the docs.
// Side A is listed first so vertex 0 always lands on side A.

#include "nno/graph.hpp"

namespace nno::fixtures {

namespace detail {

inline Graph named(std::vector<std::string> names, const std::vector<std::pair<std::string, std::string>>& edges) {
  auto id = [&](const std::string& s) {
    auto it = std::find(names.begin(), names.end(), s);
    if (it == names.end()) throw InputError("fixture refers to unknown vertex " + s);
    return static_cast<Vertex>(it - names.begin());
  };
  std::vector<Edge> es;
  for (const auto& [a, b] : edges) es.emplace_back(id(a), id(b));
  const int n = static_cast<int>(names.size());
  return Graph::from_edges(n, es, std::move(names));
}

inline std::vector<std::pair<std::string, std::string>> complete(const std::vector<std::string>& a,
                                                                 const std::vector<std::string>& b) {
  std::vector<std::pair<std::string, std::string>> es;
  for (const auto& x : a)
    for (const auto& y : b) es.emplace_back(x, y);
  return es;
}

}  // namespace detail

/// K_{3,3} on {x1,x2,x3} x {y1,y2,y3} plus u1 ~ {y1,y2} and v1 ~ {x1,x2}.
inline Graph ex1() {
  auto es = detail::complete({"x1", "x2", "x3"}, {"y1", "y2", "y3"});
  es.insert(es.end(), {{"u1", "y1"}, {"u1", "y2"}, {"v1", "x1"}, {"v1", "x2"}});
  return detail::named({"x1", "x2", "x3", "u1", "y1", "y2", "y3", "v1"}, es);
}

/// K_{2,2} on {x1,x2} x {y1,y2} plus u1 ~ y1 and u2 ~ y1.
inline Graph ex2() {
  auto es = detail::complete({"x1", "x2"}, {"y1", "y2"});
  es.insert(es.end(), {{"u1", "y1"}, {"u2", "y1"}});
  return detail::named({"x1", "x2", "u1", "u2", "y1", "y2"}, es);
}

/// K_{3,3} plus u1 ~ y1 and v1 ~ x1.
inline Graph ex6() {
  auto es = detail::complete({"x1", "x2", "x3"}, {"y1", "y2", "y3"});
  es.insert(es.end(), {{"u1", "y1"}, {"v1", "x1"}});
  return detail::named({"x1", "x2", "x3", "u1", "y1", "y2", "y3", "v1"}, es);
}

inline Graph complete_bipartite(int a, int b) {
  std::vector<Edge> es;
  for (int x = 0; x < a; ++x)
    for (int y = 0; y < b; ++y) es.emplace_back(x, a + y);
  return Graph::from_edges(a + b, es);
}

inline Graph path(int n) {
  std::vector<Edge> es;
  for (int v = 0; v + 1 < n; ++v) es.emplace_back(v, v + 1);
  return Graph::from_edges(n, es);
}

inline Graph cycle(int n) {
  std::vector<Edge> es;
  for (int v = 0; v < n; ++v) es.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, es);
}

inline Graph star(int leaves) { return complete_bipartite(1, leaves); }

/// Vertex ids for a list of fixture labels.
inline std::vector<Vertex> ids_of(const Graph& g, std::initializer_list<const char*> names) {
  std::vector<Vertex> out;
  for (const char* s : names) {
    auto v = g.find(s);
    if (!v) throw InputError(std::string("no vertex labelled ") + s);
    out.push_back(*v);
  }
  return out;
}

}  // namespace nno::fixtures
