#pragma once

#include <gtest/gtest.h>

#include "nno/nno.hpp"

namespace nno::testing {

inline std::vector<Vertex> L(const Graph& g, std::initializer_list<const char*> names) {
  return fixtures::ids_of(g, names);
}

/// Same cycle up to rotation and direction.
inline bool same_cycle(std::vector<Vertex> a, const std::vector<Vertex>& b) {
  if (a.size() != b.size()) return false;
  for (int dir = 0; dir < 2; ++dir) {
    for (std::size_t s = 0; s < a.size(); ++s) {
      std::rotate(a.begin(), a.begin() + 1, a.end());
      if (a == b) return true;
    }
    std::reverse(a.begin(), a.end());
  }
  return false;
}

/// Same path up to direction.
inline bool same_path(std::vector<Vertex> a, const std::vector<Vertex>& b) {
  if (a == b) return true;
  std::reverse(a.begin(), a.end());
  return a == b;
}

inline std::vector<Vertex> sorted(std::vector<Vertex> v) {
  std::sort(v.begin(), v.end());
  return v;
}

/// Every graph on n labelled vertices, as edge masks over the pairs (u < v).
template <class F>
void for_each_labelled_graph(int n, F&& f) {
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << pairs.size()); ++m) {
    std::vector<Edge> es;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (m >> k & 1u) es.push_back(pairs[k]);
    f(Graph::from_edges(n, es));
  }
}

}  // namespace nno::testing
