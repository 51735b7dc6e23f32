#pragma once

// Core graph representation and the validators for every certificate kind
// the other modules emit (paths, cycles, cut certificates, spanning trees).

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nno/errors.hpp"

namespace nno {

/// Dense vertex index, 0-based internally. Files and CLI output are 1-based.
using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple graph with sorted adjacency lists and an optional
/// label per vertex. Immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph on `n` vertices; throws InputError on loops,
  /// duplicate edges or out-of-range endpoints.
  static Graph from_edges(int n, std::span<const Edge> edges,
                          std::vector<std::string> labels = {}) {
    if (n < 0) throw InputError("negative vertex count");
    Graph g;
    g.adj_.assign(static_cast<std::size_t>(n), {});
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw InputError("vertex index out of range in edge (" + std::to_string(u + 1) + "," +
                         std::to_string(v + 1) + ")");
      if (u == v) throw InputError("loop at vertex " + std::to_string(u + 1));
      g.adj_[u].push_back(v);
      g.adj_[v].push_back(u);
    }
    for (std::size_t v = 0; v < g.adj_.size(); ++v) {
      auto& a = g.adj_[v];
      std::sort(a.begin(), a.end());
      if (std::adjacent_find(a.begin(), a.end()) != a.end())
        throw InputError("duplicate edge at vertex " + std::to_string(v + 1));
    }
    g.m_ = edges.size();
    if (!labels.empty() && labels.size() != static_cast<std::size_t>(n))
      throw InputError("label table size does not match vertex count");
    g.labels_ = std::move(labels);
    return g;
  }

  int order() const { return static_cast<int>(adj_.size()); }
  std::size_t size() const { return m_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

  bool adjacent(Vertex u, Vertex v) const {
    const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    Vertex other = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(a.begin(), a.end(), other);
  }

  bool has_labels() const { return !labels_.empty(); }
  std::string label(Vertex v) const {
    return labels_.empty() ? std::to_string(v + 1) : labels_[v];
  }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Looks a vertex up by label; returns nullopt if absent.
  std::optional<Vertex> find(const std::string& name) const {
    for (Vertex v = 0; v < order(); ++v)
      if (label(v) == name) return v;
    return std::nullopt;
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < order(); ++u)
      for (Vertex v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  /// Subgraph induced on `keep`; vertex k of the result is keep[k].
  Graph induced(std::span<const Vertex> keep) const {
    std::vector<int> index(adj_.size(), -1);
    for (std::size_t k = 0; k < keep.size(); ++k) index[keep[k]] = static_cast<int>(k);
    std::vector<Edge> es;
    std::vector<std::string> labs;
    for (std::size_t k = 0; k < keep.size(); ++k) {
      if (has_labels()) labs.push_back(labels_[keep[k]]);
      for (Vertex w : adj_[keep[k]])
        if (index[w] > static_cast<int>(k)) es.emplace_back(static_cast<Vertex>(k), index[w]);
    }
    return from_edges(static_cast<int>(keep.size()), es, std::move(labs));
  }

  /// Graph with vertex v renamed to perm[v]; labels travel with vertices.
  Graph relabeled(std::span<const Vertex> perm) const {
    std::vector<Edge> es;
    for (auto [u, v] : edges()) es.emplace_back(perm[u], perm[v]);
    std::vector<std::string> labs;
    if (has_labels()) {
      labs.resize(labels_.size());
      for (std::size_t v = 0; v < labels_.size(); ++v) labs[perm[v]] = labels_[v];
    }
    return from_edges(order(), es, std::move(labs));
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t m_ = 0;
  std::vector<std::string> labels_;
};

/// Two-colouring of a bipartite graph. side_of[v] is 0 for A, 1 for B.
struct Bipartition {
  std::vector<Vertex> side_a;
  std::vector<Vertex> side_b;
  std::vector<int> side_of;

  Bipartition swapped() const {
    Bipartition s{side_b, side_a, side_of};
    for (auto& c : s.side_of) c = 1 - c;
    return s;
  }
};

enum class SequenceKind { path, cycle };

struct VertexSequence {
  std::vector<Vertex> seq;
  SequenceKind kind = SequenceKind::path;

  std::size_t length() const { return seq.size(); }
  bool empty() const { return seq.empty(); }
};

enum class CutMode { cycle_bound, path_bound };

/// Chvatal-type witness: removing `separator` leaves more components than
/// a Hamiltonian cycle (or path) can tolerate.
struct CutCertificate {
  std::vector<Vertex> separator;
  int claimed_components = 0;
  CutMode mode = CutMode::cycle_bound;
};

/// parent[root] == -1.
struct SpanningTree {
  std::vector<Vertex> parent;
  Vertex root = -1;
  int leaf_count = 0;
};

/// Outcome of a validator: `violation` names the first failed check.
struct Verdict {
  bool valid = true;
  std::string violation;

  static Verdict ok() { return {}; }
  static Verdict fail(std::string why) { return {false, std::move(why)}; }
  explicit operator bool() const { return valid; }
};

struct Components {
  int count = 0;
  std::vector<int> label;  // -1 for removed vertices
};

/// Connected components of g - removed.
inline Components connected_components(const Graph& g, std::span<const Vertex> removed = {}) {
  Components c;
  c.label.assign(static_cast<std::size_t>(g.order()), -2);
  for (Vertex v : removed) c.label[v] = -1;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (c.label[s] != -2) continue;
    c.label[s] = c.count;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u))
        if (c.label[w] == -2) {
          c.label[w] = c.count;
          stack.push_back(w);
        }
    }
    ++c.count;
  }
  return c;
}

inline bool is_connected(const Graph& g) { return connected_components(g).count <= 1; }

/// Checks distinctness and adjacency of `s` in `g`; a cycle needs at least
/// four vertices and a closing edge. With `required`, every listed vertex
/// must appear in the sequence.
inline Verdict validate_sequence(const Graph& g, const VertexSequence& s,
                                 std::optional<std::span<const Vertex>> required = std::nullopt) {
  const auto& q = s.seq;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  for (std::size_t k = 0; k < q.size(); ++k) {
    Vertex v = q[k];
    if (v < 0 || v >= g.order())
      return Verdict::fail("vertex " + std::to_string(v + 1) + " is not in the graph");
    if (seen[v]) return Verdict::fail("vertex " + g.label(v) + " repeated");
    seen[v] = 1;
    if (k > 0 && !g.adjacent(q[k - 1], v))
      return Verdict::fail("non-edge " + g.label(q[k - 1]) + "-" + g.label(v) + " at position " +
                           std::to_string(k));
  }
  if (s.kind == SequenceKind::cycle) {
    if (q.size() < 3) return Verdict::fail("cycle shorter than 3 vertices");
    if (!g.adjacent(q.back(), q.front()))
      return Verdict::fail("closing non-edge " + g.label(q.back()) + "-" + g.label(q.front()));
  }
  if (required)
    for (Vertex v : *required)
      if (v < 0 || v >= g.order() || !seen[v])
        return Verdict::fail("required vertex " + std::to_string(v + 1) + " not covered");
  return Verdict::ok();
}

inline Verdict validate_hamiltonian(const Graph& g, const VertexSequence& s) {
  if (s.length() != static_cast<std::size_t>(g.order()))
    return Verdict::fail("sequence has " + std::to_string(s.length()) + " of " +
                         std::to_string(g.order()) + " vertices");
  return validate_sequence(g, s);
}

/// Recomputes c(G - S) and checks the claimed count and the strict bound of
/// the certificate's mode. S must be a nonempty proper subset.
inline Verdict validate_cut(const Graph& g, const CutCertificate& c) {
  const auto& sep = c.separator;
  if (sep.empty()) return Verdict::fail("empty separator");
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : sep) {
    if (v < 0 || v >= g.order()) return Verdict::fail("separator vertex out of range");
    if (in[v]) return Verdict::fail("separator vertex " + g.label(v) + " repeated");
    in[v] = 1;
  }
  if (sep.size() >= static_cast<std::size_t>(g.order()))
    return Verdict::fail("separator is not a proper subset");
  int actual = connected_components(g, sep).count;
  if (actual != c.claimed_components)
    return Verdict::fail("claimed " + std::to_string(c.claimed_components) + " components, found " +
                         std::to_string(actual));
  int bound = static_cast<int>(sep.size()) + (c.mode == CutMode::path_bound ? 1 : 0);
  if (actual <= bound)
    return Verdict::fail(std::to_string(actual) + " components do not exceed bound " +
                         std::to_string(bound));
  return Verdict::ok();
}

/// Number of tree vertices of degree one.
inline int count_tree_leaves(const std::vector<Vertex>& parent) {
  std::vector<int> deg(parent.size(), 0);
  for (std::size_t v = 0; v < parent.size(); ++v)
    if (parent[v] >= 0) {
      ++deg[v];
      ++deg[parent[v]];
    }
  return static_cast<int>(std::count(deg.begin(), deg.end(), 1));
}

inline Verdict validate_tree(const Graph& g, const SpanningTree& t) {
  const int n = g.order();
  if (static_cast<int>(t.parent.size()) != n) return Verdict::fail("parent map does not span");
  if (n == 0) return Verdict::ok();
  if (t.root < 0 || t.root >= n || t.parent[t.root] != -1) return Verdict::fail("bad root");
  std::vector<std::vector<Vertex>> kids(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    if (v == t.root) continue;
    Vertex p = t.parent[v];
    if (p < 0 || p >= n) return Verdict::fail("vertex " + g.label(v) + " has no parent");
    if (!g.adjacent(v, p)) return Verdict::fail("tree link " + g.label(v) + "-" + g.label(p) + " is not an edge");
    kids[p].push_back(v);
  }
  // every vertex reachable from the root means n-1 links form a tree
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> stack{t.root};
  seen[t.root] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : kids[u])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  if (reached != n) return Verdict::fail("parent links contain a cycle");
  if (count_tree_leaves(t.parent) != t.leaf_count)
    return Verdict::fail("leaf count " + std::to_string(t.leaf_count) + " is wrong");
  return Verdict::ok();
}

}  // namespace nno
