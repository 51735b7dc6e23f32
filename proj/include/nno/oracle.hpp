#pragma once

// Exponential-time ground truth: Hamiltonicity, longest path, Steiner path
// and minimum-leaf spanning tree by exhaustive search over vertex subsets,
// plus an enumerator of every small connected in-class graph up to
// isomorphism. These know nothing about decompositions.

#include <bit>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>

#include "nno/recognition.hpp"

namespace nno {

/// Optional wall-clock guard for oracle calls.
class Deadline {
 public:
  Deadline() = default;
  explicit Deadline(std::chrono::milliseconds budget) : until_(std::chrono::steady_clock::now() + budget) {}

  void poll() const {
    if (!until_ || (++ticks_ & 0xfff) != 0) return;
    if (std::chrono::steady_clock::now() > *until_) throw OracleTimeout("oracle call exceeded its time budget");
  }

 private:
  std::optional<std::chrono::steady_clock::time_point> until_;
  mutable unsigned ticks_ = 0;
};

namespace detail {

using Mask = std::uint32_t;

inline void guard(const Graph& g, int limit, const char* what) {
  if (g.order() > limit)
    throw SizeGuardError(std::string(what) + " oracle limited to " + std::to_string(limit) + " vertices");
}

inline std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v = 0; v < g.order(); ++v)
    for (Vertex w : g.neighbors(v)) adj[v] |= Mask{1} << w;
  return adj;
}

/// reach[mask] has bit v set iff some simple path has vertex set `mask` and
/// ends at v.
inline std::vector<Mask> path_end_table(const Graph& g, const Deadline& dl = {}) {
  const int n = g.order();
  auto adj = adjacency_masks(g);
  std::vector<Mask> reach(std::size_t{1} << n, 0);
  for (int v = 0; v < n; ++v) reach[Mask{1} << v] = Mask{1} << v;
  for (Mask mask = 1; mask < (Mask{1} << n); ++mask) {
    dl.poll();
    for (Mask ends = reach[mask]; ends; ends &= ends - 1) {
      int v = std::countr_zero(ends);
      for (Mask out = adj[v] & ~mask; out; out &= out - 1) {
        int w = std::countr_zero(out);
        reach[mask | (Mask{1} << w)] |= Mask{1} << w;
      }
    }
  }
  return reach;
}

inline std::vector<Vertex> path_from_table(const Graph& g, const std::vector<Mask>& reach, Mask mask) {
  std::vector<Vertex> out;
  Vertex v = std::countr_zero(reach[mask]);
  while (true) {
    out.push_back(v);
    mask &= ~(Mask{1} << v);
    if (!mask) break;
    Vertex next = -1;
    for (Mask ends = reach[mask]; ends; ends &= ends - 1)
      if (g.adjacent(v, std::countr_zero(ends))) {
        next = std::countr_zero(ends);
        break;
      }
    v = next;
  }
  return out;
}

}  // namespace detail

enum class HamMode { cycle, path };

/// Backtracking with a memo of dead (visited-set, endpoint) states.
inline std::optional<VertexSequence> brute_hamiltonian(const Graph& g, HamMode mode, const Deadline& dl = {}) {
  detail::guard(g, 18, "Hamiltonian");
  using detail::Mask;
  const int n = g.order();
  if (n == 0) return std::nullopt;
  if (mode == HamMode::path && n == 1) return VertexSequence{{0}, SequenceKind::path};
  if (mode == HamMode::cycle && n < 4) return std::nullopt;
  auto adj = detail::adjacency_masks(g);
  const Mask full = (Mask{1} << n) - 1;
  std::vector<bool> dead((std::size_t{1} << n) * static_cast<std::size_t>(n), false);
  std::vector<Vertex> path;

  auto extend = [&](auto&& self, Mask mask, Vertex v) -> bool {
    dl.poll();
    if (mask == full) return mode == HamMode::path || (adj[v] & Mask{1}) != 0;
    std::size_t key = static_cast<std::size_t>(mask) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v);
    if (dead[key]) return false;
    for (Mask out = adj[v] & ~mask; out; out &= out - 1) {
      Vertex w = std::countr_zero(out);
      path.push_back(w);
      if (self(self, mask | (Mask{1} << w), w)) return true;
      path.pop_back();
    }
    dead[key] = true;
    return false;
  };

  const int starts = mode == HamMode::cycle ? 1 : n;
  for (Vertex s = 0; s < starts; ++s) {
    path.assign(1, s);
    if (extend(extend, Mask{1} << s, s))
      return VertexSequence{path, mode == HamMode::cycle ? SequenceKind::cycle : SequenceKind::path};
  }
  return std::nullopt;
}

/// Longest simple path by memoised depth-first search over
/// (visited-set, endpoint) states.
inline VertexSequence brute_longest_path(const Graph& g, const Deadline& dl = {}) {
  detail::guard(g, 16, "longest path");
  using detail::Mask;
  const int n = g.order();
  if (n == 0) return {};
  auto adj = detail::adjacency_masks(g);
  // gain[mask*n+v]: most vertices that can still be appended from v; 0xff unknown
  std::vector<std::uint8_t> gain((std::size_t{1} << n) * static_cast<std::size_t>(n), 0xff);
  auto key = [n](Mask mask, Vertex v) {
    return static_cast<std::size_t>(mask) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v);
  };
  auto best = [&](auto&& self, Mask mask, Vertex v) -> int {
    auto& slot = gain[key(mask, v)];
    if (slot != 0xff) return slot;
    dl.poll();
    int top = 0;
    for (Mask out = adj[v] & ~mask; out; out &= out - 1) {
      Vertex w = std::countr_zero(out);
      top = std::max(top, 1 + self(self, mask | (Mask{1} << w), w));
    }
    slot = static_cast<std::uint8_t>(top);
    return top;
  };
  Vertex start = 0;
  int longest = -1;
  for (Vertex s = 0; s < n; ++s) {
    int len = best(best, Mask{1} << s, s);
    if (len > longest) {
      longest = len;
      start = s;
    }
  }
  std::vector<Vertex> path{start};
  Mask mask = Mask{1} << start;
  for (Vertex v = start; gain[key(mask, v)] > 0;) {
    int want = gain[key(mask, v)] - 1;
    for (Mask out = adj[v] & ~mask; out; out &= out - 1) {
      Vertex w = std::countr_zero(out);
      if (best(best, mask | (Mask{1} << w), w) == want) {
        mask |= Mask{1} << w;
        path.push_back(v = w);
        break;
      }
    }
  }
  return {path, SequenceKind::path};
}

/// Second, independent longest-path oracle: forward dynamic programming over
/// vertex subsets. Returns the vertex count only.
inline int longest_path_length_dp(const Graph& g, const Deadline& dl = {}) {
  detail::guard(g, 16, "longest path");
  auto reach = detail::path_end_table(g, dl);
  int best = 0;
  for (detail::Mask mask = 1; mask < reach.size(); ++mask)
    if (reach[mask]) best = std::max(best, std::popcount(mask));
  return best;
}

/// Minimum-vertex Steiner path queries over one graph. Built once, then
/// answers any terminal set by scanning path vertex sets.
class SteinerOracle {
 public:
  explicit SteinerOracle(const Graph& g, const Deadline& dl = {}) : g_(g) {
    detail::guard(g, 14, "Steiner path");
    reach_ = detail::path_end_table(g, dl);
    // best_[m]: fewest vertices of a path whose vertex set contains m
    const std::size_t full = reach_.size();
    best_.assign(full, kNone);
    for (detail::Mask m = 1; m < full; ++m)
      if (reach_[m]) best_[m] = static_cast<std::uint8_t>(std::popcount(m));
    for (int b = 0; b < g.order(); ++b)
      for (detail::Mask m = 0; m < full; ++m)
        if (!(m >> b & 1u)) best_[m] = std::min(best_[m], best_[m | (detail::Mask{1} << b)]);
  }

  static constexpr std::uint8_t kNone = 0xff;

  /// Fewest vertices on a path covering `terminals`, or nullopt.
  std::optional<int> min_vertices(std::span<const Vertex> terminals) const {
    auto v = best_[mask_of(terminals)];
    return v == kNone ? std::nullopt : std::optional<int>(v);
  }

  /// A minimum path, found by scanning vertex sets by increasing size.
  std::optional<VertexSequence> path(std::span<const Vertex> terminals) const {
    auto want = min_vertices(terminals);
    if (!want) return std::nullopt;
    detail::Mask r = mask_of(terminals);
    for (detail::Mask m = 1; m < reach_.size(); ++m)
      if ((m & r) == r && reach_[m] && std::popcount(m) == *want)
        return VertexSequence{detail::path_from_table(g_, reach_, m), SequenceKind::path};
    return std::nullopt;
  }

 private:
  static detail::Mask mask_of(std::span<const Vertex> vs) {
    detail::Mask m = 0;
    for (Vertex v : vs) m |= detail::Mask{1} << v;
    return m;
  }

  const Graph& g_;
  std::vector<detail::Mask> reach_;
  std::vector<std::uint8_t> best_;
};

inline std::optional<VertexSequence> brute_steiner_path(const Graph& g, std::span<const Vertex> terminals,
                                                        const Deadline& dl = {}) {
  for (Vertex v : terminals)
    if (v < 0 || v >= g.order()) throw InputError("terminal outside the graph");
  return SteinerOracle(g, dl).path(terminals);
}

/// Spanning tree with the fewest leaves, by dynamic programming over vertex
/// subsets. Some vertex r is a leaf hanging from a neighbour c; the rest is
/// a tree on V - r rooted at c, built from subtrees hanging off c.
inline SpanningTree brute_mlst(const Graph& g, const Deadline& dl = {}) {
  detail::guard(g, 12, "minimum-leaf spanning tree");
  using detail::Mask;
  const int n = g.order();
  SpanningTree t;
  t.parent.assign(static_cast<std::size_t>(n), -1);
  if (n == 0) return t;
  if (!is_connected(g)) throw InputError("graph is disconnected");
  if (n == 1) {
    t.root = 0;
    return t;
  }
  constexpr int kInf = 1000;
  const std::size_t states = (std::size_t{1} << n) * static_cast<std::size_t>(n);
  std::vector<std::int16_t> sub(states, -1), forest(states, -1);
  std::vector<std::pair<Mask, Vertex>> choice(states, {0, -1});
  auto key = [n](Mask m, Vertex v) { return static_cast<std::size_t>(m) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v); };

  std::function<int(Mask, Vertex)> sub_f, forest_f;
  // leaves of a tree spanning T in which c also has a parent outside T
  sub_f = [&](Mask T, Vertex c) -> int {
    if (T == (Mask{1} << c)) return 1;
    auto& slot = sub[key(T, c)];
    if (slot < 0) slot = static_cast<std::int16_t>(forest_f(T & ~(Mask{1} << c), c));
    return slot;
  };
  // fewest leaves when the vertices of U are split into subtrees whose
  // roots are children of c; the subtree holding U's lowest vertex is chosen
  // first
  forest_f = [&](Mask U, Vertex c) -> int {
    if (U == 0) return 0;
    auto& slot = forest[key(U, c)];
    if (slot >= 0) return slot;
    dl.poll();
    int best = kInf;
    std::pair<Mask, Vertex> pick{0, -1};
    Mask low = U & (~U + 1);
    Mask rest = U & ~low;
    for (Mask extra = rest;; extra = (extra - 1) & rest) {
      Mask T = low | extra;
      for (Mask roots = T; roots; roots &= roots - 1) {
        Vertex r = std::countr_zero(roots);
        if (!g.adjacent(c, r)) continue;
        int here = sub_f(T, r);
        if (here >= best) continue;
        int there = forest_f(U & ~T, c);
        if (here + there < best) {
          best = here + there;
          pick = {T, r};
        }
      }
      if (extra == 0) break;
    }
    slot = static_cast<std::int16_t>(std::min(best, kInf));
    choice[key(U, c)] = pick;
    return slot;
  };

  const Mask full = (Mask{1} << n) - 1;
  int best = kInf;
  Vertex leaf = -1, anchor = -1;
  for (Vertex r = 0; r < n; ++r)
    for (Vertex c : g.neighbors(r)) {
      int here = 1 + sub_f(full & ~(Mask{1} << r), c);
      if (here < best) {
        best = here;
        leaf = r;
        anchor = c;
      }
    }
  t.root = leaf;
  t.parent[anchor] = leaf;
  std::function<void(Mask, Vertex)> build_sub, build_forest;
  build_sub = [&](Mask T, Vertex c) { build_forest(T & ~(Mask{1} << c), c); };
  build_forest = [&](Mask U, Vertex c) {
    while (U) {
      auto [T, r] = choice[key(U, c)];
      t.parent[r] = c;
      build_sub(T, r);
      U &= ~T;
    }
  };
  build_sub(full & ~(Mask{1} << leaf), anchor);
  t.leaf_count = count_tree_leaves(t.parent);
  return t;
}

/// Canonical string for a graph: the lexicographically smallest upper
/// adjacency triangle over relabellings that respect a colour refinement
/// (degrees, iterated). Permutations inside a colour cell are enumerated
/// over twin classes up to `budget` labellings; past the budget the form is
/// still a faithful encoding of the graph but isomorphic copies may differ.
inline std::pair<std::string, std::vector<Vertex>> canonical_labelling(const Graph& g, long budget = 200000) {
  const int n = g.order();
  std::vector<int> colour(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) colour[v] = g.degree(v);
  for (int distinct = -1;;) {
    std::vector<std::pair<int, std::vector<int>>> sig(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
      sig[v].first = colour[v];
      for (Vertex w : g.neighbors(v)) sig[v].second.push_back(colour[w]);
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    auto uniq = sig;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    for (Vertex v = 0; v < n; ++v)
      colour[v] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), sig[v]) - uniq.begin());
    if (static_cast<int>(uniq.size()) == distinct) break;
    distinct = static_cast<int>(uniq.size());
  }
  // cells in colour order; twins (equal neighbourhoods) share a class id
  std::map<int, std::vector<Vertex>> cells;
  for (Vertex v = 0; v < n; ++v) cells[colour[v]].push_back(v);
  std::map<std::vector<Vertex>, int> twin_id;
  std::vector<int> twin(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    std::vector<Vertex> nb(g.neighbors(v).begin(), g.neighbors(v).end());
    twin[v] = twin_id.emplace(nb, static_cast<int>(twin_id.size())).first->second;
  }
  std::vector<std::vector<int>> arrangement;  // class id per position, per cell
  std::vector<std::vector<Vertex>> members;
  for (auto& [c, vs] : cells) {
    std::vector<int> a;
    for (Vertex v : vs) a.push_back(twin[v]);
    std::sort(a.begin(), a.end());
    arrangement.push_back(a);
    members.push_back(vs);
  }

  std::string best;
  std::vector<Vertex> best_order;
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  long tried = 0;
  auto encode = [&] {
    // position -> vertex: within a cell, class occurrences take that class's
    // members in id order
    std::size_t pos = 0;
    for (std::size_t c = 0; c < arrangement.size(); ++c) {
      std::map<int, std::size_t> used;
      for (int cls : arrangement[c]) {
        std::size_t skip = used[cls]++;
        for (Vertex v : members[c])
          if (twin[v] == cls && skip-- == 0) {
            order[pos++] = v;
            break;
          }
      }
    }
    std::string s;
    s.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) s.push_back(g.adjacent(order[a], order[b]) ? '1' : '0');
    if (best_order.empty() || s < best) {
      best = std::move(s);
      best_order = order;
    }
  };
  std::function<void(std::size_t)> walk = [&](std::size_t c) {
    if (tried >= budget) return;
    if (c == arrangement.size()) {
      ++tried;
      encode();
      return;
    }
    auto saved = arrangement[c];
    do walk(c + 1);
    while (tried < budget && std::next_permutation(arrangement[c].begin(), arrangement[c].end()));
    arrangement[c] = saved;
  };
  walk(0);
  // perm[v] = canonical position of v
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) perm[best_order[k]] = k;
  return {std::to_string(n) + ":" + best, perm};
}

inline std::string canonical_form(const Graph& g) { return canonical_labelling(g).first; }

/// Every connected in-class graph on 1..max_n vertices, one per
/// isomorphism class, each relabelled canonically. Ordered by vertex count,
/// then canonical form.
///
/// Built level by level: a connected graph always has a vertex whose
/// removal leaves it connected, and the class is closed under induced
/// subgraphs, so every graph on n vertices is a graph on n-1 vertices plus
/// a vertex joined to a nonempty subset of one colour class.
inline void for_each_in_class(int max_n, const std::function<void(const Graph&)>& visit) {
  if (max_n > 10) throw SizeGuardError("in-class enumeration limited to 10 vertices");
  if (max_n < 1) return;
  std::vector<Graph> level{Graph::from_edges(1, {})};
  visit(level.front());
  for (int n = 2; n <= max_n; ++n) {
    std::map<std::string, Graph> next;
    for (const Graph& h : level) {
      auto col = detail::two_colour(h);
      std::vector<Vertex> side[2];
      for (Vertex v = 0; v < h.order(); ++v) side[col.colour[v]].push_back(v);
      auto base = h.edges();
      for (int s = 0; s < 2; ++s) {
        const auto& pool = side[s];
        for (detail::Mask m = 1; m < (detail::Mask{1} << pool.size()); ++m) {
          auto es = base;
          for (std::size_t k = 0; k < pool.size(); ++k)
            if (m >> k & 1u) es.emplace_back(pool[k], n - 1);
          auto cand = Graph::from_edges(n, es);
          if (!classify(cand).in_class) continue;
          auto [form, perm] = canonical_labelling(cand);
          if (!next.count(form)) next.emplace(form, cand.relabeled(perm));
        }
      }
    }
    level.clear();
    for (auto& [form, graph] : next) {
      visit(graph);
      level.push_back(std::move(graph));
    }
  }
}

inline std::vector<Graph> enumerate_in_class(int max_n) {
  std::vector<Graph> out;
  for_each_in_class(max_n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

}  // namespace nno
