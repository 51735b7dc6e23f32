#pragma once

// Longest path and minimum-leaf spanning tree. Tail vertices that cannot be
// threaded are pruned, each kept tail becomes a side path through its core
// prefix, the leftover core is a complete bipartite graph with an obvious
// longest path, and the pieces are stitched together.

#include "nno/hamiltonicity.hpp"

namespace nno {

/// Decomposition after removing, repeatedly, the first tail vertex whose
/// degree is below its index.
struct PrunedDecomposition {
  Decomposition base;
  std::vector<Vertex> kept_a2, kept_b2;
  std::vector<Vertex> pruned_a2, pruned_b2;

  int c() const { return static_cast<int>(pruned_a2.size()); }
  int d() const { return static_cast<int>(pruned_b2.size()); }
};

inline PrunedDecomposition prune(const Decomposition& d) {
  PrunedDecomposition pd{d, {}, {}, {}, {}};
  // removing the first violator never changes indices before it, so one
  // pass against the running kept count is the iterated rule
  auto run = [&](const std::vector<Vertex>& tails, std::vector<Vertex>& kept, std::vector<Vertex>& pruned) {
    for (Vertex t : tails)
      (d.degree(t) >= static_cast<int>(kept.size()) + 1 ? kept : pruned).push_back(t);
  };
  run(d.a2, pd.kept_a2, pd.pruned_a2);
  run(d.b2, pd.kept_b2, pd.pruned_b2);
  return pd;
}

enum class TailSide { a2, b2 };

/// How a side path threads its tails: both ends in the core (needs the
/// last kept tail to have degree above its index), or starting at a tail.
enum class ThreadForm { none, core_ends, tail_start };

namespace detail {

inline std::vector<Vertex> thread(const Decomposition& d, const std::vector<Vertex>& kept,
                                  const std::vector<Vertex>& base, ThreadForm form) {
  std::vector<Vertex> s;
  const int n = static_cast<int>(kept.size());
  if (n == 0 || form == ThreadForm::none) return s;
  if (form == ThreadForm::core_ends) {
    if (d.degree(kept.back()) <= n) return s;
    s.push_back(at(base, 0));
    for (int k = 0; k < n; ++k) {
      s.push_back(kept[k]);
      s.push_back(at(base, k + 1));
    }
  } else {
    for (int k = 0; k < n; ++k) {
      s.push_back(kept[k]);
      s.push_back(at(base, k));
    }
  }
  return s;
}

inline ThreadForm default_form(const Decomposition& d, const std::vector<Vertex>& kept) {
  if (kept.empty()) return ThreadForm::none;
  return d.degree(kept.back()) > static_cast<int>(kept.size()) ? ThreadForm::core_ends : ThreadForm::tail_start;
}

}  // namespace detail

/// Side path P1 (A2 tails through the B1 prefix) or P2 (B2 tails through the
/// A1 prefix), in the form the kept tails allow: core..core with 2k+1
/// vertices when the last kept tail has degree above k, else tail..core with
/// 2k vertices. The core end is last.
inline std::vector<Vertex> side_path(const PrunedDecomposition& pd, TailSide side) {
  const auto& d = pd.base;
  const auto& kept = side == TailSide::a2 ? pd.kept_a2 : pd.kept_b2;
  const auto& base = side == TailSide::a2 ? d.b1 : d.a1;
  return detail::thread(d, kept, base, detail::default_form(d, kept));
}

/// Longest path of the complete bipartite graph on (a, b): alternating,
/// with both ends on the larger side when the sizes differ and starting in
/// `a` when they are equal. A single vertex if one side is empty.
inline std::vector<Vertex> core_path(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::vector<Vertex> s;
  if (a.empty() && b.empty()) return s;
  if (a.empty()) return {b.front()};
  if (b.empty()) return {a.front()};
  const auto& big = a.size() >= b.size() ? a : b;
  const auto& small = a.size() >= b.size() ? b : a;
  for (std::size_t k = 0; k < small.size(); ++k) {
    s.push_back(big[k]);
    s.push_back(small[k]);
  }
  if (big.size() > small.size()) s.push_back(big[small.size()]);
  return s;
}

/// Inputs to stitching. p1 ends in B1 (last vertex), p2 ends in A1, p3 is a
/// longest path of the core left over by p1 and p2.
struct StitchParts {
  std::shared_ptr<const Graph> graph;
  std::vector<Vertex> p1, p2;
  std::vector<Vertex> a1_residual, b1_residual;
  std::vector<Vertex> p3;
};

inline StitchParts make_parts(const PrunedDecomposition& pd, ThreadForm f1, ThreadForm f2) {
  const auto& d = pd.base;
  StitchParts parts;
  parts.graph = d.graph;
  parts.p1 = detail::thread(d, pd.kept_a2, d.b1, f1);
  parts.p2 = detail::thread(d, pd.kept_b2, d.a1, f2);
  std::vector<char> used(static_cast<std::size_t>(d.g().order()), 0);
  for (Vertex v : parts.p1) used[v] = 1;
  for (Vertex v : parts.p2) used[v] = 1;
  for (Vertex x : d.a1)
    if (!used[x]) parts.a1_residual.push_back(x);
  for (Vertex y : d.b1)
    if (!used[y]) parts.b1_residual.push_back(y);
  parts.p3 = core_path(parts.a1_residual, parts.b1_residual);
  return parts;
}

inline StitchParts make_parts(const PrunedDecomposition& pd) {
  return make_parts(pd, detail::default_form(pd.base, pd.kept_a2), detail::default_form(pd.base, pd.kept_b2));
}

struct StitchResult {
  std::vector<Vertex> path;
  std::string pattern;  // catalog entry that produced it
};

/// Longest valid concatenation from a fixed catalog: the six case patterns
/// first (both core sides balanced, A1' larger, B1' larger, each with P1
/// starting in the core or at a tail), then every ordering and orientation
/// of the nonempty pieces, with p3 optionally trimmed at either end.
/// Ties keep the earliest entry.
inline StitchResult stitch(const StitchParts& parts) {
  using Seq = std::vector<Vertex>;
  const Graph& g = *parts.graph;
  auto rev = [](Seq s) {
    std::reverse(s.begin(), s.end());
    return s;
  };
  auto trim_last = [](Seq s) {
    if (!s.empty()) s.pop_back();
    return s;
  };
  auto trim_first = [](Seq s) {
    if (!s.empty()) s.erase(s.begin());
    return s;
  };
  StitchResult best;
  bool have = false;
  auto offer = [&](std::string name, std::initializer_list<Seq> pieces) {
    Seq s;
    for (const auto& piece : pieces) s.insert(s.end(), piece.begin(), piece.end());
    if (s.empty() || (have && s.size() <= best.path.size())) return;
    if (!validate_sequence(g, {s, SequenceKind::path})) return;
    best = {std::move(s), std::move(name)};
    have = true;
  };
  const Seq &p1 = parts.p1, &p2 = parts.p2, &p3 = parts.p3;

  offer("p2 ~p3 p1", {p2, rev(p3), p1});
  offer("p1 p3 ~p2", {p1, p3, rev(p2)});
  offer("p2 ~p1 p3", {p2, rev(p1), p3});
  offer("p2 ~p3- ~p1", {p2, rev(trim_last(p3)), rev(p1)});
  offer("p2 p3- p1", {p2, trim_last(p3), p1});
  offer("p2 p3- ~p1", {p2, trim_last(p3), rev(p1)});

  std::vector<std::pair<std::string, Seq>> cores{{"p3", p3},
                                                 {"p3-last", trim_last(p3)},
                                                 {"p3-first", trim_first(p3)},
                                                 {"p3-both", trim_first(trim_last(p3))}};
  for (const auto& [core_name, core] : cores) {
    std::vector<std::pair<std::string, Seq>> pieces;
    if (!p1.empty()) pieces.emplace_back("p1", p1);
    if (!p2.empty()) pieces.emplace_back("p2", p2);
    if (!core.empty()) pieces.emplace_back(core_name, core);
    const std::size_t k = pieces.size();
    // every nonempty ordered selection of pieces, every orientation
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
      std::vector<std::size_t> chosen;
      for (std::size_t t = 0; t < k; ++t)
        if (mask >> t & 1u) chosen.push_back(t);
      do {
        for (unsigned flips = 0; flips < (1u << chosen.size()); ++flips) {
          Seq s;
          std::string name;
          for (std::size_t t = 0; t < chosen.size(); ++t) {
            Seq piece = pieces[chosen[t]].second;
            std::string pname = pieces[chosen[t]].first;
            if (flips >> t & 1u) {
              piece = rev(piece);
              pname = "rev(" + pname + ")";
            }
            name += (name.empty() ? "" : " + ") + pname;
            s.insert(s.end(), piece.begin(), piece.end());
          }
          offer(name, {s});
        }
      } while (std::next_permutation(chosen.begin(), chosen.end()));
    }
  }
  if (!have) throw TheoryViolation("stitch catalog produced no valid path");
  return best;
}

struct LongestPathResult {
  VertexSequence path;
  bool hamiltonian = false;  // taken from the Hamiltonian path shortcut
  std::string pattern;
};

/// Longest simple path of an in-class graph. Uses the Hamiltonian path
/// when one exists; otherwise prunes and stitches, trying the default side
/// path forms first and then the alternatives, keeping the longest.
inline LongestPathResult longest_path(const Decomposition& d) {
  if (auto ham = hamiltonian_path(d); ham.yes) return {*ham.witness, true, "hamiltonian"};
  auto pd = prune(d);
  const std::vector<ThreadForm> forms{ThreadForm::core_ends, ThreadForm::tail_start, ThreadForm::none};
  auto f1_default = detail::default_form(d, pd.kept_a2);
  auto f2_default = detail::default_form(d, pd.kept_b2);
  LongestPathResult best;
  auto consider = [&](ThreadForm f1, ThreadForm f2) {
    auto parts = make_parts(pd, f1, f2);
    if ((f1 != ThreadForm::none && parts.p1.empty() && !pd.kept_a2.empty()) ||
        (f2 != ThreadForm::none && parts.p2.empty() && !pd.kept_b2.empty()))
      return;  // form not available for these tails
    auto r = stitch(parts);
    if (r.path.size() > best.path.length()) best = {{std::move(r.path), SequenceKind::path}, false, r.pattern};
  };
  consider(f1_default, f2_default);
  for (auto f1 : forms)
    for (auto f2 : forms) consider(f1, f2);
  if (auto v = validate_sequence(d.g(), best.path); !v) throw TheoryViolation("longest path invalid: " + v.violation);
  return best;
}

inline LongestPathResult longest_path(const Graph& g) { return longest_path(decompose(g)); }

/// Spanning tree built on a longest path P: every vertex off P hangs as a
/// leaf from its first neighbour along P.
inline SpanningTree min_leaf_spanning_tree(const Decomposition& d, const VertexSequence& p) {
  const Graph& g = d.g();
  const int n = g.order();
  SpanningTree t;
  t.parent.assign(static_cast<std::size_t>(n), -1);
  if (n == 0) return t;
  std::vector<int> pos(static_cast<std::size_t>(n), -1);
  for (std::size_t k = 0; k < p.seq.size(); ++k) pos[p.seq[k]] = static_cast<int>(k);
  t.root = p.seq.front();
  for (std::size_t k = 1; k < p.seq.size(); ++k) t.parent[p.seq[k]] = p.seq[k - 1];
  for (Vertex w = 0; w < n; ++w) {
    if (pos[w] >= 0) continue;
    Vertex host = -1;
    for (Vertex x : g.neighbors(w))
      if (pos[x] >= 0 && (host < 0 || pos[x] < pos[host])) host = x;
    if (host < 0) throw TheoryViolation("vertex " + g.label(w) + " has no neighbour on the longest path");
    t.parent[w] = host;
  }
  t.leaf_count = count_tree_leaves(t.parent);
  if (auto v = validate_tree(g, t); !v) throw TheoryViolation("spanning tree invalid: " + v.violation);
  return t;
}

inline SpanningTree min_leaf_spanning_tree(const Decomposition& d) {
  return min_leaf_spanning_tree(d, longest_path(d).path);
}

inline SpanningTree min_leaf_spanning_tree(const Graph& g) { return min_leaf_spanning_tree(decompose(g)); }

inline nlohmann::json to_json(const SpanningTree& t) {
  nlohmann::json edges = nlohmann::json::array();
  for (std::size_t v = 0; v < t.parent.size(); ++v)
    if (t.parent[v] >= 0) edges.push_back({t.parent[v] + 1, static_cast<int>(v) + 1});
  return {{"leaves", t.leaf_count}, {"root", t.root + 1}, {"edges", edges}};
}

}  // namespace nno
