#pragma once

// Structural normal form of a connected P5-free chordal bipartite graph:
// a biclique (A1, B1) with every other vertex attached to a proper prefix
// of the opposite biclique side, and the tails A2, B2 listed so that their
// neighbourhoods form inclusion chains (nested neighbourhood ordering).

#include <memory>
#include <set>

#include "nno/graph.hpp"
#include "nno/io.hpp"
#include "nno/recognition.hpp"

namespace nno {

/// Complete bipartite subgraph; `left` lies in side A and `right` in side B.
struct Biclique {
  std::vector<Vertex> left;
  std::vector<Vertex> right;

  friend auto operator<=>(const Biclique&, const Biclique&) = default;
};

/// Parts and orderings. a2 = (u_1..u_p) and b2 = (v_1..v_q) are sorted by
/// non-decreasing degree; b1 is ordered so that every N(u_g) is a prefix of
/// it, and a1 so that every N(v_h) is a prefix of it.
struct Decomposition {
  std::shared_ptr<const Graph> graph;
  Bipartition sides;
  std::vector<Vertex> a1, b1, a2, b2;

  int i() const { return static_cast<int>(a1.size()); }
  int j() const { return static_cast<int>(b1.size()); }
  int p() const { return static_cast<int>(a2.size()); }
  int q() const { return static_cast<int>(b2.size()); }
  int size_a() const { return i() + p(); }
  int size_b() const { return j() + q(); }
  int degree(Vertex v) const { return graph->degree(v); }
  const Graph& g() const { return *graph; }
};

/// Same decomposition with the roles of A and B exchanged.
inline Decomposition mirror(const Decomposition& d) {
  return {d.graph, d.sides.swapped(), d.b1, d.a1, d.b2, d.a2};
}

namespace detail {

inline bool subset_of(std::span<const Vertex> small, std::span<const Vertex> big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

inline std::vector<Vertex> sorted(std::vector<Vertex> v) {
  std::sort(v.begin(), v.end());
  return v;
}

inline std::vector<Vertex> intersect(std::span<const Vertex> a, std::span<const Vertex> b) {
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace detail

/// All maximal bicliques with both sides nonempty, sorted.
///
/// Right sides of maximal bicliques are exactly the nonempty intersections
/// of neighbourhoods of A-vertices; the family is closed under intersection
/// with each N(a) until it stops growing, and each member is paired with
/// the A-vertices adjacent to all of it.
inline std::vector<Biclique> enumerate_maximal_bicliques(const Graph& g, const Bipartition& bip) {
  std::set<std::vector<Vertex>> closed;
  std::vector<std::vector<Vertex>> work;
  for (Vertex a : bip.side_a) {
    std::vector<Vertex> nb(g.neighbors(a).begin(), g.neighbors(a).end());
    if (!nb.empty() && closed.insert(nb).second) work.push_back(nb);
  }
  while (!work.empty()) {
    auto s = std::move(work.back());
    work.pop_back();
    for (Vertex a : bip.side_a) {
      auto t = detail::intersect(s, g.neighbors(a));
      if (!t.empty() && closed.insert(t).second) work.push_back(std::move(t));
    }
  }
  std::vector<Biclique> out;
  for (const auto& right : closed) {
    Biclique b{{}, right};
    for (Vertex a : bip.side_a)
      if (detail::subset_of(right, g.neighbors(a))) b.left.push_back(a);
    out.push_back(std::move(b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

inline std::vector<Vertex> by_degree(const Graph& g, std::vector<Vertex> vs) {
  std::sort(vs.begin(), vs.end(), [&](Vertex x, Vertex y) {
    return std::pair(g.degree(x), x) < std::pair(g.degree(y), y);
  });
  return vs;
}

// base ordered as N(t_1), N(t_2) \ N(t_1), ..., base \ N(t_last), each block
// in id order.
inline std::vector<Vertex> prefix_order(const Graph& g, std::span<const Vertex> base,
                                        std::span<const Vertex> tails) {
  std::vector<Vertex> order;
  std::vector<char> placed(static_cast<std::size_t>(g.order()), 0);
  std::vector<char> in_base(static_cast<std::size_t>(g.order()), 0);
  for (Vertex b : base) in_base[b] = 1;
  for (Vertex t : tails)
    for (Vertex w : g.neighbors(t))
      if (in_base[w] && !placed[w]) {
        placed[w] = 1;
        order.push_back(w);
      }
  for (Vertex b : sorted(std::vector<Vertex>(base.begin(), base.end())))
    if (!placed[b]) order.push_back(b);
  return order;
}

inline Decomposition assemble(std::shared_ptr<const Graph> g, const Bipartition& bip,
                              const Biclique& core) {
  Decomposition d;
  d.graph = std::move(g);
  d.sides = bip;
  const Graph& G = *d.graph;
  std::vector<char> in_core(static_cast<std::size_t>(G.order()), 0);
  for (Vertex v : core.left) in_core[v] = 1;
  for (Vertex v : core.right) in_core[v] = 1;
  std::vector<Vertex> a2, b2;
  for (Vertex v : bip.side_a)
    if (!in_core[v]) a2.push_back(v);
  for (Vertex v : bip.side_b)
    if (!in_core[v]) b2.push_back(v);
  d.a2 = by_degree(G, a2);
  d.b2 = by_degree(G, b2);
  d.b1 = prefix_order(G, core.right, d.a2);
  d.a1 = prefix_order(G, core.left, d.b2);
  return d;
}

// Invariants that every construction downstream depends on: complete core,
// tails strictly inside the opposite core side, nesting, prefix property.
inline Verdict check_structure(const Decomposition& d) {
  const Graph& g = d.g();
  for (Vertex x : d.a1)
    for (Vertex y : d.b1)
      if (!g.adjacent(x, y)) return Verdict::fail("core is not complete at " + g.label(x) + "-" + g.label(y));
  auto check_side = [&](const std::vector<Vertex>& tails, const std::vector<Vertex>& base,
                        const char* name) -> Verdict {
    auto base_sorted = sorted(base);
    for (std::size_t k = 0; k < tails.size(); ++k) {
      auto nb = g.neighbors(tails[k]);
      if (!subset_of(nb, base_sorted) || nb.size() >= base.size())
        return Verdict::fail(std::string(name) + " vertex " + g.label(tails[k]) +
                             " is not attached to a proper subset of the core");
      if (k > 0 && !subset_of(g.neighbors(tails[k - 1]), nb))
        return Verdict::fail(std::string(name) + " neighbourhoods are not nested at " +
                             g.label(tails[k]));
      auto prefix = sorted(std::vector<Vertex>(base.begin(), base.begin() + static_cast<long>(nb.size())));
      if (!std::equal(prefix.begin(), prefix.end(), nb.begin(), nb.end()))
        return Verdict::fail(std::string(name) + " vertex " + g.label(tails[k]) +
                             " is not attached to a prefix");
    }
    return Verdict::ok();
  };
  if (auto v = check_side(d.a2, d.b1, "A2"); !v) return v;
  return check_side(d.b2, d.a1, "B2");
}

}  // namespace detail

/// Decomposes an in-class graph. Among maximal bicliques whose induced
/// parts satisfy every structural invariant, picks the one with the most
/// balanced sides, then the largest, then the lexicographically smallest.
inline Decomposition decompose(std::shared_ptr<const Graph> gp) {
  const Graph& g = *gp;
  auto report = classify(g);
  if (!report.in_class) throw NotInClassError("graph is not a connected P5-free chordal bipartite graph");
  auto bip = std::get<Bipartition>(is_bipartite(g));
  if (g.order() == 1) {
    Decomposition d;
    d.graph = gp;
    d.sides = bip;
    d.a1 = {0};
    return d;
  }
  std::optional<Decomposition> best;
  std::tuple<int, int> best_key{};
  for (const auto& core : enumerate_maximal_bicliques(g, bip)) {
    auto d = detail::assemble(gp, bip, core);
    if (!detail::check_structure(d)) continue;
    std::tuple<int, int> key{std::abs(d.i() - d.j()), -(d.i() + d.j())};
    if (!best || key < best_key) {
      best = std::move(d);
      best_key = key;
    }
  }
  if (!best) throw TheoryViolation("no maximal biclique yields a nested decomposition");
  return *best;
}

inline Decomposition decompose(const Graph& g) { return decompose(std::make_shared<const Graph>(g)); }

struct LemmaCheck {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct LemmaReport {
  std::vector<LemmaCheck> checks;

  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
  }
  std::optional<LemmaCheck> first_violation() const {
    for (const auto& c : checks)
      if (!c.passed) return c;
    return std::nullopt;
  }
};

/// Re-verifies the structural lemmas on a decomposition without trusting
/// how it was built:
///  - each tail vertex misses some vertex of the opposite core side;
///  - each tail vertex has all neighbours in the opposite core side;
///  - for tail pairs, smaller-or-equal degree implies neighbourhood inclusion;
///  - along the listed order the neighbourhoods form a chain;
///  - each tail neighbourhood is a prefix of the core ordering.
inline LemmaReport check_lemmas(const Decomposition& d) {
  const Graph& g = d.g();
  LemmaReport rep;
  auto record = [&](std::string name, std::string failure) {
    rep.checks.push_back({std::move(name), failure.empty(), std::move(failure)});
  };
  std::string f;
  for (Vertex x : d.a1)
    for (Vertex y : d.b1)
      if (f.empty() && !g.adjacent(x, y)) f = g.label(x) + "-" + g.label(y) + " missing";
  record("core complete", f);

  auto sides = [&](auto&& per_side) {
    std::string out = per_side(d.a2, d.b1);
    return out.empty() ? per_side(d.b2, d.a1) : out;
  };
  record("tail misses a core vertex", sides([&](const auto& tails, const auto& base) {
           for (Vertex t : tails)
             if (std::all_of(base.begin(), base.end(), [&](Vertex b) { return g.adjacent(t, b); }))
               return g.label(t) + " is adjacent to the whole opposite core side";
           return std::string();
         }));
  record("tail neighbourhood inside core", sides([&](const auto& tails, const auto& base) {
           auto bs = detail::sorted(base);
           for (Vertex t : tails)
             if (!detail::subset_of(g.neighbors(t), bs)) return g.label(t) + " has a neighbour outside the core";
           return std::string();
         }));
  record("degree order implies inclusion", sides([&](const auto& tails, const auto&) {
           for (Vertex s : tails)
             for (Vertex t : tails)
               if (s != t && g.degree(s) <= g.degree(t) && !detail::subset_of(g.neighbors(s), g.neighbors(t)))
                 return "N(" + g.label(s) + ") not inside N(" + g.label(t) + ")";
           return std::string();
         }));
  record("nested chain", sides([&](const auto& tails, const auto&) {
           for (std::size_t k = 1; k < tails.size(); ++k) {
             if (g.degree(tails[k - 1]) > g.degree(tails[k])) return "tail order not by degree at " + g.label(tails[k]);
             if (!detail::subset_of(g.neighbors(tails[k - 1]), g.neighbors(tails[k])))
               return "chain breaks at " + g.label(tails[k]);
           }
           return std::string();
         }));
  record("prefix property", sides([&](const auto& tails, const auto& base) {
           for (Vertex t : tails) {
             auto nb = g.neighbors(t);
             if (nb.size() > base.size()) return g.label(t) + " has too many neighbours";
             auto pre = detail::sorted(std::vector<Vertex>(base.begin(), base.begin() + static_cast<long>(nb.size())));
             if (!std::equal(pre.begin(), pre.end(), nb.begin(), nb.end()))
               return "N(" + g.label(t) + ") is not a prefix";
           }
           return std::string();
         }));
  return rep;
}

inline nlohmann::json to_json(const LemmaReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) {
    nlohmann::json j{{"name", c.name}, {"passed", c.passed}};
    if (!c.passed) j["violation"] = c.detail;
    checks.push_back(j);
  }
  return {{"ok", r.ok()}, {"checks", checks}};
}

inline nlohmann::json to_json(const Decomposition& d) {
  auto degs = [&](const std::vector<Vertex>& vs) {
    nlohmann::json a = nlohmann::json::array();
    for (Vertex v : vs) a.push_back(d.degree(v));
    return a;
  };
  return {{"i", d.i()},          {"j", d.j()},          {"p", d.p()},          {"q", d.q()},
          {"a1", ids(d.a1)},     {"b1", ids(d.b1)},     {"a2", ids(d.a2)},     {"b2", ids(d.b2)},
          {"a2Degrees", degs(d.a2)}, {"b2Degrees", degs(d.b2)}, {"lemmas", to_json(check_lemmas(d))}};
}

}  // namespace nno
