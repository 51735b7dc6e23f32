#pragma once

// Steiner path: a shortest path through every terminal. Terminal sets inside
// one part, or split between a core side and the opposite tail side, are
// solved exactly from the prefix orders; other shapes are reported as
// unsupported.

#include "nno/decomposition.hpp"
#include "nno/oracle.hpp"

namespace nno {

enum class SteinerCase { tail_a2, tail_b2, base_a1, base_b1, mix_a1_b2, mix_b1_a2, unsupported };

inline const char* case_name(SteinerCase c) {
  switch (c) {
    case SteinerCase::tail_a2: return "TAIL_A2";
    case SteinerCase::tail_b2: return "TAIL_B2";
    case SteinerCase::base_a1: return "BASE_A1";
    case SteinerCase::base_b1: return "BASE_B1";
    case SteinerCase::mix_a1_b2: return "MIX_A1_B2";
    case SteinerCase::mix_b1_a2: return "MIX_B1_A2";
    case SteinerCase::unsupported: return "UNSUPPORTED";
  }
  return "?";
}

enum class SteinerAnswer { yes, no, unsupported };

struct SteinerResult {
  SteinerAnswer answer = SteinerAnswer::no;
  std::optional<VertexSequence> path;
  int steiner_count = 0;  // path vertices that are not terminals
  SteinerCase case_tag = SteinerCase::unsupported;
  std::string reason;
};

namespace detail {

inline std::vector<int> part_of(const Decomposition& d) {
  // 0 a1, 1 a2, 2 b1, 3 b2
  std::vector<int> part(static_cast<std::size_t>(d.g().order()), -1);
  for (Vertex v : d.a1) part[v] = 0;
  for (Vertex v : d.a2) part[v] = 1;
  for (Vertex v : d.b1) part[v] = 2;
  for (Vertex v : d.b2) part[v] = 3;
  return part;
}

inline std::vector<Vertex> normalise_terminals(const Graph& g, std::span<const Vertex> terminals) {
  if (terminals.empty()) throw InputError("terminal set is empty");
  for (Vertex v : terminals)
    if (v < 0 || v >= g.order()) throw InputError("terminal " + std::to_string(v + 1) + " outside the graph");
  std::vector<Vertex> r(terminals.begin(), terminals.end());
  std::sort(r.begin(), r.end());
  r.erase(std::unique(r.begin(), r.end()), r.end());
  return r;
}

inline SteinerResult finish(const Graph& g, std::vector<Vertex> path, std::span<const Vertex> r, SteinerCase tag) {
  VertexSequence s{std::move(path), SequenceKind::path};
  if (auto v = validate_sequence(g, s); !v) throw TheoryViolation("Steiner path is invalid: " + v.violation);
  for (Vertex t : r)
    if (std::find(s.seq.begin(), s.seq.end(), t) == s.seq.end())
      throw TheoryViolation("Steiner path misses terminal " + std::to_string(t + 1));
  SteinerResult res;
  res.answer = SteinerAnswer::yes;
  res.steiner_count = static_cast<int>(s.length() - r.size());
  res.path = std::move(s);
  res.case_tag = tag;
  return res;
}

inline SteinerResult refuse(SteinerCase tag, std::string reason) {
  SteinerResult res;
  res.case_tag = tag;
  res.reason = std::move(reason);
  return res;
}

// R inside A2: sorted by degree, t_1 .. t_r, joined through b1[0..r-2].
inline SteinerResult tail_case(const Decomposition& d, std::vector<Vertex> r, SteinerCase tag) {
  r = by_degree(d.g(), std::move(r));
  const int n = static_cast<int>(r.size());
  for (int g = 1; g < n; ++g)
    if (d.degree(r[g - 1]) < g)
      return refuse(tag, "tail terminal " + d.g().label(r[g - 1]) + " (rank " + std::to_string(g) + ") has degree " + std::to_string(d.degree(r[g - 1])) +
                             " < " + std::to_string(g));
  std::vector<Vertex> path{r[0]};
  for (int g = 1; g < n; ++g) {
    path.push_back(d.b1[g - 1]);
    path.push_back(r[g]);
  }
  return finish(d.g(), std::move(path), r, tag);
}

// R inside A1 plus, possibly, terminals z in B2. A-side vertices of the path
// are A1 vertices W in prefix order; every gap between consecutive W's and
// each optional end holds one B vertex. A B2 vertex fits a slot iff its
// degree exceeds the largest prefix position the slot touches; B1 vertices
// fit anywhere. Extra A1 vertices and extra B vertices are both Steiner
// vertices, so each (extras, ends) choice is a bottleneck matching.
inline SteinerResult base_case(const Decomposition& d, const std::vector<Vertex>& ra, const std::vector<Vertex>& z,
                               SteinerCase tag) {
  const Graph& g = d.g();
  const int n = g.order();
  std::vector<int> pos(static_cast<std::size_t>(n), -1);
  for (int k = 0; k < d.i(); ++k) pos[d.a1[k]] = k;
  std::vector<char> is_terminal(static_cast<std::size_t>(n), 0);
  for (Vertex v : ra) is_terminal[v] = 1;
  for (Vertex v : z) is_terminal[v] = 1;

  std::vector<Vertex> free_a1;  // non-terminal A1 in prefix order
  for (Vertex x : d.a1)
    if (!is_terminal[x]) free_a1.push_back(x);
  // optional B vertices, most capable first
  std::vector<int> cap(static_cast<std::size_t>(n), 0);
  for (Vertex y : d.b1) cap[y] = d.i();
  for (Vertex v : d.b2) cap[v] = d.degree(v);
  auto capacity = [&](Vertex v) { return cap[v]; };
  std::vector<Vertex> optional(d.b1.begin(), d.b1.end());
  for (Vertex v : d.b2)
    if (!is_terminal[v]) optional.push_back(v);
  std::stable_sort(optional.begin(), optional.end(),
                   [&](Vertex x, Vertex y) { return capacity(x) > capacity(y); });

  const int b = static_cast<int>(z.size());
  struct Slot {
    int need;  // the item's capacity must exceed this
    int index;  // 0 start, 1..k gaps, k+1 end
  };
  std::optional<std::vector<Vertex>> best;
  int best_cost = 0;
  for (int ea = 0; ea <= static_cast<int>(free_a1.size()); ++ea) {
    std::vector<Vertex> w(ra);
    w.insert(w.end(), free_a1.begin(), free_a1.begin() + ea);
    std::sort(w.begin(), w.end(), [&](Vertex x, Vertex y) { return pos[x] < pos[y]; });
    const int k = static_cast<int>(w.size()) - 1;
    for (int e = 0; e <= 2; ++e) {
      const int m = k + e - b;
      if (m < 0 || m > static_cast<int>(optional.size())) continue;
      if (best && ea + m >= best_cost) continue;
      std::vector<Slot> slots;
      if (e >= 1) slots.push_back({pos[w[0]], 0});
      for (int t = 1; t <= k; ++t) slots.push_back({pos[w[t]], t});
      if (e == 2) slots.push_back({pos[w[k]], k + 1});
      std::vector<Vertex> items(z);
      items.insert(items.end(), optional.begin(), optional.begin() + m);
      std::stable_sort(items.begin(), items.end(), [&](Vertex x, Vertex y) { return capacity(x) > capacity(y); });
      std::stable_sort(slots.begin(), slots.end(), [](const Slot& x, const Slot& y) { return x.need > y.need; });
      bool fits = true;
      std::vector<Vertex> fill(static_cast<std::size_t>(k + 2), -1);
      for (std::size_t s = 0; s < slots.size() && fits; ++s) {
        fits = capacity(items[s]) > slots[s].need;
        fill[static_cast<std::size_t>(slots[s].index)] = items[s];
      }
      if (!fits) continue;
      std::vector<Vertex> path;
      if (fill[0] >= 0) path.push_back(fill[0]);
      for (int t = 0; t <= k; ++t) {
        if (t > 0) path.push_back(fill[static_cast<std::size_t>(t)]);
        path.push_back(w[static_cast<std::size_t>(t)]);
      }
      if (fill[static_cast<std::size_t>(k + 1)] >= 0) path.push_back(fill[static_cast<std::size_t>(k + 1)]);
      best = std::move(path);
      best_cost = ea + m;
    }
  }
  std::vector<Vertex> all(ra);
  all.insert(all.end(), z.begin(), z.end());
  if (!best)
    return refuse(tag, z.empty() ? "not enough connectors between the core terminals"
                                 : "tail terminals cannot be hosted by the core prefix");
  return finish(g, std::move(*best), all, tag);
}

}  // namespace detail

/// Shape of a terminal set relative to the decomposition.
inline SteinerCase classify_terminals(const Decomposition& d, std::span<const Vertex> terminals) {
  auto part = detail::part_of(d);
  bool in[4] = {false, false, false, false};
  for (Vertex v : terminals) in[part[v]] = true;
  const int mask = in[0] | in[1] << 1 | in[2] << 2 | in[3] << 3;
  switch (mask) {
    case 0b0001: return SteinerCase::base_a1;
    case 0b0010: return SteinerCase::tail_a2;
    case 0b0100: return SteinerCase::base_b1;
    case 0b1000: return SteinerCase::tail_b2;
    case 0b1001: return SteinerCase::mix_a1_b2;
    case 0b0110: return SteinerCase::mix_b1_a2;
    default: return SteinerCase::unsupported;
  }
}

inline SteinerResult steiner_path(const Decomposition& d, std::span<const Vertex> terminals) {
  const Graph& g = d.g();
  auto r = detail::normalise_terminals(g, terminals);
  const SteinerCase tag = classify_terminals(d, r);
  if (r.size() == 1) return detail::finish(g, r, r, tag);
  auto part = detail::part_of(d);
  auto pick = [&](int p) {
    std::vector<Vertex> out;
    for (Vertex v : r)
      if (part[v] == p) out.push_back(v);
    return out;
  };
  switch (tag) {
    case SteinerCase::tail_a2: return detail::tail_case(d, r, tag);
    case SteinerCase::tail_b2: return detail::tail_case(mirror(d), r, tag);
    case SteinerCase::base_a1: return detail::base_case(d, r, {}, tag);
    case SteinerCase::base_b1: return detail::base_case(mirror(d), r, {}, tag);
    case SteinerCase::mix_a1_b2: return detail::base_case(d, pick(0), pick(3), tag);
    case SteinerCase::mix_b1_a2: return detail::base_case(mirror(d), pick(2), pick(1), tag);
    case SteinerCase::unsupported: break;
  }
  SteinerResult res = detail::refuse(tag, "terminals meet a combination of parts without a closed-form rule");
  res.answer = SteinerAnswer::unsupported;
  return res;
}

/// The textbook construction for terminals in A1 and B2: the B2 terminals by
/// degree, z_1 w_1 .. z_l w_l with w's taken fresh from the non-terminal
/// prefix of A1, then y_1 x_1 .. y_a x_a through B1. Never better than
/// steiner_path; kept to measure what reusing terminals as connectors saves.
inline std::optional<VertexSequence> fresh_connector_path(const Decomposition& dec, std::span<const Vertex> terminals) {
  auto r = detail::normalise_terminals(dec.g(), terminals);
  const SteinerCase tag = classify_terminals(dec, r);
  if (tag != SteinerCase::mix_a1_b2 && tag != SteinerCase::mix_b1_a2) return std::nullopt;
  const Decomposition d = tag == SteinerCase::mix_a1_b2 ? dec : mirror(dec);
  auto part = detail::part_of(d);
  std::vector<Vertex> x, z;
  for (Vertex v : r) (part[v] == 0 ? x : z).push_back(v);
  z = detail::by_degree(d.g(), z);
  std::vector<Vertex> w;
  for (int k = 0; k < d.i(); ++k)
    if (!std::binary_search(r.begin(), r.end(), d.a1[k])) w.push_back(d.a1[k]);
  if (w.size() < z.size() || d.b1.size() < x.size()) return std::nullopt;
  std::vector<Vertex> path;
  for (std::size_t k = 0; k < z.size(); ++k) {
    path.push_back(z[k]);
    path.push_back(w[k]);
  }
  for (std::size_t k = 0; k < x.size(); ++k) {
    path.push_back(d.b1[k]);
    path.push_back(x[k]);
  }
  VertexSequence s{std::move(path), SequenceKind::path};
  if (!validate_sequence(d.g(), s)) return std::nullopt;
  return s;
}

/// Checks a Steiner answer: against the exact minimum on graphs with at most
/// 14 vertices, else against the alternation bound (a path holding a
/// terminals on one side and b on the other needs a - 1 - b extra vertices).
inline Verdict verify_minimality(const Graph& g, const SteinerResult& res, std::span<const Vertex> terminals) {
  auto r = detail::normalise_terminals(g, terminals);
  if (res.answer == SteinerAnswer::unsupported) return Verdict::ok();
  if (g.order() <= 14) {
    auto best = SteinerOracle(g).min_vertices(r);
    if (res.answer == SteinerAnswer::no)
      return best ? Verdict::fail("answered no but a path of " + std::to_string(*best) + " vertices exists")
                  : Verdict::ok();
    if (!best) return Verdict::fail("answered yes but no path covers the terminals");
    int floor = *best - static_cast<int>(r.size());
    if (res.steiner_count != floor)
      return Verdict::fail("Steiner count " + std::to_string(res.steiner_count) + " but minimum is " +
                           std::to_string(floor));
    return Verdict::ok();
  }
  if (res.answer == SteinerAnswer::no) return Verdict::ok();  // nothing cheap to check
  int side[2] = {0, 0};
  std::vector<int> c(static_cast<std::size_t>(g.order()), -1);
  // 2-colour from the first terminal; the graph is connected and bipartite
  std::vector<Vertex> stack{r[0]};
  c[r[0]] = 0;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v))
      if (c[w] < 0) {
        c[w] = 1 - c[v];
        stack.push_back(w);
      }
  }
  for (Vertex t : r) ++side[c[t] < 0 ? 0 : c[t]];
  int bound = std::max({0, side[0] - 1 - side[1], side[1] - 1 - side[0]});
  if (res.steiner_count < bound)
    return Verdict::fail("Steiner count " + std::to_string(res.steiner_count) + " below the lower bound " +
                         std::to_string(bound));
  return Verdict::ok();
}

inline nlohmann::json to_json(const SteinerResult& res) {
  static const char* answers[] = {"yes", "no", "unsupported"};
  nlohmann::json j{{"answer", answers[static_cast<int>(res.answer)]}, {"caseTag", case_name(res.case_tag)}};
  if (res.path) {
    j["path"] = ids(res.path->seq);
    j["steinerCount"] = res.steiner_count;
  }
  if (!res.reason.empty()) j["reason"] = res.reason;
  return j;
}

}  // namespace nno
