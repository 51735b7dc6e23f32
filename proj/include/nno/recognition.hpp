#pragma once

// Membership test for connected P5-free chordal bipartite graphs. Every
// negative answer comes with a forbidden structure that can be re-checked
// with plain adjacency probes.

#include <variant>

#include "nno/graph.hpp"
#include "nno/io.hpp"

namespace nno {

struct ClassReport {
  bool is_connected = false;
  bool is_bipartite = false;
  std::optional<VertexSequence> odd_cycle;
  bool is_chordal_bipartite = false;
  std::optional<VertexSequence> chordless_cycle;
  bool is_p5_free = false;
  std::optional<VertexSequence> induced_p5;
  bool in_class = false;
};

namespace detail {

struct Colouring {
  std::vector<int> colour;
  std::optional<VertexSequence> odd_cycle;
};

// BFS 2-colouring over every component; the first conflicting edge is
// turned into an odd cycle through the BFS tree.
inline Colouring two_colour(const Graph& g) {
  const int n = g.order();
  Colouring out;
  out.colour.assign(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
  std::vector<int> depth(static_cast<std::size_t>(n), 0);
  for (Vertex s = 0; s < n; ++s) {
    if (out.colour[s] >= 0) continue;
    out.colour[s] = 0;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      for (Vertex w : g.neighbors(u)) {
        if (out.colour[w] < 0) {
          out.colour[w] = 1 - out.colour[u];
          parent[w] = u;
          depth[w] = depth[u] + 1;
          q.push(w);
        } else if (out.colour[w] == out.colour[u] && !out.odd_cycle) {
          std::vector<Vertex> left{u}, right{w};
          Vertex a = u, b = w;
          while (depth[a] > depth[b]) left.push_back(a = parent[a]);
          while (depth[b] > depth[a]) right.push_back(b = parent[b]);
          while (a != b) {
            left.push_back(a = parent[a]);
            right.push_back(b = parent[b]);
          }
          right.pop_back();  // common ancestor already in `left`
          left.insert(left.end(), right.rbegin(), right.rend());
          out.odd_cycle = VertexSequence{left, SequenceKind::cycle};
        }
      }
    }
  }
  return out;
}

}  // namespace detail

/// Bipartition of a connected graph (vertex 0 on side A), or an odd cycle.
inline std::variant<Bipartition, VertexSequence> is_bipartite(const Graph& g) {
  if (!is_connected(g)) throw InputError("graph is disconnected");
  auto col = detail::two_colour(g);
  if (col.odd_cycle) return *col.odd_cycle;
  Bipartition b;
  b.side_of = col.colour;
  for (Vertex v = 0; v < g.order(); ++v) (col.colour[v] == 0 ? b.side_a : b.side_b).push_back(v);
  return b;
}

/// An induced cycle on at least six vertices, if one exists.
///
/// Grows induced paths whose vertices all exceed the start vertex; a path
/// that acquires a chord is abandoned, and a closing edge back to the start
/// yields a chordless cycle once the path has six or more vertices.
inline std::optional<VertexSequence> find_chordless_cycle_ge6(const Graph& g) {
  const int n = g.order();
  std::vector<Vertex> path;
  std::vector<int> on_path(static_cast<std::size_t>(n), 0);
  // touches[v] counts path vertices (other than the last and the start)
  // adjacent to v; v may extend the path only if it is zero.
  std::vector<int> touches(static_cast<std::size_t>(n), 0);
  std::optional<VertexSequence> found;

  auto grow = [&](auto&& self) -> bool {
    Vertex last = path.back();
    Vertex start = path.front();
    for (Vertex v : g.neighbors(last)) {
      if (v <= start || on_path[v] || touches[v] > 0) continue;
      bool closes = path.size() >= 2 && g.adjacent(v, start);
      if (closes) {
        if (path.size() + 1 >= 6) {
          path.push_back(v);
          found = VertexSequence{path, SequenceKind::cycle};
          return true;
        }
        continue;
      }
      // `last` becomes interior once v is appended
      if (path.size() >= 2)
        for (Vertex w : g.neighbors(last)) ++touches[w];
      path.push_back(v);
      on_path[v] = 1;
      if (self(self)) return true;
      on_path[v] = 0;
      path.pop_back();
      if (path.size() >= 2)
        for (Vertex w : g.neighbors(last)) --touches[w];
    }
    return false;
  };

  for (Vertex s = 0; s < n; ++s) {
    path.assign(1, s);
    on_path[s] = 1;
    bool hit = grow(grow);
    on_path[s] = 0;
    if (hit) return found;
  }
  return std::nullopt;
}

/// An induced path on five vertices (a,b,c,d,e), if one exists. Anchored on
/// the middle vertex c and its two path neighbours, then extended outward.
inline std::optional<VertexSequence> find_induced_p5(const Graph& g) {
  for (Vertex c = 0; c < g.order(); ++c) {
    auto nc = g.neighbors(c);
    for (std::size_t i = 0; i < nc.size(); ++i)
      for (std::size_t k = i + 1; k < nc.size(); ++k) {
        Vertex b = nc[i], d = nc[k];
        if (g.adjacent(b, d)) continue;
        for (Vertex a : g.neighbors(b)) {
          if (a == c || a == d || g.adjacent(a, c) || g.adjacent(a, d)) continue;
          for (Vertex e : g.neighbors(d)) {
            if (e == c || e == b || e == a) continue;
            if (g.adjacent(e, c) || g.adjacent(e, b) || g.adjacent(e, a)) continue;
            return VertexSequence{{a, b, c, d, e}, SequenceKind::path};
          }
        }
      }
  }
  return std::nullopt;
}

inline ClassReport classify(const Graph& g) {
  ClassReport r;
  r.is_connected = is_connected(g);
  auto col = detail::two_colour(g);
  r.is_bipartite = !col.odd_cycle.has_value();
  r.odd_cycle = col.odd_cycle;
  if (r.is_bipartite) {
    r.chordless_cycle = find_chordless_cycle_ge6(g);
    r.is_chordal_bipartite = !r.chordless_cycle.has_value();
  }
  r.induced_p5 = find_induced_p5(g);
  r.is_p5_free = !r.induced_p5.has_value();
  r.in_class = r.is_connected && r.is_bipartite && r.is_chordal_bipartite && r.is_p5_free;
  return r;
}

/// Independent re-check of the witnesses in a report: an odd cycle, a cycle
/// without chords, and a path of five vertices with no extra adjacencies.
inline Verdict validate_report(const Graph& g, const ClassReport& r) {
  if (r.odd_cycle) {
    if (auto v = validate_sequence(g, *r.odd_cycle); !v) return v;
    if (r.odd_cycle->length() % 2 == 0) return Verdict::fail("odd-cycle witness has even length");
  }
  auto induced = [&](const std::vector<Vertex>& s, bool cyclic) {
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t k = i + 1; k < s.size(); ++k) {
        bool consecutive = k == i + 1 || (cyclic && i == 0 && k + 1 == s.size());
        if (g.adjacent(s[i], s[k]) != consecutive) return false;
      }
    return true;
  };
  if (r.chordless_cycle) {
    const auto& c = *r.chordless_cycle;
    if (c.length() < 6 || !validate_sequence(g, c) || !induced(c.seq, true))
      return Verdict::fail("chordless-cycle witness is not an induced cycle of length >= 6");
  }
  if (r.induced_p5) {
    const auto& p = *r.induced_p5;
    if (p.length() != 5 || !validate_sequence(g, p) || !induced(p.seq, false))
      return Verdict::fail("P5 witness is not an induced path on five vertices");
  }
  return Verdict::ok();
}

inline nlohmann::json to_json(const ClassReport& r) {
  auto witness = [](const std::optional<VertexSequence>& s) -> nlohmann::json {
    return s ? ids(s->seq) : nlohmann::json(nullptr);
  };
  return {{"isConnected", r.is_connected},
          {"isBipartite", r.is_bipartite},
          {"oddCycle", witness(r.odd_cycle)},
          {"isChordalBipartite", r.is_chordal_bipartite},
          {"chordlessCycle", witness(r.chordless_cycle)},
          {"isP5Free", r.is_p5_free},
          {"inducedP5", witness(r.induced_p5)},
          {"inClass", r.in_class}};
}

}  // namespace nno
