#pragma once

// Hamiltonian cycle and path on a decomposed graph. The decision reduces to
// index-degree thresholds on the nested tails; a YES comes with the threaded
// cycle/path built from the prefix orders, a NO with a cut certificate that
// validate_cut can re-check.

#include "nno/decomposition.hpp"

namespace nno {

/// Where the pieces of an assembled witness came from. a3/b3 are the core
/// vertices left after the tails consumed their prefixes.
struct ConstructionTrace {
  std::vector<Vertex> a3, b3;
  std::vector<std::size_t> segments;  // start offsets of the assembled pieces
};

struct HamiltonicityDecision {
  bool yes = false;
  std::optional<VertexSequence> witness;
  std::optional<CutCertificate> certificate;
  std::optional<ConstructionTrace> trace;
  std::string reason;
};

namespace detail {

inline std::string tail_reason(const Graph& g, const char* side, const std::vector<Vertex>& tail, int r,
                               const char* op) {
  Vertex v = tail[static_cast<std::size_t>(r - 1)];
  return std::string(side) + " vertex " + g.label(v) + " (rank " + std::to_string(r) + ") has degree " +
         std::to_string(g.degree(v)) + " " + op + " " + std::to_string(r);
}

/// 1-based index of the first tail vertex t_g with degree < g + slack, or 0.
/// slack 1 tests d > g, slack 0 tests d >= g.
inline int first_deficient(const Decomposition& d, const std::vector<Vertex>& tails, int slack) {
  for (std::size_t k = 0; k < tails.size(); ++k) {
    int g = static_cast<int>(k) + 1;
    if (d.degree(tails[k]) < g + slack) return g;
  }
  return 0;
}

inline CutCertificate make_cut(const Graph& g, std::vector<Vertex> separator, CutMode mode) {
  std::sort(separator.begin(), separator.end());
  int count = connected_components(g, separator).count;
  CutCertificate c{std::move(separator), count, mode};
  if (auto v = validate_cut(g, c); !v) throw TheoryViolation("emitted cut certificate fails: " + v.violation);
  return c;
}

inline HamiltonicityDecision no_with_cut(const Graph& g, std::vector<Vertex> separator, CutMode mode,
                                         std::string reason) {
  HamiltonicityDecision dec;
  dec.certificate = make_cut(g, std::move(separator), mode);
  dec.reason = std::move(reason);
  return dec;
}

inline std::vector<Vertex> neighbourhood(const Graph& g, Vertex v) {
  return {g.neighbors(v).begin(), g.neighbors(v).end()};
}

inline const std::vector<Vertex>& smaller_side(const Decomposition& d) {
  return d.sides.side_a.size() <= d.sides.side_b.size() ? d.sides.side_a : d.sides.side_b;
}

inline Vertex at(const std::vector<Vertex>& v, int k) {
  if (k < 0 || k >= static_cast<int>(v.size())) throw TheoryViolation("construction index out of range");
  return v[static_cast<std::size_t>(k)];
}

inline HamiltonicityDecision yes_with(const Graph& g, VertexSequence s, ConstructionTrace trace) {
  if (auto v = validate_hamiltonian(g, s); !v) throw TheoryViolation("assembled witness is invalid: " + v.violation);
  HamiltonicityDecision dec;
  dec.yes = true;
  dec.witness = std::move(s);
  dec.trace = std::move(trace);
  return dec;
}

}  // namespace detail

/// YES iff |A| = |B| and every u_g has degree > g and every v_h degree > h.
inline HamiltonicityDecision hamiltonian_cycle(const Decomposition& d) {
  const Graph& g = d.g();
  if (d.size_a() != d.size_b()) {
    if (detail::smaller_side(d).empty()) return {false, {}, {}, {}, "single vertex"};
    return detail::no_with_cut(g, detail::smaller_side(d), CutMode::cycle_bound, "sides differ in size");
  }
  if (g.order() < 4) return {false, {}, {}, {}, "fewer than four vertices"};
  if (int r = detail::first_deficient(d, d.a2, 1))
    return detail::no_with_cut(g, detail::neighbourhood(g, d.a2[r - 1]), CutMode::cycle_bound,
                               detail::tail_reason(g, "A2", d.a2, r, "<="));
  if (int r = detail::first_deficient(d, d.b2, 1))
    return detail::no_with_cut(g, detail::neighbourhood(g, d.b2[r - 1]), CutMode::cycle_bound,
                               detail::tail_reason(g, "B2", d.b2, r, "<="));

  // y1 u1 y2 .. u_p y_{p+1} x1 v1 x2 .. v_q x_{q+1} y_{p+2} x_{q+2} .. y_j x_i
  const int p = d.p(), q = d.q();
  std::vector<Vertex> s;
  ConstructionTrace trace;
  trace.segments.push_back(0);
  s.push_back(detail::at(d.b1, 0));
  for (int k = 0; k < p; ++k) {
    s.push_back(d.a2[k]);
    s.push_back(detail::at(d.b1, k + 1));
  }
  trace.segments.push_back(s.size());
  s.push_back(detail::at(d.a1, 0));
  for (int k = 0; k < q; ++k) {
    s.push_back(d.b2[k]);
    s.push_back(detail::at(d.a1, k + 1));
  }
  trace.segments.push_back(s.size());
  for (int k = 0; p + 1 + k < d.j() || q + 1 + k < d.i(); ++k) {
    s.push_back(detail::at(d.b1, p + 1 + k));
    s.push_back(detail::at(d.a1, q + 1 + k));
  }
  trace.a3.assign(d.a1.begin() + std::min(q + 1, d.i()), d.a1.end());
  trace.b3.assign(d.b1.begin() + std::min(p + 1, d.j()), d.b1.end());
  return detail::yes_with(g, {std::move(s), SequenceKind::cycle}, std::move(trace));
}

namespace detail {

// |A| = |B| or |A| = |B| + 1; the caller mirrors the other case.
inline HamiltonicityDecision path_a_heavy(const Decomposition& d) {
  const Graph& g = d.g();
  const bool balanced = d.size_a() == d.size_b();
  if (int r = first_deficient(d, d.a2, 0))
    return no_with_cut(g, neighbourhood(g, d.a2[r - 1]), CutMode::path_bound,
                       tail_reason(g, "A2", d.a2, r, "<"));
  if (balanced) {
    if (int r = first_deficient(d, d.b2, 0))
      return no_with_cut(g, neighbourhood(g, d.b2[r - 1]), CutMode::path_bound,
                         tail_reason(g, "B2", d.b2, r, "<"));
  } else if (int r = first_deficient(d, d.b2, 1)) {
    // S = B1 together with the B2 vertices after v_r
    std::vector<Vertex> sep(d.b1.begin(), d.b1.end());
    sep.insert(sep.end(), d.b2.begin() + r, d.b2.end());
    return no_with_cut(g, std::move(sep), CutMode::path_bound,
                       tail_reason(g, "B2", d.b2, r, "<="));
  }

  const int p = d.p(), q = d.q();
  // balanced:   u1 y1 .. u_p y_p x_{q+1} y_{p+1} .. x_i y_j x_q v_q .. x_1 v_1
  // A heavier:  u1 y1 .. u_p y_p x_{q+2} y_{p+1} .. x_i y_j x_{q+1} v_q x_q .. v_1 x_1
  const int core_start = balanced ? q : q + 1;
  std::vector<Vertex> s;
  ConstructionTrace trace;
  trace.segments.push_back(0);
  for (int k = 0; k < p; ++k) {
    s.push_back(d.a2[k]);
    s.push_back(at(d.b1, k));
  }
  trace.segments.push_back(s.size());
  for (int k = 0; core_start + k < d.i() || p + k < d.j(); ++k) {
    s.push_back(at(d.a1, core_start + k));
    s.push_back(at(d.b1, p + k));
  }
  trace.segments.push_back(s.size());
  if (balanced) {
    for (int h = q - 1; h >= 0; --h) {
      s.push_back(at(d.a1, h));
      s.push_back(d.b2[h]);
    }
  } else {
    s.push_back(at(d.a1, q));
    for (int h = q - 1; h >= 0; --h) {
      s.push_back(d.b2[h]);
      s.push_back(at(d.a1, h));
    }
  }
  trace.a3.assign(d.a1.begin() + std::min(core_start, d.i()), d.a1.end());
  trace.b3.assign(d.b1.begin() + std::min(p, d.j()), d.b1.end());
  return yes_with(g, {std::move(s), SequenceKind::path}, std::move(trace));
}

}  // namespace detail

/// YES iff (|A| = |B|, d(u_g) >= g, d(v_h) >= h) or (|A| = |B| + 1,
/// d(u_g) >= g, d(v_h) > h), or the latter with A and B exchanged.
inline HamiltonicityDecision hamiltonian_path(const Decomposition& d) {
  const Graph& g = d.g();
  const int diff = d.size_a() - d.size_b();
  if (g.order() == 1) {
    HamiltonicityDecision dec;
    dec.yes = true;
    dec.witness = VertexSequence{{0}, SequenceKind::path};
    return dec;
  }
  if (std::abs(diff) >= 2)
    return detail::no_with_cut(g, detail::smaller_side(d), CutMode::path_bound, "sides differ by two or more");
  return diff >= 0 ? detail::path_a_heavy(d) : detail::path_a_heavy(mirror(d));
}

inline nlohmann::json to_json(const HamiltonicityDecision& dec) {
  nlohmann::json j{{"answer", dec.yes ? "yes" : "no"}};
  if (dec.witness) j["witness"] = ids(dec.witness->seq);
  if (dec.certificate) j["certificate"] = to_json(*dec.certificate);
  if (!dec.reason.empty()) j["reason"] = dec.reason;
  return j;
}

}  // namespace nno
