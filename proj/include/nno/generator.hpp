#pragma once

// Instance generator: a complete bipartite core with tails attached to core
// prefixes, so the nesting holds by construction. Every output is still
// re-classified and re-decomposed before it is handed out.

#include <random>

#include "nno/decomposition.hpp"

namespace nno {

struct GenSpec {
  int i = 1, j = 1;             // core side sizes
  std::vector<int> a2_degrees;  // non-decreasing, each in [1, j-1]
  std::vector<int> b2_degrees;  // non-decreasing, each in [1, i-1]
  std::uint64_t seed = 0;
  bool shuffle = false;
};

struct Generated {
  Graph graph;
  GenSpec accepted;  // spec that produced it, after perturbation
  int rejections = 0;
};

inline void validate_spec(const GenSpec& s) {
  if (s.i < 1 || s.j < 1) throw InputError("core sides must have at least one vertex");
  auto check = [](const std::vector<int>& degs, int limit, const char* name) {
    for (std::size_t k = 0; k < degs.size(); ++k) {
      if (degs[k] < 1 || degs[k] >= limit)
        throw InputError(std::string(name) + " degree " + std::to_string(degs[k]) + " outside [1, " +
                         std::to_string(limit - 1) + "]");
      if (k > 0 && degs[k] < degs[k - 1]) throw InputError(std::string(name) + " degrees must be non-decreasing");
    }
  };
  check(s.a2_degrees, s.j, "a2");
  check(s.b2_degrees, s.i, "b2");
}

namespace detail {

// Layout: x_1..x_i, y_1..y_j, u_1..u_p, v_1..v_q.
inline Graph build(const GenSpec& s) {
  const int p = static_cast<int>(s.a2_degrees.size()), q = static_cast<int>(s.b2_degrees.size());
  const int n = s.i + s.j + p + q;
  const int y0 = s.i, u0 = s.i + s.j, v0 = u0 + p;
  std::vector<Edge> es;
  std::vector<std::string> labels;
  for (int a = 0; a < s.i; ++a)
    for (int b = 0; b < s.j; ++b) es.emplace_back(a, y0 + b);
  for (int k = 0; k < p; ++k)
    for (int b = 0; b < s.a2_degrees[k]; ++b) es.emplace_back(u0 + k, y0 + b);
  for (int k = 0; k < q; ++k)
    for (int a = 0; a < s.b2_degrees[k]; ++a) es.emplace_back(v0 + k, a);
  for (int a = 0; a < s.i; ++a) labels.push_back("x" + std::to_string(a + 1));
  for (int b = 0; b < s.j; ++b) labels.push_back("y" + std::to_string(b + 1));
  for (int k = 0; k < p; ++k) labels.push_back("u" + std::to_string(k + 1));
  for (int k = 0; k < q; ++k) labels.push_back("v" + std::to_string(k + 1));
  Graph g = Graph::from_edges(n, es, std::move(labels));
  if (s.shuffle) {
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937_64 rng(s.seed);
    std::shuffle(perm.begin(), perm.end(), rng);
    g = g.relabeled(perm);
  }
  return g;
}

inline bool accepted(const Graph& g) {
  if (!classify(g).in_class) return false;
  return check_lemmas(decompose(g)).ok();
}

}  // namespace detail

/// Builds the instance for `spec`. Out-of-class outputs are rejected and the
/// spec perturbed (last tail entry dropped, longer list first) up to eight
/// times before giving up.
inline Generated generate(const GenSpec& spec) {
  validate_spec(spec);
  Generated out{{}, spec, 0};
  for (int attempt = 0; attempt < 8; ++attempt) {
    Graph g = detail::build(out.accepted);
    if (detail::accepted(g)) {
      out.graph = std::move(g);
      return out;
    }
    ++out.rejections;
    auto& a = out.accepted.a2_degrees;
    auto& b = out.accepted.b2_degrees;
    if (a.empty() && b.empty())
      throw RejectionLimitError("generated core is out of class", to_edge_list(g));
    (a.size() >= b.size() ? a : b).pop_back();
  }
  throw RejectionLimitError("rejection limit reached", to_edge_list(detail::build(out.accepted)));
}

/// A random valid spec with at most `max_vertices` vertices, shuffled.
inline GenSpec random_spec(std::uint64_t seed, int max_vertices) {
  if (max_vertices < 2) throw InputError("need room for at least two vertices");
  std::mt19937_64 rng(seed);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  GenSpec s;
  s.seed = seed;
  s.shuffle = true;
  s.i = pick(1, std::max(1, max_vertices / 2));
  s.j = pick(1, std::max(1, max_vertices - s.i));
  int room = max_vertices - s.i - s.j;
  int p = s.j > 1 && room > 0 ? pick(0, room) : 0;
  int q = s.i > 1 && room - p > 0 ? pick(0, room - p) : 0;
  for (int k = 0; k < p; ++k) s.a2_degrees.push_back(pick(1, s.j - 1));
  for (int k = 0; k < q; ++k) s.b2_degrees.push_back(pick(1, s.i - 1));
  std::sort(s.a2_degrees.begin(), s.a2_degrees.end());
  std::sort(s.b2_degrees.begin(), s.b2_degrees.end());
  return s;
}

inline nlohmann::json to_json(const GenSpec& s) {
  return {{"i", s.i}, {"j", s.j}, {"a2Degrees", s.a2_degrees}, {"b2Degrees", s.b2_degrees},
          {"seed", s.seed}, {"shuffle", s.shuffle}};
}

}  // namespace nno
