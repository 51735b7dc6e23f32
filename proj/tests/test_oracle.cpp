#include "test_util.hpp"

using namespace nno;
using namespace nno::testing;

TEST(BruteHamiltonian, Examples) {
  EXPECT_TRUE(brute_hamiltonian(fixtures::complete_bipartite(2, 2), HamMode::cycle));
  EXPECT_FALSE(brute_hamiltonian(fixtures::ex6(), HamMode::cycle));
  auto p = brute_hamiltonian(fixtures::ex6(), HamMode::path);
  ASSERT_TRUE(p);
  EXPECT_TRUE(validate_hamiltonian(fixtures::ex6(), *p));
  EXPECT_FALSE(brute_hamiltonian(fixtures::path(2), HamMode::cycle));
}

TEST(BruteLongestPath, Examples) {
  EXPECT_EQ(brute_longest_path(fixtures::ex2()).length(), 5u);
  EXPECT_EQ(brute_longest_path(fixtures::path(4)).length(), 4u);
  EXPECT_EQ(brute_longest_path(fixtures::complete_bipartite(3, 3)).length(), 6u);
}

TEST(BruteSteiner, Examples) {
  auto ex1 = fixtures::ex1();
  EXPECT_EQ(brute_steiner_path(ex1, L(ex1, {"x1", "x2", "x3"}))->length(), 5u);
  auto edge = brute_steiner_path(ex1, L(ex1, {"x1", "y1"}));
  ASSERT_TRUE(edge);
  EXPECT_EQ(sorted(edge->seq), sorted(L(ex1, {"x1", "y1"})));
  // three leaves of a star can never share a path
  EXPECT_FALSE(brute_steiner_path(fixtures::star(3), std::vector<Vertex>{1, 2, 3}));
}

TEST(BruteMlst, Examples) {
  EXPECT_EQ(brute_mlst(fixtures::path(4)).leaf_count, 2);
  EXPECT_EQ(brute_mlst(fixtures::star(3)).leaf_count, 3);
  auto t = brute_mlst(fixtures::ex2());
  EXPECT_EQ(t.leaf_count, 3);
  EXPECT_TRUE(validate_tree(fixtures::ex2(), t));
}

TEST(Oracles, SizeGuards) {
  EXPECT_THROW(brute_hamiltonian(fixtures::path(19), HamMode::path), SizeGuardError);
  EXPECT_THROW(brute_longest_path(fixtures::path(17)), SizeGuardError);
  EXPECT_THROW(brute_steiner_path(fixtures::path(15), std::vector<Vertex>{0}), SizeGuardError);
  EXPECT_THROW(brute_mlst(fixtures::path(13)), SizeGuardError);
  EXPECT_THROW(enumerate_in_class(11), SizeGuardError);
}

TEST(Oracles, DeadlineFires) {
  Deadline dl(std::chrono::milliseconds(0));
  // a large graph with no Hamiltonian cycle forces a long search
  EXPECT_THROW(brute_hamiltonian(fixtures::complete_bipartite(8, 9), HamMode::cycle, dl), OracleTimeout);
}

// Two independent longest-path implementations must agree, on arbitrary
// (not only in-class) connected graphs.
TEST(Oracles, LongestPathSearchAgreesWithSubsetDp) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 11);
    std::vector<Edge> es;
    for (int v = 1; v < n; ++v) es.emplace_back(static_cast<int>(rng() % v), v);  // spanning tree
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 4 == 0 && std::find(es.begin(), es.end(), Edge{u, v}) == es.end()) es.emplace_back(u, v);
    auto g = Graph::from_edges(n, es);
    auto p = brute_longest_path(g);
    ASSERT_TRUE(validate_sequence(g, p));
    ASSERT_EQ(static_cast<int>(p.length()), longest_path_length_dp(g)) << to_edge_list(g);
    auto ham = brute_hamiltonian(g, HamMode::path);
    ASSERT_EQ(ham.has_value(), static_cast<int>(p.length()) == n);
    if (n <= 9) {
      auto t = brute_mlst(g);
      ASSERT_TRUE(validate_tree(g, t));
      if (ham) { ASSERT_EQ(t.leaf_count, n == 1 ? 0 : 2); }
    }
  }
}

TEST(Enumerate, SmallLevels) {
  auto all = enumerate_in_class(4);
  auto contains = [&](const Graph& h) {
    auto form = canonical_form(h);
    return std::any_of(all.begin(), all.end(), [&](const Graph& g) { return canonical_form(g) == form; });
  };
  EXPECT_TRUE(contains(fixtures::path(2)));
  EXPECT_TRUE(contains(fixtures::complete_bipartite(2, 2)));
  EXPECT_TRUE(contains(fixtures::path(4)));
  EXPECT_TRUE(contains(fixtures::star(3)));
}

// Counts per vertex count, as produced by tests/scripts/count_in_class.py
// (networkx atlas plus exact isomorphism tests), frozen here.
TEST(Enumerate, CountsMatchIndependentScript) {
  const std::vector<int> expected{1, 1, 1, 3, 4, 10, 16, 36, 64, 136};
  std::vector<int> got(11, 0);
  std::set<std::string> forms;
  int total = 0;
  for_each_in_class(10, [&](const Graph& g) {
    ++got[g.order()];
    ++total;
    forms.insert(canonical_form(g));
    ASSERT_TRUE(classify(g).in_class);
  });
  EXPECT_EQ(std::vector<int>(got.begin() + 1, got.end()), expected);
  EXPECT_EQ(static_cast<int>(forms.size()), total);
}

TEST(Enumerate, ExcludesForbiddenSixVertexGraphs) {
  auto six = enumerate_in_class(6);
  auto c6 = canonical_form(fixtures::cycle(6));
  auto p6 = canonical_form(fixtures::path(6));
  for (const auto& g : six) {
    EXPECT_NE(canonical_form(g), c6);
    EXPECT_NE(canonical_form(g), p6);
  }
}

TEST(CanonicalForm, InvariantUnderRelabelling) {
  std::mt19937_64 rng(3);
  for (const auto& g : enumerate_in_class(8)) {
    std::vector<Vertex> perm(static_cast<std::size_t>(g.order()));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    ASSERT_EQ(canonical_form(g.relabeled(perm)), canonical_form(g));
  }
}
