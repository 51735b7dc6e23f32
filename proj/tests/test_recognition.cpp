#include "test_util.hpp"

using namespace nno;
using namespace nno::testing;

namespace {

// Brute-force reference: is the subgraph induced on `mask` a cycle / path?
bool induced_shape(const Graph& g, unsigned mask, bool cycle) {
  std::vector<Vertex> vs;
  for (Vertex v = 0; v < g.order(); ++v)
    if (mask >> v & 1u) vs.push_back(v);
  int ones = 0;
  for (Vertex v : vs) {
    int d = 0;
    for (Vertex w : vs) d += g.adjacent(v, w);
    if (d == 1) ++ones;
    else if (d != 2) return false;
  }
  if (ones != (cycle ? 0 : 2)) return false;
  return connected_components(g.induced(vs)).count == 1;
}

bool naive_has(const Graph& g, int min_size, int max_size, bool cycle) {
  for (unsigned m = 0; m < (1u << g.order()); ++m) {
    int k = std::popcount(m);
    if (k >= min_size && k <= max_size && induced_shape(g, m, cycle)) return true;
  }
  return false;
}

bool naive_bipartite(const Graph& g) {
  for (unsigned m = 0; m < (1u << g.order()); ++m) {
    bool ok = true;
    for (auto [u, v] : g.edges()) ok &= ((m >> u) & 1u) != ((m >> v) & 1u);
    if (ok) return true;
  }
  return false;
}

}  // namespace

TEST(Bipartite, Examples) {
  auto k22 = fixtures::complete_bipartite(2, 2);
  auto b = std::get<Bipartition>(is_bipartite(k22));
  EXPECT_EQ(b.side_a, (std::vector<Vertex>{0, 1}));
  EXPECT_EQ(b.side_b, (std::vector<Vertex>{2, 3}));
  auto odd = std::get<VertexSequence>(is_bipartite(fixtures::cycle(3)));
  EXPECT_EQ(sorted(odd.seq), (std::vector<Vertex>{0, 1, 2}));
  auto ex1 = std::get<Bipartition>(is_bipartite(fixtures::ex1()));
  EXPECT_EQ(ex1.side_a.size(), 4u);
  EXPECT_EQ(ex1.side_b.size(), 4u);
}

TEST(Bipartite, OddCycleWitnessIsAClosedWalkOfOddLength) {
  auto g = fixtures::cycle(7);
  auto odd = std::get<VertexSequence>(is_bipartite(g));
  EXPECT_TRUE(validate_sequence(g, odd));
  EXPECT_EQ(odd.length() % 2, 1u);
}

TEST(Bipartite, DisconnectedIsAnInputError) {
  std::vector<Edge> es{{0, 1}, {2, 3}};
  EXPECT_THROW(is_bipartite(Graph::from_edges(4, es)), InputError);
}

TEST(ChordlessCycle, Examples) {
  auto c6 = fixtures::cycle(6);
  auto w = find_chordless_cycle_ge6(c6);
  ASSERT_TRUE(w);
  EXPECT_EQ(sorted(w->seq), (std::vector<Vertex>{0, 1, 2, 3, 4, 5}));
  EXPECT_FALSE(find_chordless_cycle_ge6(fixtures::complete_bipartite(2, 2)));
  std::vector<Edge> es{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 3}};
  EXPECT_FALSE(find_chordless_cycle_ge6(Graph::from_edges(6, es)));
  EXPECT_TRUE(find_chordless_cycle_ge6(fixtures::cycle(8)));
}

TEST(InducedP5, Examples) {
  auto p5 = fixtures::path(5);
  auto w = find_induced_p5(p5);
  ASSERT_TRUE(w);
  EXPECT_TRUE(same_path(w->seq, {0, 1, 2, 3, 4}));
  EXPECT_FALSE(find_induced_p5(fixtures::complete_bipartite(3, 3)));
  EXPECT_FALSE(find_induced_p5(fixtures::ex1()));
}

TEST(Classify, Examples) {
  EXPECT_TRUE(classify(fixtures::ex1()).in_class);
  auto c6 = classify(fixtures::cycle(6));
  EXPECT_FALSE(c6.in_class);
  EXPECT_TRUE(c6.chordless_cycle);
  auto p5 = classify(fixtures::path(5));
  EXPECT_FALSE(p5.in_class);
  EXPECT_TRUE(p5.induced_p5);
  auto k3 = classify(fixtures::cycle(3));
  EXPECT_FALSE(k3.is_bipartite);
  EXPECT_TRUE(k3.odd_cycle);
}

TEST(Classify, JsonKeys) {
  auto j = to_json(classify(fixtures::cycle(6)));
  EXPECT_EQ(j["inClass"], false);
  EXPECT_EQ(j["chordlessCycle"].size(), 6u);
  EXPECT_TRUE(j["oddCycle"].is_null());
}

TEST(Classify, AgreesWithSubsetSearchOnEveryLabelledGraphUpToSix) {
  for (int n = 1; n <= 6; ++n)
    for_each_labelled_graph(n, [&](const Graph& g) {
      auto r = classify(g);
      ASSERT_TRUE(validate_report(g, r)) << validate_report(g, r).violation << '\n' << to_edge_list(g);
      ASSERT_EQ(r.is_connected, connected_components(g).count == 1);
      ASSERT_EQ(r.is_bipartite, naive_bipartite(g)) << to_edge_list(g);
      if (r.is_bipartite) { ASSERT_EQ(r.is_chordal_bipartite, !naive_has(g, 6, n, true)) << to_edge_list(g); }
      ASSERT_EQ(r.is_p5_free, !naive_has(g, 5, 5, false)) << to_edge_list(g);
    });
}

TEST(Classify, AgreesWithSubsetSearchOnRandomBipartiteGraphs) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    const int a = 3 + static_cast<int>(rng() % 4), b = 3 + static_cast<int>(rng() % 4);
    std::vector<Edge> es;
    for (int x = 0; x < a; ++x)
      for (int y = 0; y < b; ++y)
        if (rng() % 2) es.emplace_back(x, a + y);
    auto g = Graph::from_edges(a + b, es);
    auto r = classify(g);
    ASSERT_TRUE(validate_report(g, r)) << validate_report(g, r).violation << '\n' << to_edge_list(g);
    ASSERT_EQ(r.is_chordal_bipartite, !naive_has(g, 6, a + b, true)) << to_edge_list(g);
    ASSERT_EQ(r.is_p5_free, !naive_has(g, 5, 5, false)) << to_edge_list(g);
  }
}

TEST(ValidateReport, CatchesForgedWitness) {
  ClassReport forged;
  forged.induced_p5 = VertexSequence{{0, 1, 2, 3, 4}, SequenceKind::path};
  EXPECT_FALSE(validate_report(fixtures::cycle(5), forged));
  ClassReport cyc;
  cyc.chordless_cycle = VertexSequence{{0, 1, 2, 3}, SequenceKind::cycle};
  EXPECT_FALSE(validate_report(fixtures::cycle(4), cyc));
}
