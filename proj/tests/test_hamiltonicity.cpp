#include "test_util.hpp"

using namespace nno;
using namespace nno::testing;

TEST(HamCycle, K22) {
  auto g = fixtures::complete_bipartite(2, 2);
  auto dec = hamiltonian_cycle(decompose(g));
  ASSERT_TRUE(dec.yes);
  EXPECT_TRUE(same_cycle(dec.witness->seq, {0, 2, 1, 3}));
}

TEST(HamCycle, Ex1) {
  auto g = fixtures::ex1();
  auto dec = hamiltonian_cycle(decompose(g));
  ASSERT_TRUE(dec.yes);
  EXPECT_EQ(dec.witness->seq, L(g, {"y1", "u1", "y2", "x1", "v1", "x2", "y3", "x3"}));
  EXPECT_TRUE(validate_hamiltonian(g, *dec.witness));
  ASSERT_TRUE(dec.trace);
  EXPECT_EQ(dec.trace->segments.size(), 3u);
}

TEST(HamCycle, Ex6HasCutCertificate) {
  auto g = fixtures::ex6();
  auto dec = hamiltonian_cycle(decompose(g));
  EXPECT_FALSE(dec.yes);
  ASSERT_TRUE(dec.certificate);
  EXPECT_EQ(dec.certificate->separator, L(g, {"y1"}));
  EXPECT_EQ(dec.certificate->claimed_components, 2);
  EXPECT_EQ(dec.certificate->mode, CutMode::cycle_bound);
  EXPECT_TRUE(validate_cut(g, *dec.certificate));
}

TEST(HamCycle, UnbalancedSidesCutOnSmallerSide) {
  auto g = fixtures::ex2();
  auto dec = hamiltonian_cycle(decompose(g));
  EXPECT_FALSE(dec.yes);
  ASSERT_TRUE(dec.certificate);
  EXPECT_EQ(dec.certificate->separator, L(g, {"y1", "y2"}));
  EXPECT_TRUE(validate_cut(g, *dec.certificate));
}

TEST(HamCycle, TinyGraphsSayNoWithoutCertificate) {
  auto k2 = hamiltonian_cycle(decompose(fixtures::path(2)));
  EXPECT_FALSE(k2.yes);
  EXPECT_FALSE(k2.certificate);
  auto k1 = hamiltonian_cycle(decompose(Graph::from_edges(1, {})));
  EXPECT_FALSE(k1.yes);
  EXPECT_FALSE(k1.certificate);
}

TEST(HamPath, Ex6) {
  auto g = fixtures::ex6();
  auto dec = hamiltonian_path(decompose(g));
  ASSERT_TRUE(dec.yes);
  EXPECT_EQ(dec.witness->seq, L(g, {"u1", "y1", "x2", "y2", "x3", "y3", "x1", "v1"}));
}

TEST(HamPath, Ex2SidesTooFarApart) {
  auto g = fixtures::ex2();
  auto dec = hamiltonian_path(decompose(g));
  EXPECT_FALSE(dec.yes);
  ASSERT_TRUE(dec.certificate);
  EXPECT_EQ(dec.certificate->mode, CutMode::path_bound);
  EXPECT_TRUE(validate_cut(g, *dec.certificate));
}

TEST(HamPath, K12UsesMirror) {
  auto g = fixtures::star(2);  // centre 0, leaves 1 and 2
  auto dec = hamiltonian_path(decompose(g));
  ASSERT_TRUE(dec.yes);
  EXPECT_TRUE(same_path(dec.witness->seq, {1, 0, 2}));
}

TEST(HamPath, SingleVertex) {
  auto dec = hamiltonian_path(decompose(Graph::from_edges(1, {})));
  EXPECT_TRUE(dec.yes);
  EXPECT_EQ(dec.witness->length(), 1u);
}

TEST(Hamiltonicity, MatchesOracleOnEveryInClassGraphUpToNine) {
  for_each_in_class(9, [&](const Graph& g) {
    auto d = decompose(g);
    for (auto mode : {HamMode::cycle, HamMode::path}) {
      auto dec = mode == HamMode::cycle ? hamiltonian_cycle(d) : hamiltonian_path(d);
      auto truth = brute_hamiltonian(g, mode);
      ASSERT_EQ(dec.yes, truth.has_value()) << to_edge_list(g);
      if (dec.yes) { ASSERT_TRUE(validate_hamiltonian(g, *dec.witness)); }
      if (dec.certificate) { ASSERT_TRUE(validate_cut(g, *dec.certificate)); }
      if (!dec.yes && g.order() >= 4) { ASSERT_TRUE(dec.certificate) << to_edge_list(g); }
    }
  });
}

TEST(Hamiltonicity, Json) {
  auto j = to_json(hamiltonian_cycle(decompose(fixtures::ex6())));
  EXPECT_EQ(j["answer"], "no");
  EXPECT_EQ(j["certificate"]["separator"], nlohmann::json::array({5}));
  EXPECT_EQ(j["certificate"]["claimedComponents"], 2);
}
