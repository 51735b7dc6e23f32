#include "test_util.hpp"

using namespace nno;
using namespace nno::testing;

namespace {

Bipartition sides(const Graph& g) { return std::get<Bipartition>(is_bipartite(g)); }

// Every maximal biclique, by checking all pairs of vertex subsets.
std::set<Biclique> brute_bicliques(const Graph& g, const Bipartition& b) {
  std::set<Biclique> out;
  const auto &A = b.side_a, &B = b.side_b;
  auto complete = [&](const std::vector<Vertex>& l, const std::vector<Vertex>& r) {
    for (Vertex x : l)
      for (Vertex y : r)
        if (!g.adjacent(x, y)) return false;
    return true;
  };
  for (unsigned ma = 1; ma < (1u << A.size()); ++ma)
    for (unsigned mb = 1; mb < (1u << B.size()); ++mb) {
      std::vector<Vertex> l, r;
      for (std::size_t k = 0; k < A.size(); ++k)
        if (ma >> k & 1u) l.push_back(A[k]);
      for (std::size_t k = 0; k < B.size(); ++k)
        if (mb >> k & 1u) r.push_back(B[k]);
      if (!complete(l, r)) continue;
      bool maximal = true;
      for (Vertex x : A)
        if (!std::binary_search(l.begin(), l.end(), x) && complete({x}, r)) maximal = false;
      for (Vertex y : B)
        if (!std::binary_search(r.begin(), r.end(), y) && complete(l, {y})) maximal = false;
      if (maximal) out.insert({l, r});
    }
  return out;
}

}  // namespace

TEST(Bicliques, Examples) {
  auto k22 = fixtures::complete_bipartite(2, 2);
  auto one = enumerate_maximal_bicliques(k22, sides(k22));
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].left.size() + one[0].right.size(), 4u);

  auto star = fixtures::star(3);
  auto s = enumerate_maximal_bicliques(star, sides(star));
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].left, (std::vector<Vertex>{0}));
  EXPECT_EQ(s[0].right.size(), 3u);

  auto ex1 = fixtures::ex1();
  auto all = enumerate_maximal_bicliques(ex1, sides(ex1));
  auto has = [&](std::initializer_list<const char*> l, std::initializer_list<const char*> r) {
    Biclique b{sorted(L(ex1, l)), sorted(L(ex1, r))};
    return std::find(all.begin(), all.end(), b) != all.end();
  };
  EXPECT_TRUE(has({"x1", "x2", "x3"}, {"y1", "y2", "y3"}));
  EXPECT_TRUE(has({"x1", "x2", "x3", "u1"}, {"y1", "y2"}));
  EXPECT_TRUE(has({"x1", "x2"}, {"y1", "y2", "y3", "v1"}));
}

TEST(Bicliques, MatchExhaustiveSubsetCheck) {
  for_each_in_class(8, [&](const Graph& g) {
    if (g.order() < 2) return;
    auto b = sides(g);
    auto got = enumerate_maximal_bicliques(g, b);
    std::set<Biclique> mine(got.begin(), got.end());
    ASSERT_EQ(mine, brute_bicliques(g, b)) << to_edge_list(g);
  });
}

TEST(Decompose, CompleteBipartiteHasNoTails) {
  auto d = decompose(fixtures::complete_bipartite(3, 3));
  EXPECT_EQ(d.i(), 3);
  EXPECT_EQ(d.j(), 3);
  EXPECT_EQ(d.p(), 0);
  EXPECT_EQ(d.q(), 0);
  EXPECT_TRUE(check_lemmas(d).ok());
}

TEST(Decompose, Ex1) {
  auto g = fixtures::ex1();
  auto d = decompose(g);
  EXPECT_EQ(d.a1, L(g, {"x1", "x2", "x3"}));
  EXPECT_EQ(d.b1, L(g, {"y1", "y2", "y3"}));
  EXPECT_EQ(d.a2, L(g, {"u1"}));
  EXPECT_EQ(d.b2, L(g, {"v1"}));
  EXPECT_TRUE(check_lemmas(d).ok());
}

TEST(Decompose, Ex2) {
  auto g = fixtures::ex2();
  auto d = decompose(g);
  EXPECT_EQ(sorted(d.a1), L(g, {"x1", "x2"}));
  EXPECT_EQ(d.b1, L(g, {"y1", "y2"}));
  EXPECT_EQ(d.a2, L(g, {"u1", "u2"}));
  EXPECT_EQ(d.q(), 0);
}

TEST(Decompose, SingleVertexAndEdge) {
  auto k1 = decompose(Graph::from_edges(1, {}));
  EXPECT_EQ(k1.i(), 1);
  EXPECT_EQ(k1.j(), 0);
  auto k2 = decompose(fixtures::path(2));
  EXPECT_EQ(k2.i() + k2.j(), 2);
}

TEST(Decompose, RejectsOutOfClass) {
  EXPECT_THROW(decompose(fixtures::cycle(6)), NotInClassError);
  EXPECT_THROW(decompose(fixtures::path(5)), NotInClassError);
  EXPECT_THROW(decompose(fixtures::cycle(3)), NotInClassError);
}

TEST(Decompose, MirrorSwapsRoles) {
  auto d = decompose(fixtures::ex1());
  auto m = mirror(d);
  EXPECT_EQ(m.a1, d.b1);
  EXPECT_EQ(m.b2, d.a2);
  EXPECT_EQ(m.sides.side_a, d.sides.side_b);
  EXPECT_TRUE(check_lemmas(m).ok());
}

TEST(CheckLemmas, ReportsHandBuiltViolation) {
  auto d = decompose(fixtures::ex1());
  auto g = d.g();
  // u1 moved into the tail list of a graph where it sees all of B1
  std::vector<Edge> es = g.edges();
  es.emplace_back(*g.find("u1"), *g.find("y3"));
  auto bigger = std::make_shared<const Graph>(Graph::from_edges(g.order(), es, g.labels()));
  Decomposition bad = d;
  bad.graph = bigger;
  auto rep = check_lemmas(bad);
  EXPECT_FALSE(rep.ok());
  ASSERT_TRUE(rep.first_violation());
  EXPECT_NE(rep.first_violation()->name.find("tail misses a core vertex"), std::string::npos) << rep.first_violation()->name;
}

TEST(Decompose, EveryInClassGraphUpToNine) {
  for_each_in_class(9, [&](const Graph& g) {
    auto d = decompose(g);
    auto rep = check_lemmas(d);
    ASSERT_TRUE(rep.ok()) << rep.first_violation()->name << "\n" << to_edge_list(g);
    ASSERT_EQ(d.i() + d.j() + d.p() + d.q(), g.order());
  });
}

TEST(Decompose, JsonShape) {
  auto j = to_json(decompose(fixtures::ex1()));
  EXPECT_EQ(j["i"], 3);
  EXPECT_EQ(j["a2"], nlohmann::json::array({4}));
  EXPECT_EQ(j["lemmas"]["ok"], true);
}
