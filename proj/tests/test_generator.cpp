#include "test_util.hpp"

using namespace nno;
using namespace nno::testing;

namespace {
GenSpec spec(int i, int j, std::vector<int> a2, std::vector<int> b2) {
  GenSpec s;
  s.i = i;
  s.j = j;
  s.a2_degrees = std::move(a2);
  s.b2_degrees = std::move(b2);
  return s;
}
}  // namespace

TEST(Generate, Ex1UpToLabels) {
  auto g = generate(spec(3, 3, {2}, {2})).graph;
  EXPECT_EQ(canonical_form(g), canonical_form(fixtures::ex1()));
}

TEST(Generate, K22) {
  auto g = generate(spec(2, 2, {}, {})).graph;
  EXPECT_EQ(canonical_form(g), canonical_form(fixtures::complete_bipartite(2, 2)));
}

TEST(Generate, Ex6UpToLabels) {
  auto g = generate(spec(3, 3, {1}, {1})).graph;
  EXPECT_EQ(canonical_form(g), canonical_form(fixtures::ex6()));
}

TEST(Generate, RejectsInvalidSpecs) {
  EXPECT_THROW(generate(spec(0, 2, {}, {})), InputError);
  EXPECT_THROW(generate(spec(2, 2, {2}, {})), InputError);     // tail sees the whole side
  EXPECT_THROW(generate(spec(3, 3, {2, 1}, {})), InputError);  // not non-decreasing
  EXPECT_THROW(generate(spec(3, 3, {0}, {})), InputError);
}

TEST(Generate, DeterministicAndShuffled) {
  auto s = spec(4, 3, {1, 2, 2}, {1, 3});
  s.shuffle = true;
  s.seed = 99;
  auto a = generate(s).graph, b = generate(s).graph;
  EXPECT_EQ(a, b);
  EXPECT_EQ(to_edge_list(a), to_edge_list(b));
  s.shuffle = false;
  auto plain = generate(s).graph;
  EXPECT_EQ(canonical_form(plain), canonical_form(a));
  EXPECT_EQ(plain.label(0), "x1");
}

TEST(Generate, RandomSpecsAreAcceptedAndRecovered) {
  int rejections = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    auto s = random_spec(seed, 14);
    ASSERT_NO_THROW(validate_spec(s));
    auto gen = generate(s);
    rejections += gen.rejections;
    const auto& g = gen.graph;
    ASSERT_LE(g.order(), 14);
    ASSERT_TRUE(classify(g).in_class);
    auto d = decompose(g);
    ASSERT_TRUE(check_lemmas(d).ok());
    ASSERT_EQ(d.i() + d.j() + d.p() + d.q(), g.order());
    ASSERT_EQ(random_spec(seed, 14).a2_degrees, s.a2_degrees);
  }
  EXPECT_EQ(rejections, 0);
}

// Every in-class graph up to eight vertices arises from some spec.
TEST(Generate, CoversEnumeratedGraphs) {
  for_each_in_class(8, [&](const Graph& g) {
    if (g.order() < 2) return;
    auto d = decompose(g);
    std::vector<int> a2, b2;
    for (Vertex u : d.a2) a2.push_back(d.degree(u));
    for (Vertex v : d.b2) b2.push_back(d.degree(v));
    auto built = generate(spec(d.i(), d.j(), a2, b2)).graph;
    ASSERT_EQ(canonical_form(built), canonical_form(g)) << to_edge_list(g);
  });
}
