#include <gtest/gtest.h>

#include "bnsigma/error.hpp"
#include "bnsigma/sections.hpp"
#include "generators.hpp"

using namespace bnsigma;
using bnsigma::gen::Rng;

namespace {

CyclicWord rel(const char* text) { return CyclicWord(parse_letters(text)); }

}  // namespace

TEST(CycleWalk, Examples) {
  auto w = cycle_walk(rel("[x1,x2]"), Character({1, -1}));
  EXPECT_EQ(w.heights, (std::vector<std::int64_t>{0, 1, 0, -1}));
  EXPECT_EQ(w.min_height, -1);
  auto v = cycle_walk(rel("x1 x2"), Character({1, -1}));
  EXPECT_EQ(v.heights, (std::vector<std::int64_t>{0, 1}));
  EXPECT_EQ(v.min_height, 0);
  auto z = cycle_walk(rel("[x1,x2]"), Character({0, 0}));
  EXPECT_EQ(z.heights, (std::vector<std::int64_t>{0, 0, 0, 0}));
  EXPECT_THROW(cycle_walk(rel("x1 x2"), Character({1, 0})), Error);
}

TEST(Sections, LowerExamples) {
  auto s = lower_section(rel("[x1,x2]"), Character({1, -1}));
  EXPECT_EQ(s.vertices, (std::vector<std::size_t>{3}));
  EXPECT_TRUE(s.full_edges.empty());
  auto d = lower_section(rel("[x1,x2]^2"), Character({1, -1}));
  EXPECT_EQ(d.vertices, (std::vector<std::size_t>{3, 7}));
  EXPECT_TRUE(d.full_edges.empty());
  auto e = lower_section(rel("x1 x2 x1 x2^-1"), Character({0, -1}));
  EXPECT_EQ(e.vertices, (std::vector<std::size_t>{2, 3}));
  EXPECT_EQ(e.full_edges, (std::vector<std::size_t>{2}));
  ASSERT_EQ(e.arcs.size(), 1u);
  EXPECT_EQ(e.arcs[0].kind, ArcKind::Edge);
  EXPECT_EQ(e.arcs[0].inner_letters.front(), Letter(1, 1));
}

TEST(Sections, UpperExamples) {
  EXPECT_EQ(upper_section(rel("[x1,x2]"), Character({1, -1})).vertices, (std::vector<std::size_t>{1}));
  EXPECT_EQ(upper_section(rel("[x1,x2]^2"), Character({1, -1})).vertices.size(), 2u);
  auto c = upper_section(rel("[x1,x2]"), Character({0, 0}));
  ASSERT_EQ(c.arcs.size(), 1u);
  EXPECT_EQ(c.arcs[0].kind, ArcKind::Circle);
}

TEST(Sections, MatchesDirectScan) {
  Rng rng(31);
  for (int t = 0; t < 1000; ++t) {
    Character phi({static_cast<std::int64_t>(rng() % 3), -static_cast<std::int64_t>(rng() % 3)});
    if (phi.is_zero()) continue;
    CyclicWord r = gen::random_balanced_relator(rng, phi, 40);
    auto s = lower_section(r, phi);
    // Direct scan: heights by prefix sums, min by linear pass.
    std::vector<std::int64_t> h(r.size());
    std::int64_t acc = 0, lo = 0;
    for (std::size_t k = 0; k < r.size(); ++k) {
      h[k] = acc;
      lo = k == 0 ? acc : std::min(lo, acc);
      acc += phi.on(r[k]);
    }
    std::vector<std::size_t> verts, edges;
    for (std::size_t k = 0; k < r.size(); ++k)
      if (h[k] == lo) verts.push_back(k);
    for (std::size_t k = 0; k < r.size(); ++k)
      if (h[k] == lo && h[(k + 1) % r.size()] == lo) edges.push_back(k);
    EXPECT_EQ(s.height, lo);
    EXPECT_EQ(s.vertices, verts);
    EXPECT_EQ(s.full_edges, edges);
    if (edges.size() < r.size()) EXPECT_EQ(s.components, verts.size() - edges.size());
  }
}

TEST(Classify, Examples) {
  auto u = classify(parse_presentation("<x1,x2 | [x1,x2]>"), Character({1, -1}));
  EXPECT_EQ(u.status, ConditionStatus::Unique);
  EXPECT_EQ(u.matching, (std::vector<int>{1}));
  auto r = classify(parse_presentation("<x1,x2 | [x1,x2]^2>"), Character({1, -1}));
  EXPECT_EQ(r.status, ConditionStatus::Repeated);
  EXPECT_EQ(r.repeated_relator, std::optional<std::size_t>(0));
  auto bs = classify(parse_presentation("<x2,x1 | x1^-1 x2 x1 x2^-2>"), Character({0, -1}));
  EXPECT_EQ(bs.status, ConditionStatus::Neither);
  EXPECT_THROW(classify(parse_presentation("<x1,x2 | [x1,x2]>"), Character({-1, 1})), Error);
}

TEST(Classify, ScalingInvariance) {
  Rng rng(32);
  for (int t = 0; t < 500; ++t) {
    auto [p, phi] = gen::random_normalized_tuple(rng, 1 + static_cast<int>(rng() % 3), 20);
    auto a = classify(p, phi);
    auto b = classify(p, phi.scaled(2 + static_cast<std::int64_t>(rng() % 3)));
    EXPECT_EQ(a.status, b.status);
    EXPECT_EQ(a.matching, b.matching);
  }
}

TEST(Classify, LeastMatching) {
  EXPECT_EQ(least_perfect_matching({{1, 2}, {1}}), (std::vector<int>{2, 1}));
  EXPECT_EQ(least_perfect_matching({{1, 2}, {1, 2}}), (std::vector<int>{1, 2}));
  EXPECT_TRUE(least_perfect_matching({{1}, {1}}).empty());
}

TEST(Classify, TwoMinimaForDifferentGeneratorsIsNeither) {
  // Minima of x3 x1 x3 x2 sit between x3 and x1, and between x3 and x2.
  Presentation p(3, {CyclicWord::of({3, 1, 3, 2}), CyclicWord::of({3, 2})});
  auto r = classify(p, Character({1, 1, -1}));
  EXPECT_FALSE(r.witnesses[0].single_generator);
  EXPECT_FALSE(r.witnesses[0].doubled_generator);
  EXPECT_EQ(r.witnesses[1].single_generator, std::optional<int>(2));
  EXPECT_EQ(r.status, ConditionStatus::Neither);
}
