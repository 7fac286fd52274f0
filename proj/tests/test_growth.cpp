#include <gtest/gtest.h>

#include "bnsigma/error.hpp"
#include "bnsigma/growth.hpp"
#include "generators.hpp"

using namespace bnsigma;
using bnsigma::gen::Rng;

namespace {

AutomorphismSpec nielsen() { return parse_automorphism("x -> x; y -> y x\ninverse:\nx -> x; y -> y x^-1"); }

}  // namespace

TEST(Automorphism, ParseAndVerify) {
  auto phi = nielsen();
  EXPECT_EQ(phi.rank, 2);
  EXPECT_TRUE(phi.verified);
  EXPECT_EQ(phi.names, (std::vector<std::string>{"x", "y"}));
  auto unverified = parse_automorphism("x1 -> x1\nx2 -> x2 x1  # comment");
  EXPECT_FALSE(unverified.verified);
  EXPECT_THROW(parse_automorphism("x -> x; y -> y x\ninverse:\nx -> x; y -> y x"), Error);
  EXPECT_THROW(parse_automorphism("x -> x; x -> y"), Error);
  EXPECT_THROW(parse_automorphism("x -> x y"), Error);
  EXPECT_THROW(parse_automorphism("x x"), Error);
}

TEST(Automorphism, ApplyExamples) {
  auto phi = nielsen();
  Word y = Word::of({2});
  EXPECT_EQ(apply(phi, y), Word::of({2, 1}));
  EXPECT_EQ(apply(phi, apply(phi, y)), Word::of({2, 1, 1}));
  auto id = parse_automorphism("a -> a; b -> b");
  Rng rng(71);
  for (int t = 0; t < 50; ++t) {
    Word w = gen::random_reduced_word(rng, 2, rng() % 10);
    EXPECT_EQ(apply(id, w), w);
  }
  EXPECT_THROW(apply(phi, Word::of({3})), Error);
}

TEST(Automorphism, HomomorphismAndInverse) {
  auto phi = parse_automorphism("a -> a b; b -> b c; c -> c\ninverse:\na -> a c b^-1; b -> b c^-1; c -> c");
  ASSERT_TRUE(phi.verified);
  auto inv = phi.inverse();
  Rng rng(72);
  for (int t = 0; t < 500; ++t) {
    Word u = gen::random_reduced_word(rng, 3, rng() % 12);
    Word v = gen::random_reduced_word(rng, 3, rng() % 12);
    EXPECT_EQ(apply(phi, concat(u, v)), concat(apply(phi, u), apply(phi, v)));
    EXPECT_EQ(apply(inv, apply(phi, u)), u);
  }
}

TEST(Growth, Sequences) {
  auto lin = growth_sequence(nielsen(), Word::of({2}), 20);
  ASSERT_EQ(lin.lengths.size(), 21u);
  for (std::size_t n = 0; n <= 20; ++n) EXPECT_EQ(lin.lengths[n], n + 1);
  auto id = growth_sequence(parse_automorphism("x -> x; y -> y"), Word::of({1, 2, -1}), 10);
  for (auto v : id.lengths) EXPECT_EQ(v, 1u);  // conjugate of y
  auto fib = growth_sequence(parse_automorphism("x -> y; y -> x y"), Word::of({1}), 12);
  std::vector<std::size_t> expected = {1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233};
  EXPECT_EQ(fib.lengths, expected);
  EXPECT_THROW(growth_sequence(nielsen(), Word::of({2}), 0), Error);
}

TEST(Growth, TruncationAtCap) {
  auto seq = growth_sequence(parse_automorphism("x -> y; y -> x y"), Word::of({1}), 64, 1000);
  EXPECT_TRUE(seq.truncated);
  EXPECT_LE(seq.lengths.back(), 1000u);
  EXPECT_LT(seq.lengths.size(), 65u);
}

TEST(Growth, EstimatorExamples) {
  std::vector<std::size_t> linear, constant, fib = {1, 1};
  for (std::size_t n = 0; n <= 64; ++n) linear.push_back(n + 1);
  constant.assign(65, 3);
  while (fib.size() < 30) fib.push_back(fib[fib.size() - 1] + fib[fib.size() - 2]);
  EXPECT_EQ(estimate_degree(linear).label(), "POLYNOMIAL(1)");
  EXPECT_EQ(estimate_degree(constant).label(), "POLYNOMIAL(0)");
  EXPECT_EQ(estimate_degree(fib).label(), "EXPONENTIAL");
  std::vector<std::size_t> cubic;
  for (std::size_t n = 0; n <= 64; ++n) cubic.push_back(n * n * n + 1);
  EXPECT_EQ(estimate_degree(cubic).label(), "POLYNOMIAL(3)");
  EXPECT_THROW(estimate_degree(std::vector<std::size_t>(10, 1)), Error);
}

TEST(Growth, ScaleRobust) {
  Rng rng(73);
  std::vector<std::vector<std::size_t>> seqs;
  for (int d = 0; d <= 3; ++d) {
    std::vector<std::size_t> s;
    for (std::size_t n = 0; n <= 64; ++n) {
      std::size_t v = 1;
      for (int k = 0; k < d; ++k) v *= n + 1;
      s.push_back(v);
    }
    seqs.push_back(s);
  }
  std::vector<std::size_t> fib = {1, 1};
  while (fib.size() < 40) fib.push_back(fib[fib.size() - 1] + fib[fib.size() - 2]);
  seqs.push_back(fib);
  for (const auto& s : seqs) {
    const std::string base = estimate_degree(s).label();
    for (std::size_t c : {2u, 7u, 100u}) {
      std::vector<std::size_t> scaled = s;
      for (auto& v : scaled) v *= c;
      EXPECT_EQ(estimate_degree(scaled).label(), base);
    }
  }
}

TEST(Growth, QuadraticAndLevitt) {
  auto phi = parse_automorphism("a -> a; b -> b a; c -> c b\ninverse:\na -> a; b -> b a^-1; c -> c a b^-1");
  ASSERT_TRUE(phi.verified);
  auto est = estimate_degree(growth_sequence(phi, Word::of({3}), 64));
  EXPECT_EQ(est.label(), "POLYNOMIAL(2)");
  EXPECT_TRUE(check_levitt_bound(phi, est));
  GrowthEstimate fake;
  fake.kind = GrowthKind::Polynomial;
  fake.degree = 1;
  EXPECT_TRUE(check_levitt_bound(nielsen(), fake));  // rank 2: d <= n - 1 = 1
  fake.degree = 2;
  EXPECT_FALSE(check_levitt_bound(nielsen(), fake));
  GrowthEstimate expo;
  expo.kind = GrowthKind::Exponential;
  EXPECT_THROW(check_levitt_bound(nielsen(), expo), Error);
}
