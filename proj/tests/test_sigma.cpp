#include <gtest/gtest.h>

#include "bnsigma/error.hpp"
#include "bnsigma/sigma.hpp"

using namespace bnsigma;

TEST(Sigma, CommutatorIsInSigma) {
  auto v = decide(parse_presentation("<x1,x2 | [x1,x2]>"), Character({1, -1}), false);
  EXPECT_EQ(v.membership, Membership::InSigma);
  EXPECT_FALSE(v.justification.empty());
}

TEST(Sigma, CommutatorSquareNeedsHypothesis) {
  Presentation p = parse_presentation("<x1,x2 | [x1,x2]^2>");
  auto with = decide(p, Character({1, -1}), true);
  EXPECT_EQ(with.membership, Membership::NotInSigma);
  ASSERT_TRUE(with.leading_unit);
  EXPECT_EQ(with.leading_unit->status, UnitStatus::NonUnit);
  auto without = decide(p, Character({1, -1}), false);
  EXPECT_EQ(without.membership, Membership::Unknown);
}

TEST(Sigma, BaumslagSolitarUnknown) {
  Presentation p = parse_presentation("<x1,x2 | x1 x2 x1^-1 x2^-2>");
  EXPECT_EQ(decide(p, Character({1, 0}), true).membership, Membership::Unknown);
  EXPECT_EQ(decide(p, Character({-1, 0}), true).membership, Membership::InSigma);
  auto s = symmetry_report(p, true);
  EXPECT_EQ(s.b1, 1);
  EXPECT_FALSE(s.nonsymmetric);
  EXPECT_FALSE(s.not_fibering);
}

TEST(Sigma, Preconditions) {
  Presentation p = parse_presentation("<x1,x2 | [x1,x2]>");
  EXPECT_THROW(decide(p, Character({0, 0}), false), Error);
  EXPECT_THROW(decide(p, Character({1, 0, 0}), false), Error);
  EXPECT_THROW(decide(parse_presentation("<x1,x2 | x1 x2>"), Character({1, 0}), false), Error);
  try {
    symmetry_report(parse_presentation("<i,j,k,l | [i,j], [j,k], [k,l]>"), false);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(std::string(e.what()), "b1 = 4, supply --char");
  }
}

TEST(Sigma, ScalingDoesNotChangeVerdict) {
  Presentation p = parse_presentation("<x1,x2 | [x1,x2]^2>");
  EXPECT_EQ(decide(p, Character({3, -3}), true).membership, Membership::NotInSigma);
  EXPECT_EQ(decide(parse_presentation("<x1,x2 | [x1,x2]>"), Character({2, -2}), false).membership,
            Membership::InSigma);
}

TEST(Sigma, SymmetryFlagsAreConsistent) {
  for (const char* text : {"<x1,x2 | x1 x2 x1^-1 x2^-2>", "<x1,x2 | x1^2 x2^-2>", "<a,b | a b a^-1 b^-1 a^2 b a^-2 b^-1>"}) {
    Presentation p = parse_presentation(text);
    if (first_betti(p) != 1) continue;
    auto s = symmetry_report(p, true);
    EXPECT_EQ(s.not_lerf, s.nonsymmetric);
    if (s.nonsymmetric) EXPECT_TRUE(s.not_fibering);
  }
}
