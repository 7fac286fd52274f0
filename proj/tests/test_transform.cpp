#include <gtest/gtest.h>

#include "bnsigma/error.hpp"
#include "bnsigma/fox.hpp"
#include "bnsigma/sigma.hpp"
#include "bnsigma/transform.hpp"
#include "generators.hpp"

using namespace bnsigma;
using bnsigma::gen::Rng;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::Syntax;
}

}  // namespace

TEST(Transform, CommutatorExample) {
  Presentation p = parse_presentation("<x1,x2 | [x1,x2]>");
  Character phi({1, -1});
  auto rec = insert_commutators(p, phi);
  ASSERT_EQ(rec.steps.size(), 1u);
  EXPECT_EQ(rec.steps[0].epsilon, -1);
  EXPECT_EQ(rec.steps[0].min_vertex, 3u);
  EXPECT_EQ(rec.steps[0].max_vertex, 1u);
  // r' = x1 x2 x1^-1 [x2, x1^-1] x2^-1
  // r'' = x1 [x2^-1, x1]^2 x2 x1^-1 [x2, x1^-1] x2^-1
  EXPECT_EQ(rec.output.relator(0),
            CyclicWord(parse_letters("x1 [x2^-1, x1]^2 x2 x1^-1 [x2, x1^-1] x2^-1")));
  EXPECT_EQ(rec.output.relator(0).size(), 16u);
  EXPECT_EQ(classify(rec.output, phi).status, ConditionStatus::Unique);
  auto minus = classify_character(rec.output, -phi);
  EXPECT_EQ(minus.report.status, ConditionStatus::Repeated);
  EXPECT_EQ(remove_commutators(rec.output, phi), p);
}

TEST(Transform, ImageIsNonsymmetric) {
  Presentation p = parse_presentation("<x1,x2 | [x1,x2]>");
  Character phi({1, -1});
  auto s = symmetry_report(insert_commutators(p, phi).output, phi, true);
  EXPECT_EQ(s.plus.membership, Membership::InSigma);
  EXPECT_EQ(s.minus.membership, Membership::NotInSigma);
  EXPECT_TRUE(s.nonsymmetric);
  EXPECT_TRUE(s.not_lerf);
  EXPECT_TRUE(s.not_fibering);
}

TEST(Transform, EdgeShapeForZeroValuedGenerator) {
  Presentation p(3, {CyclicWord(parse_letters("[x1,x3]")), CyclicWord(parse_letters("x2 x3 x2^-1 x3^-1"))});
  Character phi({1, 0, -1});
  auto rec = insert_commutators(p, phi);
  EXPECT_EQ(rec.steps[1].epsilon, 1);
  auto report = classify(rec.output, phi);
  EXPECT_EQ(report.status, ConditionStatus::Unique);
  ASSERT_EQ(report.witnesses[1].section.arcs.size(), 1u);
  EXPECT_EQ(report.witnesses[1].section.arcs[0].kind, ArcKind::Edge);
  EXPECT_EQ(report.witnesses[1].single_generator, std::optional<int>(2));
}

TEST(Transform, FreeCancellationWitness) {
  Presentation p = parse_presentation("<x1,x2 | x1 x2 x1 x2^-1>");
  EXPECT_EQ(kind_of([&] { insert_commutators(p, Character({0, -1})); }), ErrorKind::FreeCancellation);
}

TEST(Transform, Preconditions) {
  Presentation p = parse_presentation("<x1,x2 | [x1,x2]>");
  EXPECT_EQ(kind_of([&] { insert_commutators(p, Character({-1, 1})); }), ErrorKind::Precondition);
  EXPECT_EQ(kind_of([&] { remove_commutators(p, Character({1, -1})); }), ErrorKind::NotAnImage);
  EXPECT_EQ(kind_of([&] { remove_commutators(parse_presentation("<x1,x2 | [x1,x2]^3>"), Character({1, -1})); }),
            ErrorKind::NotAnImage);
}

TEST(Transform, PropertySuite) {
  Rng rng(51);
  int accepted = 0, aborted = 0;
  for (int t = 0; t < 2000; ++t) {
    const int n = 1 + static_cast<int>(rng() % 3);
    auto [p, phi] = gen::random_normalized_tuple(rng, n, 40);
    std::optional<TransformRecord> rec;
    try {
      rec = insert_commutators(p, phi);
    } catch (const Error& e) {
      ASSERT_EQ(e.kind(), ErrorKind::FreeCancellation);
      ++aborted;
      continue;
    }
    ++accepted;
    const Presentation& img = rec->output;
    for (std::size_t i = 0; i < p.relator_count(); ++i) {
      EXPECT_EQ(img.relator(i).size(), p.relator(i).size() + (i == 0 ? 12 : 8));
      // New minimum: old minimum + phi(x_{n+1}) - phi(x_i).
      auto before = cycle_walk(p.relator(i), phi);
      auto after = cycle_walk(img.relator(i), phi);
      EXPECT_EQ(after.min_height, before.min_height + phi.on_generator(n + 1) -
                                      phi.on_generator(static_cast<int>(i) + 1));
    }
    EXPECT_LE(img.max_relator_length(), p.max_relator_length() + 12);
    EXPECT_EQ(img.total_length(), p.total_length() + 8 * p.relator_count() + 4);

    auto plus = classify(img, phi);
    ASSERT_EQ(plus.status, ConditionStatus::Unique) << img.to_string() << " phi " << phi.to_string();
    auto minus = classify_character(img, -phi);
    ASSERT_EQ(minus.report.status, ConditionStatus::Repeated) << img.to_string() << " phi " << phi.to_string();
    EXPECT_EQ(remove_commutators(img, phi), p);

    auto s = structural_verify(minus.normalization.transformed_presentation,
                               minus.normalization.transformed_character, minus.report);
    ASSERT_TRUE(s.nonunit_certificate);
    EXPECT_EQ(evaluate(minus.normalization.transformed_character, s.nonunit_certificate->kernel_element), 0);
    EXPECT_EQ(s.diag_leading[0].shape, LeadingShape::Pair);
    for (std::size_t k = 1; k < s.diag_leading.size(); ++k) EXPECT_EQ(s.diag_leading[k].shape, LeadingShape::Single);
    structural_verify(img, phi, plus);
  }
  EXPECT_GT(accepted, 1000);
  EXPECT_GT(aborted, 0);
}
