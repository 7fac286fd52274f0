#include <gtest/gtest.h>

#include <map>

#include <boost/math/distributions/chi_squared.hpp>

#include "bnsigma/error.hpp"
#include "bnsigma/random_model.hpp"
#include "bnsigma/transform.hpp"
#include "generators.hpp"

using namespace bnsigma;

namespace {

// Oracle: enumerate all (2m)^k letter strings.
std::uint64_t brute_count(int m, int k) {
  const int s = 2 * m;
  std::vector<int> idx(static_cast<std::size_t>(k), 0);
  std::uint64_t count = 0;
  for (;;) {
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) {
      int a = idx[static_cast<std::size_t>(i)];
      int b = idx[static_cast<std::size_t>((i + 1) % k)];
      if (k > 1 && (a ^ 1) == b) ok = false;
    }
    count += ok;
    int pos = 0;
    while (pos < k && ++idx[static_cast<std::size_t>(pos)] == s) idx[static_cast<std::size_t>(pos++)] = 0;
    if (pos == k) break;
  }
  return count;
}

// Oracle: number of cyclically reduced words over 2 generators with both
// exponent sums zero, by convolution over (first, last, sum1, sum2).
double zero_sum_fraction(int l) {
  const int off = l;
  const int w = 2 * l + 1;
  double zero = 0, total = 0;
  for (int k = 1; k <= l; ++k) {
    for (int first = 0; first < 4; ++first) {
      // state[last][s1][s2]
      std::vector<double> cur(4 * w * w, 0), next;
      auto at = [&](std::vector<double>& v, int last, int s1, int s2) -> double& {
        return v[static_cast<std::size_t>((last * w + s1 + off) * w + s2 + off)];
      };
      auto delta = [](int letter, int gen) { return letter / 2 == gen ? (letter % 2 ? -1 : 1) : 0; };
      at(cur, first, delta(first, 0), delta(first, 1)) = 1;
      for (int step = 1; step < k; ++step) {
        next.assign(cur.size(), 0);
        for (int last = 0; last < 4; ++last)
          for (int s1 = -l; s1 <= l; ++s1)
            for (int s2 = -l; s2 <= l; ++s2) {
              double v = at(cur, last, s1, s2);
              if (v == 0) continue;
              for (int b = 0; b < 4; ++b) {
                if (b == (last ^ 1)) continue;
                at(next, b, s1 + delta(b, 0), s2 + delta(b, 1)) += v;
              }
            }
        cur.swap(next);
      }
      for (int last = 0; last < 4; ++last) {
        if (k > 1 && last == (first ^ 1)) continue;
        for (int s1 = -l; s1 <= l; ++s1)
          for (int s2 = -l; s2 <= l; ++s2) {
            double v = at(cur, last, s1, s2);
            total += v;
            if (s1 == 0 && s2 == 0) zero += v;
          }
      }
    }
  }
  return zero / total;
}

double chi_squared_p(const std::map<std::vector<int>, std::uint64_t>& observed, std::size_t support, double draws) {
  const double expected = draws / static_cast<double>(support);
  double stat = 0;
  for (const auto& [k, c] : observed) stat += (static_cast<double>(c) - expected) * (static_cast<double>(c) - expected) / expected;
  stat += static_cast<double>(support - observed.size()) * expected;
  boost::math::chi_squared dist(static_cast<double>(support - 1));
  return boost::math::cdf(boost::math::complement(dist, stat));
}

}  // namespace

TEST(Counting, SmallValues) {
  EXPECT_EQ(count_cyclically_reduced(2, 1), 4);
  EXPECT_EQ(count_cyclically_reduced(2, 2), 12);
  EXPECT_EQ(count_cyclically_reduced(2, 3), 28);
  EXPECT_EQ(count_cyclically_reduced(2, 4), 84);
}

TEST(Counting, MatchesEnumeration) {
  for (int m = 2; m <= 3; ++m)
    for (int k = 1; k <= 8; ++k) EXPECT_EQ(count_cyclically_reduced(m, k), brute_count(m, k)) << m << "," << k;
}

TEST(Counting, SamplerTablesAgreeWithTrace) {
  for (int m = 2; m <= 4; ++m) {
    CyclicWordSampler s(m, 40);
    for (int k = 1; k <= 40; ++k) EXPECT_EQ(s.count(k), count_cyclically_reduced(m, k));
  }
}

TEST(Rng, StreamsAreDeterministicAndDistinct) {
  CounterRng a(7, 0), b(7, 0), c(7, 1), d(8, 0);
  auto x = a();
  EXPECT_EQ(x, b());
  EXPECT_NE(x, c());
  EXPECT_NE(x, d());
  CounterRng e(1, 2);
  for (int i = 0; i < 1000; ++i) EXPECT_LT(uniform_below(e, BigInt(37)), 37);
}

TEST(Sampler, SingleLetterUniform) {
  CyclicWordSampler s(2, 1);
  std::map<std::vector<int>, std::uint64_t> seen;
  for (std::uint64_t t = 0; t < 20000; ++t) {
    CounterRng rng(3, t);
    seen[to_signed(s.sample(rng).letters())]++;
  }
  EXPECT_EQ(seen.size(), 4u);
  EXPECT_GT(chi_squared_p(seen, 4, 20000), 0.001);
}

TEST(Sampler, UniformUpToLengthFive) {
  for (int l = 2; l <= 5; ++l) {
    CyclicWordSampler s(2, l);
    std::map<std::vector<int>, std::uint64_t> seen;
    const std::uint64_t draws = 100000;
    for (std::uint64_t t = 0; t < draws; ++t) {
      CounterRng rng(100 + static_cast<std::uint64_t>(l), t);
      CyclicWord w = s.sample(rng);
      ASSERT_TRUE(is_cyclically_reduced(w.letters()));
      ASSERT_LE(w.size(), static_cast<std::size_t>(l));
      seen[to_signed(w.letters())]++;
    }
    std::size_t support = 0;
    for (int k = 1; k <= l; ++k) support += brute_count(2, k);
    EXPECT_LE(seen.size(), support);
    EXPECT_GT(chi_squared_p(seen, support, static_cast<double>(draws)), 0.001) << "l = " << l;
  }
}

TEST(Sampler, PresentationCoordinatesIndependent) {
  SampleConfig cfg;
  cfg.relators = 2;
  cfg.generators = 2;
  cfg.max_length = 2;
  CyclicWordSampler s(2, 2);
  std::map<std::vector<int>, std::uint64_t> pairs;
  const std::uint64_t draws = 50000;
  for (std::uint64_t t = 0; t < draws; ++t) {
    CounterRng rng(9, t);
    Presentation p = sample_presentation(cfg, s, rng);
    ASSERT_EQ(p.relator_count(), 2u);
    pairs[{static_cast<int>(p.relator(0).size()), static_cast<int>(p.relator(1).size())}]++;
  }
  // Length marginal: 4/16 for length 1, 12/16 for length 2.
  const double pr[3] = {0, 0.25, 0.75};
  double stat = 0;
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b) {
      double e = pr[a] * pr[b] * static_cast<double>(draws);
      double o = static_cast<double>(pairs[{a, b}]);
      stat += (o - e) * (o - e) / e;
    }
  boost::math::chi_squared dist(3);
  EXPECT_GT(boost::math::cdf(boost::math::complement(dist, stat)), 0.001);
}

TEST(Experiment, BettiFrequencyMatchesConvolution) {
  for (int l : {4, 8, 12}) {
    SampleConfig cfg;
    cfg.relators = 1;
    cfg.generators = 2;
    cfg.max_length = l;
    cfg.trials = 20000;
    cfg.seed = 77;
    cfg.flags = {true, false, false, false};
    auto rep = run_experiment(cfg);
    const double expected = 1 - zero_sum_fraction(l);
    const auto* b1 = rep.find("b1_eq_1");
    ASSERT_NE(b1, nullptr);
    const double sd = std::sqrt(expected * (1 - expected) / static_cast<double>(cfg.trials));
    EXPECT_NEAR(b1->estimate, expected, 5 * sd) << "l = " << l;
  }
}

TEST(Experiment, DeterministicAcrossRunsAndThreads) {
  SampleConfig cfg;
  cfg.relators = 1;
  cfg.generators = 2;
  cfg.max_length = 16;
  cfg.trials = 400;
  cfg.seed = 2024;
  std::vector<SampleRecord> first, second;
  auto a = run_experiment(cfg, [&](const SampleRecord& r) { first.push_back(r); });
  cfg.threads = 3;
  auto b = run_experiment(cfg, [&](const SampleRecord& r) { second.push_back(r); });
  EXPECT_EQ(a.to_csv(), b.to_csv());
  ASSERT_EQ(first.size(), second.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    EXPECT_EQ(first[i].trial, i);
    EXPECT_EQ(first[i].presentation, second[i].presentation);
  }
  cfg.trials = 1;
  EXPECT_EQ(run_experiment(cfg).to_csv(), run_experiment(cfg).to_csv());
}

TEST(Experiment, ReportInvariants) {
  SampleConfig cfg;
  cfg.relators = 1;
  cfg.generators = 2;
  cfg.max_length = 20;
  cfg.trials = 500;
  cfg.seed = 5;
  auto rep = run_experiment(cfg);
  for (const auto& p : rep.properties) {
    EXPECT_DOUBLE_EQ(p.estimate, static_cast<double>(p.successes) / static_cast<double>(p.trials));
    EXPECT_LE(p.ci_low, p.estimate);
    EXPECT_GE(p.ci_high, p.estimate);
  }
  EXPECT_GE(rep.find("nonsymmetric")->successes, rep.find("transform_image")->successes);
  EXPECT_LE(rep.find("nonsymmetric")->successes, rep.find("not_lerf")->successes);
  EXPECT_LE(rep.find("nonsymmetric")->successes, rep.find("not_fibering")->successes);
}

TEST(Experiment, RejectsBadConfig) {
  SampleConfig cfg;
  cfg.generators = 1;
  EXPECT_THROW(run_experiment(cfg), Error);
  cfg.generators = 2;
  cfg.trials = 0;
  EXPECT_THROW(run_experiment(cfg), Error);
}

TEST(Experiment, TransformImagesAreDetectedAndNonsymmetric) {
  gen::Rng rng(61);
  int images = 0;
  for (int t = 0; t < 400 && images < 20; ++t) {
    auto [p, phi] = gen::random_normalized_tuple(rng, 1, 40);
    if (p.relator(0).size() < 30) continue;
    std::optional<TransformRecord> rec;
    try {
      rec = insert_commutators(p, phi);
    } catch (const Error&) {
      continue;
    }
    if (first_betti(rec->output) != 1) continue;
    SampleRecord r = measure_presentation(rec->output, MeasureFlags{});
    if (!r.small_cancellation.value_or(false)) continue;
    ++images;
    EXPECT_TRUE(r.transform_image) << r.presentation;
    EXPECT_TRUE(r.nonsymmetric) << r.presentation;
    EXPECT_TRUE(r.not_lerf);
    EXPECT_TRUE(r.not_fibering);
  }
  EXPECT_GT(images, 0);
}

TEST(Wilson, KnownValues) {
  auto [lo, hi] = wilson_interval(0, 10);
  EXPECT_DOUBLE_EQ(lo, 0.0);
  EXPECT_NEAR(hi, 0.27753, 1e-4);
  auto [lo2, hi2] = wilson_interval(50, 100);
  EXPECT_NEAR(lo2, 0.40383, 1e-4);
  EXPECT_NEAR(hi2, 0.59617, 1e-4);
}
