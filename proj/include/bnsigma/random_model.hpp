#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bnsigma/presentation.hpp"
#include "bnsigma/word.hpp"

namespace bnsigma {

using BigInt = boost::multiprecision::cpp_int;

// Counter-based generator: output k of stream (seed, index) is
// splitmix64(key + k * golden) with key derived from both. Streams for
// different trial indices are independent of scheduling order.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  CounterRng(std::uint64_t seed, std::uint64_t stream);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()();

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

std::uint64_t splitmix64(std::uint64_t x);

// Uniform integer in [0, bound); bound must be positive.
BigInt uniform_below(CounterRng& rng, const BigInt& bound);

// Number of cyclically reduced words of length k over m generators:
// trace(T^k) for the 2m x 2m non-backtracking transfer matrix.
BigInt count_cyclically_reduced(int m, int k);

// Exactly uniform sampler over cyclically reduced words of length 1..l.
class CyclicWordSampler {
 public:
  CyclicWordSampler(int m, int l);

  int rank() const { return m_; }
  int max_length() const { return l_; }
  // Count per length, computed by path counting (independent of the trace).
  const BigInt& count(int k) const { return counts_[static_cast<std::size_t>(k)]; }
  const BigInt& total() const { return total_; }

  CyclicWord sample(CounterRng& rng) const;

 private:
  // Letter index: 2(g-1) for x_g, 2(g-1)+1 for x_g^-1.
  static Letter letter_of(int index) { return Letter(index / 2 + 1, index % 2 ? -1 : 1); }

  int m_;
  int l_;
  // tails_[a][r][c]: reduced continuations of r more letters after letter c,
  // ending in a letter that is not the inverse of the first letter a.
  std::vector<std::vector<std::vector<BigInt>>> tails_;
  std::vector<BigInt> counts_;
  BigInt total_;
};

struct MeasureFlags {
  bool b1 = true;
  bool small_cancellation = true;
  bool classification = true;
  bool transform_image = true;
};

struct SampleConfig {
  int relators = 1;    // n
  int generators = 2;  // m
  int max_length = 10; // l
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  MeasureFlags flags;
  unsigned threads = 1;
};

// Throws Error(Validation) unless m >= 2, n >= 1, l >= 1, trials >= 1.
void validate(const SampleConfig& config);

Presentation sample_presentation(const SampleConfig& config, const CyclicWordSampler& sampler, CounterRng& rng);

struct SampleRecord {
  std::uint64_t trial = 0;
  std::string presentation;
  std::optional<int> b1;
  std::optional<bool> small_cancellation;
  std::optional<std::string> plus;   // membership of +phi
  std::optional<std::string> minus;  // membership of -phi
  bool nonsymmetric = false;
  bool not_lerf = false;
  bool not_fibering = false;
  bool unknown_both = false;
  bool transform_image = false;
  bool transform_abort = false;
  std::optional<std::string> error;
};

// All measurements on one presentation. Pure; safe to call concurrently.
SampleRecord measure_presentation(const Presentation& p, const MeasureFlags& flags);

struct PropertyEstimate {
  std::string name;
  std::uint64_t successes = 0;
  std::uint64_t trials = 0;
  double estimate = 0;
  double ci_low = 0;
  double ci_high = 0;
};

struct EstimateReport {
  SampleConfig config;
  std::vector<PropertyEstimate> properties;
  double runtime_seconds = 0;

  const PropertyEstimate* find(const std::string& name) const;
  // One row per property, independent of runtime and thread count.
  std::string to_csv() const;
};

// 95% Wilson score interval.
std::pair<double, double> wilson_interval(std::uint64_t successes, std::uint64_t trials);

using SampleLog = std::function<void(const SampleRecord&)>;

// Deterministic given the config: trial t draws from CounterRng(seed, t).
// `log`, if set, receives every record in trial order.
EstimateReport run_experiment(const SampleConfig& config, const SampleLog& log = nullptr);

}  // namespace bnsigma
