#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bnsigma/word.hpp"

namespace bnsigma {

// Endomorphism of F(x_1, ..., x_n) given by generator images. `verified` is
// set when inverse images were supplied and both composites are the identity.
struct AutomorphismSpec {
  int rank = 0;
  std::vector<std::string> names;
  std::vector<Word> images;
  std::optional<std::vector<Word>> inverse_images;
  bool verified = false;

  AutomorphismSpec inverse() const;  // needs inverse_images
};

// Builds a spec and verifies it when `inverse_images` is given. Throws
// Error(Validation) on rank mismatch or a failed inverse check.
AutomorphismSpec make_automorphism(std::vector<std::string> names, std::vector<Word> images,
                                   std::optional<std::vector<Word>> inverse_images = std::nullopt);

// `x1 -> x1; x2 -> x2 x1` (semicolons or newlines), then optionally
// `inverse:` followed by the same kind of block. `#` starts a comment.
AutomorphismSpec parse_automorphism(std::string_view text);

std::string to_string(const AutomorphismSpec& phi);

// Substitutes and freely reduces. Throws Error(Validation) when w uses a
// generator beyond the rank.
Word apply(const AutomorphismSpec& phi, const Word& w);

constexpr std::size_t kDefaultLengthCap = std::size_t{1} << 21;

struct GrowthSequence {
  std::vector<std::size_t> lengths;  // |Phi^n(g)| up to conjugacy, n = 0, 1, ...
  std::size_t requested = 0;         // N
  bool truncated = false;            // stopped early at the length cap
};

// Throws Error(Precondition) unless iterations >= 1.
GrowthSequence growth_sequence(const AutomorphismSpec& phi, const Word& g, std::size_t iterations,
                               std::size_t length_cap = kDefaultLengthCap);

enum class GrowthKind { Polynomial, Exponential, Inconclusive };

std::string_view to_string(GrowthKind k);

struct GrowthEstimate {
  GrowthKind kind = GrowthKind::Inconclusive;
  int degree = 0;  // meaningful for Polynomial only
  std::vector<std::size_t> lengths;
  // Diagnostics.
  double tail_ratio_geomean = 1;
  std::vector<double> doubling_exponents;  // log2(len(2n)/len(n)) over the window

  std::string label() const;  // POLYNOMIAL(d), EXPONENTIAL or INCONCLUSIVE
};

constexpr std::size_t kMinGrowthSamples = 16;

// Exponential when the last quarter of len(n+1)/len(n) has geometric mean
// >= 1.05 and does not drift down; otherwise d = round(log2(len(2n)/len(n)))
// for n in [N/4, N/2], provided those estimates agree. Throws
// Error(Precondition) with fewer than 16 untruncated entries.
GrowthEstimate estimate_degree(const GrowthSequence& seq);
GrowthEstimate estimate_degree(const std::vector<std::size_t>& lengths);

// d <= rank - 1. Throws Error(Precondition) unless the estimate is polynomial.
bool check_levitt_bound(const AutomorphismSpec& phi, const GrowthEstimate& estimate);

}  // namespace bnsigma
