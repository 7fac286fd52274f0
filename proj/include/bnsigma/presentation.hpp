#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "bnsigma/linalg.hpp"
#include "bnsigma/word.hpp"

namespace bnsigma {

// <x_1, ..., x_m | r_1, ..., r_n> with every relator non-empty and cyclically
// reduced and every letter within rank.
class Presentation {
 public:
  Presentation(int rank, std::vector<CyclicWord> relators, std::vector<std::string> names = {});

  int rank() const { return rank_; }
  std::size_t relator_count() const { return relators_.size(); }
  const std::vector<CyclicWord>& relators() const { return relators_; }
  const CyclicWord& relator(std::size_t i) const { return relators_[i]; }
  // Display names; x1..xm when none were given.
  const std::vector<std::string>& names() const { return names_; }

  int deficiency() const { return rank_ - static_cast<int>(relators_.size()); }
  std::size_t total_length() const;
  std::size_t max_relator_length() const;

  // Round-trips through parse_presentation.
  std::string to_string() const;

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  int rank_;
  std::vector<CyclicWord> relators_;
  std::vector<std::string> names_;
};

// File format: `<g1,...,gm | r1, ..., rn>`; lines starting with `#` are
// comments. Relators use the word syntax from word.hpp. Relators that are not
// cyclically reduced are rejected, not reduced.
Presentation parse_presentation(std::string_view text);

// Requires m == n + 1; throws Error(Precondition) otherwise.
void require_deficiency_one(const Presentation& p);

// Row i holds the exponent sums of relator i.
IntMatrix abelianization_matrix(const Presentation& p);

int first_betti(const Presentation& p);

using Ratio = boost::rational<long>;

struct PieceLocation {
  std::size_t relator = 0;   // 0-based relator index
  bool inverted = false;     // occurrence in the inverse relator
  std::size_t offset = 0;    // starting vertex in that cyclic word
};

struct SmallCancellationReport {
  Ratio lambda{1, 6};
  Ratio max_piece_ratio{0};
  bool passes = true;
  // Longest piece attaining max_piece_ratio; empty when no piece exists.
  std::vector<Letter> witness;
  PieceLocation first;
  PieceLocation second;
};

// Metric condition C'(lambda): every piece p of a relator r has |p| < lambda |r|.
// Pieces are common prefixes of two distinct entries (relator, orientation,
// rotation) of the symmetrised set.
SmallCancellationReport small_cancellation_check(const Presentation& p, Ratio lambda = Ratio(1, 6));

}  // namespace bnsigma
