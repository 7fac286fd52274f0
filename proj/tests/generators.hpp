#pragma once

// Hand-rolled random generators for property tests. Deterministic per seed.

#include <cstdint>
#include <random>
#include <vector>

#include "bnsigma/character.hpp"
#include "bnsigma/presentation.hpp"
#include "bnsigma/word.hpp"

namespace bnsigma::gen {

using Rng = std::mt19937_64;

inline Letter random_letter(Rng& rng, int rank) {
  std::uniform_int_distribution<int> g(1, rank), s(0, 1);
  return Letter(g(rng), s(rng) ? 1 : -1);
}

// Arbitrary letter sequence, possibly unreduced.
inline std::vector<Letter> random_letters(Rng& rng, int rank, std::size_t len) {
  std::vector<Letter> out;
  for (std::size_t i = 0; i < len; ++i) out.push_back(random_letter(rng, rank));
  return out;
}

inline Word random_reduced_word(Rng& rng, int rank, std::size_t len) {
  std::vector<Letter> out;
  while (out.size() < len) {
    Letter l = random_letter(rng, rank);
    if (!out.empty() && out.back().cancels(l)) continue;
    out.push_back(l);
  }
  return Word(std::move(out));
}

inline CyclicWord random_cyclic_word(Rng& rng, int rank, std::size_t len) {
  for (;;) {
    Word w = random_reduced_word(rng, rank, len);
    if (len < 2 || !w[0].cancels(w[len - 1])) return CyclicWord(w);
  }
}

// Cyclic word of length in [1, max_len] on which phi vanishes.
inline CyclicWord random_balanced_relator(Rng& rng, const Character& phi, std::size_t max_len) {
  const int rank = static_cast<int>(phi.rank());
  std::uniform_int_distribution<std::size_t> len(2, max_len);
  for (;;) {
    CyclicWord r = random_cyclic_word(rng, rank, len(rng));
    if (evaluate(phi, r.letters()) == 0) return r;
  }
}

struct NormalizedTuple {
  Presentation tuple;
  Character phi;
};

// n relators on n+1 generators with a normalized character vanishing on all
// of them: phi(x_i) in [0, 3] for i <= n and phi(x_{n+1}) in [-3, -1].
inline NormalizedTuple random_normalized_tuple(Rng& rng, int n, std::size_t max_len) {
  std::uniform_int_distribution<int> pos(0, 3), neg(1, 3);
  std::vector<std::int64_t> values;
  for (int i = 0; i < n; ++i) values.push_back(pos(rng));
  values.push_back(-neg(rng));
  Character phi(values);
  std::vector<CyclicWord> rels;
  for (int i = 0; i < n; ++i) rels.push_back(random_balanced_relator(rng, phi, max_len));
  return {Presentation(n + 1, std::move(rels)), phi};
}

}  // namespace bnsigma::gen
