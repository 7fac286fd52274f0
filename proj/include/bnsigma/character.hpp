#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bnsigma/presentation.hpp"
#include "bnsigma/word.hpp"

namespace bnsigma {

// Integer-valued homomorphism F(x_1..x_m) -> Z given by its values on the
// generators. Stored unreduced; content() reports the common factor.
class Character {
 public:
  Character() = default;
  explicit Character(std::vector<std::int64_t> values) : values_(std::move(values)) {}

  const std::vector<std::int64_t>& values() const { return values_; }
  std::size_t rank() const { return values_.size(); }
  std::int64_t operator[](std::size_t i) const { return values_[i]; }
  // Value on generator x_g (1-based).
  std::int64_t on_generator(int g) const { return values_[static_cast<std::size_t>(g - 1)]; }
  std::int64_t on(Letter l) const { return l.sign() * on_generator(l.generator()); }

  bool is_zero() const;
  std::int64_t content() const;
  Character primitive() const;
  Character operator-() const;
  Character scaled(std::int64_t k) const;

  std::string to_string() const;  // "1,0,-1"

  friend bool operator==(const Character&, const Character&) = default;

 private:
  std::vector<std::int64_t> values_;
};

// CLI syntax "1,0,-1".
Character parse_character(std::string_view text);

std::int64_t evaluate(const Character& phi, std::span<const Letter> letters);
inline std::int64_t evaluate(const Character& phi, const Word& w) { return evaluate(phi, w.letters()); }

bool vanishes_on_relators(const Presentation& p, const Character& phi);

// Basis of the integral characters of the presented group, in Hermite normal
// form. Each basis vector is primitive.
std::vector<Character> character_lattice(const Presentation& p);

// Generator reordering plus inversions. New generator k (0-based) is old
// generator order[k] (1-based), inverted when inverted[k].
struct Normalization {
  std::vector<int> order;
  std::vector<bool> inverted;
  std::vector<std::string> original_names;
  Presentation transformed_presentation;
  Character transformed_character;

  // Image of an old letter under the relabelling.
  Letter forward(Letter old) const;
  // Pre-image of a new letter.
  Letter backward(Letter transformed) const;
  std::vector<Letter> forward(std::span<const Letter> old) const;
  std::vector<Letter> backward(std::span<const Letter> transformed) const;
  Presentation restore(const Presentation& transformed) const;
};

// Condition: phi(x_i) >= 0 for i <= n and phi(x_{n+1}) < 0, m = n + 1.
bool is_normalized(const Presentation& p, const Character& phi);

// Moves `distinguished` (1-based, phi-value nonzero) into the last slot with
// negative value and inverts every other generator of negative value. The
// remaining generators keep their relative order.
Normalization normalize_with(const Presentation& p, const Character& phi, int distinguished);

// Deterministic choice: among generators of negative value the one of largest
// |value| (lowest index on ties); if none is negative, the same rule over the
// positive ones.
int default_distinguished(const Character& phi);

// All generators that can serve as the distinguished one, default first then
// by index.
std::vector<int> distinguished_candidates(const Character& phi);

Normalization normalize(const Presentation& p, const Character& phi);

}  // namespace bnsigma
