#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bnsigma {

// A generator x_k or its inverse. Stored as +k / -k with k >= 1.
class Letter {
 public:
  constexpr Letter(int generator, int sign) : value_(sign < 0 ? -generator : generator) {}

  static constexpr Letter from_signed(int value) { return Letter(value); }

  constexpr int generator() const { return value_ < 0 ? -value_ : value_; }
  constexpr int sign() const { return value_ < 0 ? -1 : 1; }
  constexpr int signed_value() const { return value_; }
  constexpr Letter inverse() const { return Letter(-value_); }

  constexpr bool cancels(Letter other) const { return value_ == -other.value_; }

  friend constexpr bool operator==(Letter, Letter) = default;
  friend constexpr auto operator<=>(Letter, Letter) = default;

 private:
  explicit constexpr Letter(int value) : value_(value) {}
  std::int32_t value_;
};

bool is_freely_reduced(std::span<const Letter> letters);
bool is_cyclically_reduced(std::span<const Letter> letters);

// Freely reduced word in a free group of unspecified rank. Immutable value.
class Word {
 public:
  Word() = default;

  // Throws Error(Validation) if `letters` is not freely reduced.
  explicit Word(std::vector<Letter> letters);

  // Shorthand for tests and literals: {1, 2, -1} is x1 x2 x1^-1.
  static Word of(std::initializer_list<int> signed_letters);

  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  friend Word free_reduce(std::span<const Letter>);
  friend class CyclicWord;
  struct Trusted {};
  Word(Trusted, std::vector<Letter> letters) : letters_(std::move(letters)) {}

  std::vector<Letter> letters_;
};

// Cyclically reduced word with the marked vertex at index 0.
class CyclicWord {
 public:
  CyclicWord() = default;

  // Throws Error(Validation) unless `letters` is cyclically reduced.
  explicit CyclicWord(std::vector<Letter> letters);
  explicit CyclicWord(const Word& w) : CyclicWord(std::vector<Letter>(w.begin(), w.end())) {}

  static CyclicWord of(std::initializer_list<int> signed_letters);

  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  Word word() const { return Word(Word::Trusted{}, letters_); }

  // Same cyclic word read from vertex k.
  CyclicWord rotated(std::size_t k) const;
  CyclicWord inverse() const;

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
  friend auto operator<=>(const CyclicWord&, const CyclicWord&) = default;

 private:
  std::vector<Letter> letters_;
};

Word free_reduce(std::span<const Letter> letters);

struct CyclicReduction {
  CyclicWord core;
  Word conjugator;  // w == conjugator * core * conjugator^-1
};

CyclicReduction cyclic_reduce(const Word& w);

Word invert(const Word& w);
Word concat(const Word& u, const Word& v);
// First k letters; throws Error(OutOfRange) when k > |w|.
Word prefix(const Word& w, std::size_t k);
std::size_t conjugacy_length(const Word& w);

// Text syntax. Tokens are generator names optionally followed by ^n; `[u,v]`
// expands to u v u^-1 v^-1, `( ... )` groups, and `1` is the empty word.
// With an empty `names` list the names are x1, x2, ...; otherwise a name
// resolves to its 1-based position in `names`.
std::vector<Letter> parse_letters(std::string_view text,
                                  const std::vector<std::string>& names = {});
Word parse_word(std::string_view text, const std::vector<std::string>& names = {});

std::string format_letters(std::span<const Letter> letters,
                           const std::vector<std::string>& names = {});
inline std::string format_word(const Word& w, const std::vector<std::string>& names = {}) {
  return format_letters(w.letters(), names);
}

std::vector<int> to_signed(std::span<const Letter> letters);

}  // namespace bnsigma
