#include "bnsigma/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "bnsigma/error.hpp"

namespace bnsigma {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax: return "syntax error";
    case ErrorKind::Validation: return "validation error";
    case ErrorKind::Precondition: return "precondition violated";
    case ErrorKind::OutOfRange: return "out of range";
    case ErrorKind::FreeCancellation: return "free cancellation";
    case ErrorKind::NotAnImage: return "not an image of the insertion map";
    case ErrorKind::VerificationFailure: return "verification failure";
  }
  return "error";
}

bool is_freely_reduced(std::span<const Letter> letters) {
  for (std::size_t i = 1; i < letters.size(); ++i) {
    if (letters[i].cancels(letters[i - 1])) return false;
  }
  return true;
}

bool is_cyclically_reduced(std::span<const Letter> letters) {
  if (!is_freely_reduced(letters)) return false;
  return letters.size() < 2 || !letters.front().cancels(letters.back());
}

namespace {

std::vector<Letter> letters_of(std::initializer_list<int> signed_letters) {
  std::vector<Letter> out;
  out.reserve(signed_letters.size());
  for (int v : signed_letters) {
    if (v == 0) throw Error(ErrorKind::Validation, "generator index must be nonzero");
    out.push_back(Letter::from_signed(v));
  }
  return out;
}

}  // namespace

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  if (!is_freely_reduced(letters_)) {
    throw Error(ErrorKind::Validation, "word is not freely reduced: " + format_letters(letters_));
  }
}

Word Word::of(std::initializer_list<int> signed_letters) { return Word(letters_of(signed_letters)); }

CyclicWord::CyclicWord(std::vector<Letter> letters) : letters_(std::move(letters)) {
  if (!is_cyclically_reduced(letters_)) {
    throw Error(ErrorKind::Validation,
                "word is not cyclically reduced: " + format_letters(letters_));
  }
}

CyclicWord CyclicWord::of(std::initializer_list<int> signed_letters) {
  return CyclicWord(letters_of(signed_letters));
}

CyclicWord CyclicWord::rotated(std::size_t k) const {
  CyclicWord out = *this;
  if (!letters_.empty()) {
    std::rotate(out.letters_.begin(), out.letters_.begin() + static_cast<std::ptrdiff_t>(k % letters_.size()),
                out.letters_.end());
  }
  return out;
}

CyclicWord CyclicWord::inverse() const {
  CyclicWord out;
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.letters_.push_back(it->inverse());
  return out;
}

Word free_reduce(std::span<const Letter> letters) {
  std::vector<Letter> stack;
  stack.reserve(letters.size());
  for (Letter l : letters) {
    if (!stack.empty() && stack.back().cancels(l)) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return Word(Word::Trusted{}, std::move(stack));
}

CyclicReduction cyclic_reduce(const Word& w) {
  auto letters = w.letters();
  std::size_t lo = 0;
  std::size_t hi = letters.size();
  while (hi - lo >= 2 && letters[lo].cancels(letters[hi - 1])) {
    ++lo;
    --hi;
  }
  std::vector<Letter> core(letters.begin() + static_cast<std::ptrdiff_t>(lo),
                           letters.begin() + static_cast<std::ptrdiff_t>(hi));
  std::vector<Letter> conj(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(lo));
  return {CyclicWord(std::move(core)), Word(std::move(conj))};
}

Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out.push_back(it->inverse());
  return Word(std::move(out));
}

Word concat(const Word& u, const Word& v) {
  std::vector<Letter> joined(u.begin(), u.end());
  joined.insert(joined.end(), v.begin(), v.end());
  return free_reduce(joined);
}

Word prefix(const Word& w, std::size_t k) {
  if (k > w.size()) {
    throw Error(ErrorKind::OutOfRange,
                "prefix length " + std::to_string(k) + " exceeds word length " + std::to_string(w.size()));
  }
  return Word(std::vector<Letter>(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k)));
}

std::size_t conjugacy_length(const Word& w) { return cyclic_reduce(w).core.size(); }

std::vector<int> to_signed(std::span<const Letter> letters) {
  std::vector<int> out;
  out.reserve(letters.size());
  for (Letter l : letters) out.push_back(l.signed_value());
  return out;
}

// ---------------------------------------------------------------------------
// Text syntax

namespace {

class WordParser {
 public:
  WordParser(std::string_view text, const std::vector<std::string>& names)
      : text_(text), names_(names) {}

  std::vector<Letter> parse_all() {
    std::vector<Letter> out = parse_sequence();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::Syntax,
                msg + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_factor_start() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return c == '[' || c == '(' || c == '1' || std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }

  std::vector<Letter> parse_sequence() {
    std::vector<Letter> out;
    while (at_factor_start()) {
      auto f = parse_factor();
      out.insert(out.end(), f.begin(), f.end());
    }
    return out;
  }

  std::vector<Letter> parse_factor() {
    std::vector<Letter> atom = parse_atom();
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      skip_space();
      long exponent = parse_integer();
      std::vector<Letter> base = atom;
      if (exponent < 0) {
        std::reverse(base.begin(), base.end());
        for (auto& l : base) l = l.inverse();
        exponent = -exponent;
      }
      atom.clear();
      for (long i = 0; i < exponent; ++i) atom.insert(atom.end(), base.begin(), base.end());
    }
    return atom;
  }

  long parse_integer() {
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    long value = 0;
    std::string_view digits = text_.substr(start, pos_ - start);
    if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
      pos_ = start;
      fail("expected integer exponent");
    }
    if (value > 100000 || value < -100000) fail("exponent too large");
    return value;
  }

  std::vector<Letter> parse_atom() {
    skip_space();
    char c = text_[pos_];
    if (c == '[') {
      ++pos_;
      std::vector<Letter> u = parse_sequence();
      expect(',');
      std::vector<Letter> v = parse_sequence();
      expect(']');
      std::vector<Letter> out = u;
      out.insert(out.end(), v.begin(), v.end());
      for (auto it = u.rbegin(); it != u.rend(); ++it) out.push_back(it->inverse());
      for (auto it = v.rbegin(); it != v.rend(); ++it) out.push_back(it->inverse());
      return out;
    }
    if (c == '(') {
      ++pos_;
      std::vector<Letter> inner = parse_sequence();
      expect(')');
      return inner;
    }
    if (c == '1') {
      ++pos_;
      return {};
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    std::string_view name = text_.substr(start, pos_ - start);
    return {Letter(resolve(name, start), +1)};
  }

  int resolve(std::string_view name, std::size_t at) {
    if (!names_.empty()) {
      auto it = std::find(names_.begin(), names_.end(), name);
      if (it == names_.end()) {
        pos_ = at;
        fail("undeclared generator '" + std::string(name) + "'");
      }
      return static_cast<int>(it - names_.begin()) + 1;
    }
    if (name.size() >= 2 && name[0] == 'x') {
      int index = 0;
      auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), index);
      if (ec == std::errc() && ptr == name.data() + name.size() && index >= 1) return index;
    }
    pos_ = at;
    fail("unknown generator '" + std::string(name) + "' (expected x1, x2, ...)");
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string_view text_;
  const std::vector<std::string>& names_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<Letter> parse_letters(std::string_view text, const std::vector<std::string>& names) {
  return WordParser(text, names).parse_all();
}

Word parse_word(std::string_view text, const std::vector<std::string>& names) {
  return free_reduce(parse_letters(text, names));
}

std::string format_letters(std::span<const Letter> letters, const std::vector<std::string>& names) {
  if (letters.empty()) return "1";
  std::ostringstream out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) out << ' ';
    int g = letters[i].generator();
    if (!names.empty() && g <= static_cast<int>(names.size())) {
      out << names[static_cast<std::size_t>(g - 1)];
    } else {
      out << 'x' << g;
    }
    if (letters[i].sign() < 0) out << "^-1";
  }
  return out.str();
}

}  // namespace bnsigma
