#include "bnsigma/character.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "bnsigma/error.hpp"
#include "bnsigma/linalg.hpp"

namespace bnsigma {

bool Character::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](auto v) { return v == 0; });
}

std::int64_t Character::content() const { return bnsigma::content(values_); }

Character Character::primitive() const {
  std::int64_t g = content();
  if (g == 0) return *this;
  std::vector<std::int64_t> v = values_;
  for (auto& x : v) x /= g;
  return Character(std::move(v));
}

Character Character::operator-() const { return scaled(-1); }

Character Character::scaled(std::int64_t k) const {
  std::vector<std::int64_t> v = values_;
  for (auto& x : v) x *= k;
  return Character(std::move(v));
}

std::string Character::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < values_.size(); ++i) out << (i ? "," : "") << values_[i];
  return out.str();
}

Character parse_character(std::string_view text) {
  std::vector<std::int64_t> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = text.substr(start, comma - start);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw Error(ErrorKind::Syntax, "bad character value '" + std::string(tok) + "'");
    }
    values.push_back(v);
    start = comma + 1;
  }
  return Character(std::move(values));
}

std::int64_t evaluate(const Character& phi, std::span<const Letter> letters) {
  std::int64_t sum = 0;
  for (Letter l : letters) {
    if (static_cast<std::size_t>(l.generator()) > phi.rank()) {
      throw Error(ErrorKind::OutOfRange, "letter x" + std::to_string(l.generator()) +
                                             " beyond character rank " + std::to_string(phi.rank()));
    }
    sum += phi.on(l);
  }
  return sum;
}

bool vanishes_on_relators(const Presentation& p, const Character& phi) {
  return std::all_of(p.relators().begin(), p.relators().end(),
                     [&](const CyclicWord& r) { return evaluate(phi, r.letters()) == 0; });
}

std::vector<Character> character_lattice(const Presentation& p) {
  std::vector<Character> out;
  for (auto& v : integer_kernel(abelianization_matrix(p))) out.emplace_back(std::move(v));
  return out;
}

Letter Normalization::forward(Letter old) const {
  auto it = std::find(order.begin(), order.end(), old.generator());
  auto k = static_cast<std::size_t>(it - order.begin());
  return Letter(static_cast<int>(k) + 1, inverted[k] ? -old.sign() : old.sign());
}

Letter Normalization::backward(Letter transformed) const {
  auto k = static_cast<std::size_t>(transformed.generator() - 1);
  return Letter(order[k], inverted[k] ? -transformed.sign() : transformed.sign());
}

std::vector<Letter> Normalization::forward(std::span<const Letter> old) const {
  std::vector<Letter> out;
  out.reserve(old.size());
  for (Letter l : old) out.push_back(forward(l));
  return out;
}

std::vector<Letter> Normalization::backward(std::span<const Letter> transformed) const {
  std::vector<Letter> out;
  out.reserve(transformed.size());
  for (Letter l : transformed) out.push_back(backward(l));
  return out;
}

Presentation Normalization::restore(const Presentation& transformed) const {
  std::vector<CyclicWord> rels;
  for (const auto& r : transformed.relators()) rels.emplace_back(backward(r.letters()));
  return Presentation(transformed.rank(), std::move(rels), original_names);
}

bool is_normalized(const Presentation& p, const Character& phi) {
  if (p.deficiency() != 1 || static_cast<int>(phi.rank()) != p.rank()) return false;
  for (std::size_t i = 0; i + 1 < phi.rank(); ++i)
    if (phi[i] < 0) return false;
  return phi[phi.rank() - 1] < 0;
}

int default_distinguished(const Character& phi) {
  auto pick = [&](bool negative) {
    int best = 0;
    std::int64_t best_abs = 0;
    for (std::size_t i = 0; i < phi.rank(); ++i) {
      std::int64_t v = phi[i];
      if ((negative && v < 0) || (!negative && v > 0)) {
        std::int64_t a = v < 0 ? -v : v;
        if (a > best_abs) {
          best_abs = a;
          best = static_cast<int>(i) + 1;
        }
      }
    }
    return best;
  };
  int g = pick(true);
  if (g == 0) g = pick(false);
  if (g == 0) throw Error(ErrorKind::Precondition, "character is zero");
  return g;
}

std::vector<int> distinguished_candidates(const Character& phi) {
  std::vector<int> out{default_distinguished(phi)};
  for (std::size_t i = 0; i < phi.rank(); ++i) {
    int g = static_cast<int>(i) + 1;
    if (phi[i] != 0 && g != out.front()) out.push_back(g);
  }
  return out;
}

Normalization normalize_with(const Presentation& p, const Character& phi, int distinguished) {
  require_deficiency_one(p);
  if (static_cast<int>(phi.rank()) != p.rank()) {
    throw Error(ErrorKind::Precondition, "character rank " + std::to_string(phi.rank()) +
                                             " does not match presentation rank " + std::to_string(p.rank()));
  }
  if (phi.is_zero()) throw Error(ErrorKind::Precondition, "character is zero");
  for (std::size_t i = 0; i < p.relator_count(); ++i) {
    if (evaluate(phi, p.relator(i).letters()) != 0) {
      throw Error(ErrorKind::Precondition,
                  "character " + phi.to_string() + " does not vanish on relator " + std::to_string(i + 1));
    }
  }
  if (distinguished < 1 || distinguished > p.rank() || phi.on_generator(distinguished) == 0) {
    throw Error(ErrorKind::Precondition, "distinguished generator must have nonzero value");
  }

  Normalization n{{}, {}, p.names(), p, phi};
  for (int g = 1; g <= p.rank(); ++g) {
    if (g != distinguished) n.order.push_back(g);
  }
  n.order.push_back(distinguished);
  std::vector<std::int64_t> values;
  for (std::size_t k = 0; k < n.order.size(); ++k) {
    std::int64_t v = phi.on_generator(n.order[k]);
    bool last = k + 1 == n.order.size();
    bool inv = last ? v > 0 : v < 0;
    n.inverted.push_back(inv);
    values.push_back(inv ? -v : v);
  }

  std::vector<CyclicWord> rels;
  for (const auto& r : p.relators()) rels.emplace_back(n.forward(r.letters()));
  std::vector<std::string> names;
  for (std::size_t k = 0; k < n.order.size(); ++k) {
    std::string name = p.names()[static_cast<std::size_t>(n.order[k] - 1)];
    names.push_back(n.inverted[k] ? name + "_inv" : name);
  }
  n.transformed_presentation = Presentation(p.rank(), std::move(rels), std::move(names));
  n.transformed_character = Character(std::move(values));
  return n;
}

Normalization normalize(const Presentation& p, const Character& phi) {
  if (phi.is_zero()) throw Error(ErrorKind::Precondition, "character is zero");
  return normalize_with(p, phi, default_distinguished(phi));
}

}  // namespace bnsigma
