#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bnsigma/character.hpp"
#include "bnsigma/word.hpp"

namespace bnsigma {

using Rational = boost::multiprecision::cpp_rational;

// Finite formal sum of free-group words with rational coefficients. Zero
// coefficients are never stored.
class GroupRingElement {
 public:
  using Terms = std::map<Word, Rational>;

  GroupRingElement() = default;
  static GroupRingElement one() { return term(Word{}, 1); }
  static GroupRingElement term(const Word& w, const Rational& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Word& w) const;

  void add_term(const Word& w, const Rational& c);

  GroupRingElement& operator+=(const GroupRingElement& o);
  GroupRingElement& operator-=(const GroupRingElement& o);
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
  GroupRingElement operator-() const;

  std::string to_string(const std::vector<std::string>& names = {}) const;

  friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

 private:
  Terms terms_;
};

// Terms bucketed by phi-degree. min_degree is nullopt for the zero element,
// standing in for ord_t(0) = infinity.
struct GradedDecomposition {
  std::map<std::int64_t, GroupRingElement> pieces;
  std::optional<std::int64_t> min_degree;

  const GroupRingElement* leading() const {
    return pieces.empty() ? nullptr : &pieces.begin()->second;
  }
};

GradedDecomposition grade(const GroupRingElement& e, const Character& phi);

}  // namespace bnsigma
