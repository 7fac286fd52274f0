#include "bnsigma/group_ring.hpp"

#include <sstream>

namespace bnsigma {

GroupRingElement GroupRingElement::term(const Word& w, const Rational& c) {
  GroupRingElement e;
  e.add_term(w, c);
  return e;
}

Rational GroupRingElement::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void GroupRingElement::add_term(const Word& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  GroupRingElement out;
  for (const auto& [u, x] : a.terms_)
    for (const auto& [v, y] : b.terms_) out.add_term(concat(u, v), x * y);
  return out;
}

GroupRingElement GroupRingElement::operator-() const {
  GroupRingElement out;
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
  return out;
}

std::string GroupRingElement::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    Rational mag = c < 0 ? Rational(-c) : c;
    out << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (mag != 1) out << mag << '*';
    out << (w.empty() ? "1" : format_word(w, names));
    first = false;
  }
  return out.str();
}

GradedDecomposition grade(const GroupRingElement& e, const Character& phi) {
  GradedDecomposition g;
  for (const auto& [w, c] : e.terms()) g.pieces[evaluate(phi, w)].add_term(w, c);
  if (!g.pieces.empty()) g.min_degree = g.pieces.begin()->first;
  return g;
}

}  // namespace bnsigma
