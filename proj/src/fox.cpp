#include "bnsigma/fox.hpp"

#include <algorithm>

#include "bnsigma/error.hpp"

namespace bnsigma {

std::string_view to_string(UnitStatus s) {
  switch (s) {
    case UnitStatus::Unit: return "UNIT";
    case UnitStatus::NonUnit: return "NONUNIT";
    case UnitStatus::Unknown: return "UNKNOWN";
  }
  return "?";
}

std::string_view to_string(LeadingShape s) {
  switch (s) {
    case LeadingShape::Single: return "SINGLE";
    case LeadingShape::Pair: return "PAIR";
    case LeadingShape::Other: return "OTHER";
  }
  return "?";
}

GroupRingElement fox_derivative(std::span<const Letter> r, int j) {
  GroupRingElement out;
  std::vector<Letter> prefix;
  prefix.reserve(r.size());
  for (Letter l : r) {
    if (l.generator() == j && l.sign() > 0) out.add_term(Word(prefix), 1);
    prefix.push_back(l);
    if (l.generator() == j && l.sign() < 0) out.add_term(Word(prefix), -1);
  }
  return out;
}

std::vector<std::vector<GroupRingElement>> fox_matrix(const Presentation& p) {
  std::vector<std::vector<GroupRingElement>> m;
  for (const auto& r : p.relators()) {
    std::vector<GroupRingElement> row;
    for (int j = 1; j <= p.rank(); ++j) row.push_back(fox_derivative(r, j));
    m.push_back(std::move(row));
  }
  return m;
}

UnitVerdict leading_unit_test(const GroupRingElement& piece, const Character& phi, bool no_zero_divisors) {
  std::optional<std::int64_t> degree;
  for (const auto& [w, c] : piece.terms()) {
    std::int64_t d = evaluate(phi, w);
    if (degree && *degree != d) throw Error(ErrorKind::Precondition, "piece is not phi-homogeneous");
    degree = d;
  }
  UnitVerdict v;
  if (piece.is_zero()) {
    v.status = UnitStatus::NonUnit;
    return v;
  }
  if (piece.size() == 1) {
    v.status = UnitStatus::Unit;
    v.base = piece.terms().begin()->first;
    return v;
  }
  if (piece.size() == 2) {
    auto it = piece.terms().begin();
    Word u = it->first;
    Rational lambda = it->second;
    ++it;
    Word w = it->first;
    Rational mu = it->second;
    // Prefer the shorter prefix as the base when one term extends the other.
    if (w.size() < u.size()) {
      std::swap(u, w);
      std::swap(lambda, mu);
    }
    v.base = u;
    v.kernel_element = concat(invert(u), w);
    v.alpha = mu / lambda;
    v.status = no_zero_divisors ? UnitStatus::NonUnit : UnitStatus::Unknown;
    return v;
  }
  return v;
}

namespace {

[[noreturn]] void verification_failure(const std::string& what, std::size_t row, std::size_t col,
                                       const GroupRingElement& entry) {
  throw Error(ErrorKind::VerificationFailure, what + " at restricted Fox matrix entry (" + std::to_string(row + 1) +
                                                  "," + std::to_string(col + 1) + "): " + entry.to_string());
}

}  // namespace

StructureReport structural_verify(const Presentation& p, const Character& phi, const ConditionReport& report) {
  if (!is_normalized(p, phi)) throw Error(ErrorKind::Precondition, "structural_verify needs a normalized character");
  if (report.status == ConditionStatus::Neither) {
    throw Error(ErrorKind::Precondition, "structural_verify needs a UNIQUE or REPEATED classification");
  }
  if (report.matching.size() != p.relator_count()) {
    throw Error(ErrorKind::Precondition, "classification matching does not cover every relator");
  }

  StructureReport s;
  const bool repeated = report.status == ConditionStatus::Repeated;
  if (repeated) s.slot_relators.push_back(*report.repeated_relator);
  for (std::size_t i = 0; i < p.relator_count(); ++i) {
    if (!repeated || i != *report.repeated_relator) s.slot_relators.push_back(i);
  }
  for (std::size_t i : s.slot_relators) s.slot_generators.push_back(report.matching[i]);

  const std::size_t n = s.slot_relators.size();
  s.offdiag_ok.assign(n, std::vector<bool>(n, true));
  s.entry_min_degree.assign(n, std::vector<std::optional<std::int64_t>>(n));
  for (std::size_t row = 0; row < n; ++row) {
    const CyclicWord& r = p.relator(s.slot_relators[row]);
    const std::int64_t minimum = cycle_walk(r, phi).min_height;
    s.minima.push_back(minimum);
    std::vector<GroupRingElement> entries;
    for (std::size_t col = 0; col < n; ++col) {
      GroupRingElement e = fox_derivative(r, s.slot_generators[col]);
      GradedDecomposition g = grade(e, phi);
      s.entry_min_degree[row][col] = g.min_degree;
      if (g.min_degree && *g.min_degree < minimum) {
        verification_failure("term below the relator minimum", row, col, e);
      }
      if (row != col) {
        s.offdiag_ok[row][col] = !g.min_degree || *g.min_degree > minimum;
        if (!s.offdiag_ok[row][col]) verification_failure("off-diagonal term at the relator minimum", row, col, e);
      } else {
        if (!g.min_degree || *g.min_degree != minimum) {
          verification_failure("diagonal entry has no term at the relator minimum", row, col, e);
        }
        LeadingPiece lead{LeadingShape::Other, minimum, *g.leading()};
        if (lead.piece.size() == 1) lead.shape = LeadingShape::Single;
        if (lead.piece.size() == 2) lead.shape = LeadingShape::Pair;
        const LeadingShape expected = (repeated && row == 0) ? LeadingShape::Pair : LeadingShape::Single;
        if (lead.shape != expected) {
          verification_failure("diagonal leading piece is " + std::string(to_string(lead.shape)) + ", expected " +
                                   std::string(to_string(expected)),
                               row, col, e);
        }
        s.diag_leading.push_back(std::move(lead));
      }
      entries.push_back(std::move(e));
    }
    s.restricted_matrix.push_back(std::move(entries));
  }

  if (repeated) {
    const GroupRingElement& piece = s.diag_leading.front().piece;
    UnitVerdict v = leading_unit_test(piece, phi, true);
    s.nonunit_certificate = NonUnitCertificate{0, *v.base, *v.kernel_element, *v.alpha, piece};
  }
  return s;
}

}  // namespace bnsigma
