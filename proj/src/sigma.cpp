#include "bnsigma/sigma.hpp"

#include <sstream>

#include "bnsigma/error.hpp"

namespace bnsigma {

std::string_view to_string(Membership m) {
  switch (m) {
    case Membership::InSigma: return "IN_SIGMA";
    case Membership::NotInSigma: return "NOT_IN_SIGMA";
    case Membership::Unknown: return "UNKNOWN";
  }
  return "?";
}

namespace {

void check_inputs(const Presentation& p, const Character& phi) {
  require_deficiency_one(p);
  if (static_cast<int>(phi.rank()) != p.rank()) {
    throw Error(ErrorKind::Precondition, "character has " + std::to_string(phi.rank()) + " values, presentation has " +
                                             std::to_string(p.rank()) + " generators");
  }
  if (phi.is_zero()) throw Error(ErrorKind::Precondition, "character is zero");
  if (!vanishes_on_relators(p, phi)) {
    throw Error(ErrorKind::Precondition, "character " + phi.to_string() + " does not vanish on every relator");
  }
}

std::string describe(const Normalization& n) {
  std::ostringstream out;
  out << "normalized by generator order (";
  for (std::size_t k = 0; k < n.order.size(); ++k) {
    out << (k ? ", " : "") << n.original_names[static_cast<std::size_t>(n.order[k] - 1)]
        << (n.inverted[k] ? "^-1" : "");
  }
  out << "), character " << n.transformed_character.to_string();
  return out.str();
}

std::string describe_matching(const ConditionReport& r, const Presentation& tp) {
  std::ostringstream out;
  for (std::size_t i = 0; i < r.matching.size(); ++i) {
    out << (i ? ", " : "") << 'r' << i + 1 << "->" << tp.names()[static_cast<std::size_t>(r.matching[i] - 1)];
  }
  return out.str();
}

SigmaVerdict unknown_verdict(const Character& phi, bool no_zero_divisors) {
  SigmaVerdict v;
  v.character = phi;
  v.no_zero_divisors = no_zero_divisors;
  v.justification.push_back("no admissible normalization satisfies the unique- or repeated-minimum condition");
  v.justification.push_back("the criterion is sufficient but not complete; membership undecided");
  return v;
}

// Turns a classification into a verdict, running the structural check on
// repeated minima.
SigmaVerdict verdict_from(const Character& phi, Normalization n, ConditionReport cond, bool no_zero_divisors) {
  if (cond.status == ConditionStatus::Neither) {
    SigmaVerdict v = unknown_verdict(phi, no_zero_divisors);
    v.normalization = std::move(n);
    v.condition = std::move(cond);
    return v;
  }
  const Presentation& tp = n.transformed_presentation;
  const Character& tphi = n.transformed_character;

  SigmaVerdict v;
  v.character = phi;
  v.no_zero_divisors = no_zero_divisors;
  v.justification.push_back(describe(n));
  if (cond.status == ConditionStatus::Unique) {
    v.membership = Membership::InSigma;
    v.justification.push_back("unique-minimum condition holds (" + describe_matching(cond, tp) + ")");
    v.justification.push_back("unique-minimum condition is sufficient for membership in Sigma(G)");
  } else {
    v.justification.push_back("repeated-minimum condition holds at relator r" +
                              std::to_string(*cond.repeated_relator + 1) + " (" + describe_matching(cond, tp) + ")");
    StructureReport s = structural_verify(tp, tphi, cond);
    v.justification.push_back(
        "restricted Fox matrix A': off-diagonal terms lie strictly above each row minimum; "
        "diagonal leading pieces are single group elements except the repeated row");
    UnitVerdict unit = leading_unit_test(s.nonunit_certificate->piece, tphi, no_zero_divisors);
    const auto& cert = *s.nonunit_certificate;
    std::ostringstream piece;
    piece << "repeated row leading piece u(1 + alpha v) with u = " << format_word(cert.base, tp.names())
          << ", v = " << format_word(cert.kernel_element, tp.names()) << ", alpha = " << cert.alpha
          << ", phi(v) = 0";
    v.justification.push_back(piece.str());
    if (unit.status == UnitStatus::NonUnit) {
      v.membership = Membership::NotInSigma;
      v.justification.push_back("hypothesis asserted: QG has no zero divisors, so v has infinite order");
      v.justification.push_back("g - alpha with phi(g) = 0 is not a Novikov unit, hence A' is not invertible");
      v.justification.push_back("H_1(G; Novikov ring) != 0, so the character is not in Sigma(G)");
    } else {
      v.membership = Membership::Unknown;
      v.justification.push_back(
          "no-zero-divisor hypothesis not asserted; the non-unit certificate cannot be applied");
    }
    v.structure = std::move(s);
    v.leading_unit = unit;
  }
  v.normalization = std::move(n);
  v.condition = std::move(cond);
  return v;
}

}  // namespace

SigmaVerdict decide(const Presentation& p, const Character& phi, bool no_zero_divisors) {
  check_inputs(p, phi);
  NormalizedCondition nc = classify_character(p, phi);
  return verdict_from(phi, std::move(nc.normalization), std::move(nc.report), no_zero_divisors);
}

SigmaVerdict decide_with(const Presentation& p, const Character& phi, int distinguished, bool no_zero_divisors) {
  check_inputs(p, phi);
  Normalization n = normalize_with(p, phi, distinguished);
  ConditionReport cond = classify(n.transformed_presentation, n.transformed_character);
  return verdict_from(phi, std::move(n), std::move(cond), no_zero_divisors);
}

SymmetryReport symmetry_report(const Presentation& p, bool no_zero_divisors) {
  require_deficiency_one(p);
  const int b1 = first_betti(p);
  if (b1 != 1) throw Error(ErrorKind::Precondition, "b1 = " + std::to_string(b1) + ", supply --char");
  return symmetry_report(p, character_lattice(p).front(), no_zero_divisors);
}

SymmetryReport symmetry_report(const Presentation& p, const Character& phi, bool no_zero_divisors) {
  SymmetryReport r;
  r.b1 = first_betti(p);
  r.character = phi;
  r.plus = decide(p, r.character, no_zero_divisors);
  r.minus = decide(p, -r.character, no_zero_divisors);
  const auto in = Membership::InSigma;
  const auto out = Membership::NotInSigma;
  r.nonsymmetric = (r.plus.membership == in && r.minus.membership == out) ||
                   (r.plus.membership == out && r.minus.membership == in);
  r.not_lerf = r.nonsymmetric;
  r.not_fibering = r.plus.membership == out || r.minus.membership == out;
  return r;
}

}  // namespace bnsigma
