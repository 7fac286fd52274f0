#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "bnsigma/character.hpp"
#include "bnsigma/group_ring.hpp"
#include "bnsigma/presentation.hpp"
#include "bnsigma/sections.hpp"

namespace bnsigma {

// Free derivative d r / d x_j: +[r]_{k-1} for every letter r_k = x_j and
// -[r]_k for every letter r_k = x_j^-1.
GroupRingElement fox_derivative(std::span<const Letter> r, int j);
inline GroupRingElement fox_derivative(const CyclicWord& r, int j) { return fox_derivative(r.letters(), j); }

// n x m matrix of all free derivatives of the relators.
std::vector<std::vector<GroupRingElement>> fox_matrix(const Presentation& p);

enum class UnitStatus { Unit, NonUnit, Unknown };

std::string_view to_string(UnitStatus s);

struct UnitVerdict {
  UnitStatus status = UnitStatus::Unknown;
  // For two-term pieces lambda*u + mu*w: u, v = u^-1 w and alpha = mu/lambda,
  // so the piece is lambda*u*(1 + alpha*v) with phi(v) = 0.
  std::optional<Word> base;
  std::optional<Word> kernel_element;
  std::optional<Rational> alpha;
};

// Decides whether a phi-homogeneous piece is a unit in the Novikov ring from
// its shape alone. A single term is a unit; two terms u(lambda + mu v) with
// phi(v) = 0 are a non-unit provided QG has no zero divisors (so v has
// infinite order). Anything else is Unknown. Throws Error(Precondition) if the
// piece is not homogeneous.
UnitVerdict leading_unit_test(const GroupRingElement& piece, const Character& phi, bool no_zero_divisors);

enum class LeadingShape { Single, Pair, Other };

std::string_view to_string(LeadingShape s);

struct LeadingPiece {
  LeadingShape shape = LeadingShape::Other;
  std::int64_t degree = 0;
  GroupRingElement piece;
};

struct NonUnitCertificate {
  std::size_t slot = 0;  // always 0: the repeated relator is moved first
  Word base;
  Word kernel_element;
  Rational alpha;
  GroupRingElement piece;
};

// Summary of the leading phi-degrees of the restricted Fox matrix A' (rows:
// relators, columns: their matched generators; the repeated relator first).
struct StructureReport {
  std::vector<std::size_t> slot_relators;  // 0-based relator per slot
  std::vector<int> slot_generators;        // generator per slot
  std::vector<std::int64_t> minima;        // P_i per slot
  std::vector<std::vector<bool>> offdiag_ok;
  std::vector<std::vector<std::optional<std::int64_t>>> entry_min_degree;
  std::vector<LeadingPiece> diag_leading;
  std::optional<NonUnitCertificate> nonunit_certificate;
  std::vector<std::vector<GroupRingElement>> restricted_matrix;
};

// Requires a normalized (p, phi) and a Unique or Repeated report for it.
// Checks that every off-diagonal entry of row i lives in degrees > P_i, that
// the diagonal leading pieces are single terms (two terms on the repeated
// slot), and emits the non-unit certificate for a repeated report. Throws
// Error(VerificationFailure) naming the offending entry if any check fails.
StructureReport structural_verify(const Presentation& p, const Character& phi, const ConditionReport& report);

}  // namespace bnsigma
