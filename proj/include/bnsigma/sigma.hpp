#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bnsigma/character.hpp"
#include "bnsigma/fox.hpp"
#include "bnsigma/presentation.hpp"
#include "bnsigma/sections.hpp"

namespace bnsigma {

enum class Membership { InSigma, NotInSigma, Unknown };

std::string_view to_string(Membership m);

// A membership decision and the chain of facts it rests on. The criterion is
// sufficient, not complete: Unknown means neither condition applied.
struct SigmaVerdict {
  Membership membership = Membership::Unknown;
  Character character;
  bool no_zero_divisors = false;
  std::vector<std::string> justification;
  std::optional<Normalization> normalization;
  std::optional<ConditionReport> condition;
  std::optional<StructureReport> structure;
  std::optional<UnitVerdict> leading_unit;
};

// Tries each admissible normalization of phi (default first) and decides from
// the first one satisfying the unique- or repeated-minimum condition.
SigmaVerdict decide(const Presentation& p, const Character& phi, bool no_zero_divisors);

// Same, restricted to one choice of distinguished generator.
SigmaVerdict decide_with(const Presentation& p, const Character& phi, int distinguished, bool no_zero_divisors);

struct SymmetryReport {
  int b1 = 0;
  Character character;  // primitive generator of the character lattice
  SigmaVerdict plus;
  SigmaVerdict minus;
  bool nonsymmetric = false;
  bool not_lerf = false;
  bool not_fibering = false;
};

// Requires first_betti(p) == 1; throws Error(Precondition) otherwise.
SymmetryReport symmetry_report(const Presentation& p, bool no_zero_divisors);

// Same comparison of +phi and -phi for an explicit character, whatever b1 is.
SymmetryReport symmetry_report(const Presentation& p, const Character& phi, bool no_zero_divisors);

}  // namespace bnsigma
