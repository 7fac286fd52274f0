#pragma once

#include <cstddef>
#include <vector>

#include "bnsigma/character.hpp"
#include "bnsigma/presentation.hpp"

namespace bnsigma {

struct InsertionStep {
  std::size_t min_vertex = 0;  // where [x_{n+1}, x_i^eps] went in r_i
  int epsilon = 1;
  std::size_t max_vertex = 0;  // where [x_{n+1}^-1, x_i^-eps] (squared for i = 1) went in r_i'
};

struct TransformRecord {
  Presentation input;
  Character phi;
  std::vector<InsertionStep> steps;
  Presentation output;
};

// For each relator r_i of a normalized tuple, inserts [x_{n+1}, x_i^eps] at the
// first phi-minimal vertex (eps = -1 if phi(x_i) > 0, else +1) and then
// [x_{n+1}^-1, x_i^-eps] at the first phi-maximal vertex of the result,
// squared for r_1. Afterwards phi has a unique minimum and -phi a repeated one.
//
// Throws Error(Precondition) unless is_normalized(tuple, phi), and
// Error(FreeCancellation) when an inserted commutator would cancel against a
// neighbouring letter.
TransformRecord insert_commutators(const Presentation& tuple, const Character& phi);

// Left inverse of insert_commutators: strips the commutators at the first
// phi-maximal and phi-minimal vertices. Throws Error(NotAnImage) if `image` is
// not an output of insert_commutators for phi.
Presentation remove_commutators(const Presentation& image, const Character& phi);

}  // namespace bnsigma
