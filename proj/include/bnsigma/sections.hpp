#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "bnsigma/character.hpp"
#include "bnsigma/presentation.hpp"
#include "bnsigma/word.hpp"

namespace bnsigma {

// Height profile of the cycle graph C_r. Vertex k is labelled by the prefix of
// length k; edge k joins vertex k to vertex k+1 (mod |r|) and carries r[k].
struct CycleWalk {
  CyclicWord relator;
  std::vector<std::int64_t> heights;
  std::int64_t min_height = 0;
  std::int64_t max_height = 0;
};

// Throws Error(Precondition) if phi(r) != 0.
CycleWalk cycle_walk(const CyclicWord& r, const Character& phi);

enum class ArcKind { Vertex, Edge, LongArc, Circle };

std::string_view to_string(ArcKind kind);

// One connected component of a section: vertices first..last joined by the
// full edges between them. `incoming` / `outgoing` are the edges entering the
// first vertex and leaving the last one (absent for a full circle).
struct SectionArc {
  ArcKind kind = ArcKind::Vertex;
  std::size_t first_vertex = 0;
  std::size_t last_vertex = 0;
  std::vector<std::size_t> inner_edges;
  std::vector<Letter> inner_letters;
  std::optional<Letter> incoming;
  std::optional<Letter> outgoing;
};

struct SectionDescriptor {
  std::int64_t height = 0;
  std::vector<std::size_t> vertices;
  std::vector<std::size_t> full_edges;
  std::size_t components = 0;
  std::vector<SectionArc> arcs;  // in order of first vertex
};

SectionDescriptor lower_section(const CyclicWord& r, const Character& phi);
// lower_section(r, -phi).
SectionDescriptor upper_section(const CyclicWord& r, const Character& phi);

// True if `arc` has the local shape allowed for generator `g` when
// `distinguished` plays the role of x_{n+1}: a vertex whose adjacent edges are
// x_g^{+-1} and x_{n+1}^{+-1}, or an edge x_g^{+-1} flanked by x_{n+1}^{+-1}.
bool arc_matches(const SectionArc& arc, int g, int distinguished);

enum class ConditionStatus { Unique, Repeated, Neither };

std::string_view to_string(ConditionStatus s);

struct RelatorWitness {
  SectionDescriptor section;
  std::optional<int> single_generator;   // shape fits x_g once
  std::optional<int> doubled_generator;  // two same-type occurrences for x_g
};

struct ConditionReport {
  ConditionStatus status = ConditionStatus::Neither;
  // matching[i] = generator (1-based, <= n) assigned to relator i.
  std::vector<int> matching;
  std::optional<std::size_t> repeated_relator;  // 0-based
  std::vector<RelatorWitness> witnesses;
};

// Requires is_normalized(p, phi); throws Error(Precondition) otherwise.
ConditionReport classify(const Presentation& p, const Character& phi);

struct NormalizedCondition {
  Normalization normalization;
  ConditionReport report;
};

// Classifies an arbitrary nonzero character of a deficiency-1 presentation by
// trying every admissible normalization (distinguished_candidates order) and
// returning the first UNIQUE or REPEATED result, or the default
// normalization's NEITHER report.
NormalizedCondition classify_character(const Presentation& p, const Character& phi);

// Lexicographically least perfect matching of rows to columns, where
// allowed[i] lists the columns row i may take. Empty result if none exists.
std::vector<int> least_perfect_matching(const std::vector<std::vector<int>>& allowed);

}  // namespace bnsigma
