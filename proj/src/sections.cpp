#include "bnsigma/sections.hpp"

#include <algorithm>
#include <functional>

#include "bnsigma/error.hpp"

namespace bnsigma {

std::string_view to_string(ArcKind kind) {
  switch (kind) {
    case ArcKind::Vertex: return "vertex";
    case ArcKind::Edge: return "edge";
    case ArcKind::LongArc: return "arc";
    case ArcKind::Circle: return "circle";
  }
  return "?";
}

std::string_view to_string(ConditionStatus s) {
  switch (s) {
    case ConditionStatus::Unique: return "UNIQUE";
    case ConditionStatus::Repeated: return "REPEATED";
    case ConditionStatus::Neither: return "NEITHER";
  }
  return "?";
}

CycleWalk cycle_walk(const CyclicWord& r, const Character& phi) {
  CycleWalk walk{r, {}, 0, 0};
  walk.heights.reserve(r.size());
  std::int64_t h = 0;
  for (Letter l : r) {
    walk.heights.push_back(h);
    h += evaluate(phi, std::span<const Letter>(&l, 1));
  }
  if (h != 0) {
    throw Error(ErrorKind::Precondition, "character " + phi.to_string() + " does not vanish on relator " +
                                             format_letters(r.letters()));
  }
  if (!walk.heights.empty()) {
    auto [lo, hi] = std::minmax_element(walk.heights.begin(), walk.heights.end());
    walk.min_height = *lo;
    walk.max_height = *hi;
  }
  return walk;
}

SectionDescriptor lower_section(const CyclicWord& r, const Character& phi) {
  CycleWalk walk = cycle_walk(r, phi);
  const std::size_t len = r.size();
  SectionDescriptor s;
  s.height = walk.min_height;
  if (len == 0) return s;

  std::vector<bool> in_section(len, false);
  for (std::size_t v = 0; v < len; ++v) {
    if (walk.heights[v] == s.height) {
      in_section[v] = true;
      s.vertices.push_back(v);
    }
  }
  std::vector<bool> full(len, false);
  for (std::size_t e = 0; e < len; ++e) {
    if (in_section[e] && in_section[(e + 1) % len]) {
      full[e] = true;
      s.full_edges.push_back(e);
    }
  }

  if (s.full_edges.size() == len) {
    SectionArc arc;
    arc.kind = ArcKind::Circle;
    arc.first_vertex = 0;
    arc.last_vertex = len - 1;
    arc.inner_edges = s.full_edges;
    arc.inner_letters.assign(r.begin(), r.end());
    s.arcs.push_back(std::move(arc));
    s.components = 1;
    return s;
  }

  for (std::size_t v : s.vertices) {
    std::size_t in_edge = (v + len - 1) % len;
    if (full[in_edge]) continue;  // not the start of an arc
    SectionArc arc;
    arc.first_vertex = v;
    arc.incoming = r[in_edge];
    std::size_t cur = v;
    while (full[cur]) {
      arc.inner_edges.push_back(cur);
      arc.inner_letters.push_back(r[cur]);
      cur = (cur + 1) % len;
    }
    arc.last_vertex = cur;
    arc.outgoing = r[cur];
    arc.kind = arc.inner_edges.empty()       ? ArcKind::Vertex
               : arc.inner_edges.size() == 1 ? ArcKind::Edge
                                             : ArcKind::LongArc;
    s.arcs.push_back(std::move(arc));
  }
  s.components = s.arcs.size();
  return s;
}

SectionDescriptor upper_section(const CyclicWord& r, const Character& phi) { return lower_section(r, -phi); }

bool arc_matches(const SectionArc& arc, int g, int distinguished) {
  if (!arc.incoming || !arc.outgoing || g == distinguished) return false;
  const int in = arc.incoming->generator();
  const int out = arc.outgoing->generator();
  switch (arc.kind) {
    case ArcKind::Vertex:
      return (in == g && out == distinguished) || (in == distinguished && out == g);
    case ArcKind::Edge:
      return arc.inner_letters.front().generator() == g && in == distinguished && out == distinguished;
    default:
      return false;
  }
}

namespace {

// The only generator an arc can match: the non-distinguished label.
std::optional<int> arc_generator(const SectionArc& arc, int distinguished, int n) {
  std::optional<int> g;
  if (arc.kind == ArcKind::Vertex && arc.incoming && arc.outgoing) {
    g = arc.incoming->generator() == distinguished ? arc.outgoing->generator() : arc.incoming->generator();
  } else if (arc.kind == ArcKind::Edge) {
    g = arc.inner_letters.front().generator();
  }
  if (g && *g <= n && arc_matches(arc, *g, distinguished)) return g;
  return std::nullopt;
}

bool has_perfect_matching(const std::vector<std::vector<int>>& allowed, std::size_t from,
                          const std::vector<int>& taken) {
  // Kuhn's augmenting paths on rows [from, end), with `taken` columns removed.
  std::vector<int> cols;
  for (std::size_t i = from; i < allowed.size(); ++i)
    for (int c : allowed[i]) cols.push_back(c);
  std::sort(cols.begin(), cols.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  std::vector<long> owner(cols.size(), -1);
  auto col_index = [&](int c) {
    return static_cast<std::size_t>(std::lower_bound(cols.begin(), cols.end(), c) - cols.begin());
  };
  std::function<bool(std::size_t, std::vector<bool>&)> augment = [&](std::size_t row, std::vector<bool>& seen) {
    for (int c : allowed[row]) {
      if (std::find(taken.begin(), taken.end(), c) != taken.end()) continue;
      std::size_t k = col_index(c);
      if (seen[k]) continue;
      seen[k] = true;
      if (owner[k] < 0 || augment(static_cast<std::size_t>(owner[k]), seen)) {
        owner[k] = static_cast<long>(row);
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = from; i < allowed.size(); ++i) {
    std::vector<bool> seen(cols.size(), false);
    if (!augment(i, seen)) return false;
  }
  return true;
}

}  // namespace

std::vector<int> least_perfect_matching(const std::vector<std::vector<int>>& allowed) {
  std::vector<int> chosen;
  for (std::size_t i = 0; i < allowed.size(); ++i) {
    std::vector<int> options = allowed[i];
    std::sort(options.begin(), options.end());
    bool placed = false;
    for (int c : options) {
      if (std::find(chosen.begin(), chosen.end(), c) != chosen.end()) continue;
      chosen.push_back(c);
      if (has_perfect_matching(allowed, i + 1, chosen)) {
        placed = true;
        break;
      }
      chosen.pop_back();
    }
    if (!placed) return {};
  }
  return chosen;
}

ConditionReport classify(const Presentation& p, const Character& phi) {
  if (!is_normalized(p, phi)) {
    throw Error(ErrorKind::Precondition, "classify needs a normalized character: phi(x_i) >= 0 for i <= n, "
                                         "phi(x_{n+1}) < 0, m = n + 1; got " +
                                             phi.to_string());
  }
  const int n = static_cast<int>(p.relator_count());
  const int d = p.rank();

  ConditionReport report;
  std::vector<std::size_t> missing_single;
  for (std::size_t i = 0; i < p.relator_count(); ++i) {
    RelatorWitness w;
    w.section = lower_section(p.relator(i), phi);
    const auto& arcs = w.section.arcs;
    if (arcs.size() == 1) {
      w.single_generator = arc_generator(arcs[0], d, n);
    } else if (arcs.size() == 2 && arcs[0].kind == arcs[1].kind) {
      auto g0 = arc_generator(arcs[0], d, n);
      auto g1 = arc_generator(arcs[1], d, n);
      if (g0 && g1 && *g0 == *g1) w.doubled_generator = g0;
    }
    if (!w.single_generator) missing_single.push_back(i);
    report.witnesses.push_back(std::move(w));
  }

  std::vector<std::vector<int>> allowed;
  for (const auto& w : report.witnesses) {
    allowed.push_back(w.single_generator ? std::vector<int>{*w.single_generator} : std::vector<int>{});
  }
  if (missing_single.empty()) {
    report.matching = least_perfect_matching(allowed);
    if (!report.matching.empty()) {
      report.status = ConditionStatus::Unique;
      return report;
    }
  } else if (missing_single.size() == 1) {
    std::size_t j = missing_single.front();
    if (auto g = report.witnesses[j].doubled_generator) {
      allowed[j] = {*g};
      report.matching = least_perfect_matching(allowed);
      if (!report.matching.empty()) {
        report.status = ConditionStatus::Repeated;
        report.repeated_relator = j;
        return report;
      }
    }
  }
  report.matching.clear();
  report.status = ConditionStatus::Neither;
  return report;
}

NormalizedCondition classify_character(const Presentation& p, const Character& phi) {
  std::optional<NormalizedCondition> fallback;
  for (int d : distinguished_candidates(phi)) {
    Normalization n = normalize_with(p, phi, d);
    ConditionReport r = classify(n.transformed_presentation, n.transformed_character);
    if (r.status != ConditionStatus::Neither) return {std::move(n), std::move(r)};
    if (!fallback) fallback = NormalizedCondition{std::move(n), std::move(r)};
  }
  return std::move(*fallback);
}

}  // namespace bnsigma
