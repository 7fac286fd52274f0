#include "bnsigma/json_io.hpp"

#include "bnsigma/error.hpp"

namespace bnsigma {

namespace {

Json letters_json(std::span<const Letter> w) { return to_signed(w); }

Json opt_letter(const std::optional<Letter>& l) { return l ? Json(l->signed_value()) : Json(nullptr); }

template <class T>
Json opt(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

std::string rational_string(const Rational& q) { return q.str(); }

Json arc_json(const SectionArc& a) {
  return Json{{"kind", to_string(a.kind)},
              {"first_vertex", a.first_vertex},
              {"last_vertex", a.last_vertex},
              {"inner_edges", a.inner_edges},
              {"inner_letters", letters_json(a.inner_letters)},
              {"incoming", opt_letter(a.incoming)},
              {"outgoing", opt_letter(a.outgoing)}};
}

Json section_json(const SectionDescriptor& s) {
  Json arcs = Json::array();
  for (const auto& a : s.arcs) arcs.push_back(arc_json(a));
  return Json{{"height", s.height},
              {"vertices", s.vertices},
              {"full_edges", s.full_edges},
              {"components", s.components},
              {"arcs", arcs}};
}

Json normalization_json(const Normalization& n) {
  return Json{{"order", n.order},
              {"inverted", n.inverted},
              {"presentation", to_json(n.transformed_presentation)},
              {"character", n.transformed_character.values()}};
}

Json unit_json(const UnitVerdict& u) {
  Json j{{"status", to_string(u.status)}};
  if (u.base) j["base"] = letters_json(u.base->letters());
  if (u.kernel_element) j["kernel_element"] = letters_json(u.kernel_element->letters());
  if (u.alpha) j["alpha"] = rational_string(*u.alpha);
  return j;
}

}  // namespace

Json to_json(const Presentation& p) {
  Json rels = Json::array();
  for (const auto& r : p.relators()) rels.push_back(letters_json(r.letters()));
  return Json{{"generators", p.names()}, {"relators", rels}, {"text", p.to_string()}};
}

Presentation presentation_from_json(const Json& j) {
  try {
    if (j.contains("text") && !j.contains("relators")) return parse_presentation(j.at("text").get<std::string>());
    std::vector<std::string> names = j.at("generators").get<std::vector<std::string>>();
    std::vector<CyclicWord> rels;
    for (const auto& r : j.at("relators")) {
      std::vector<Letter> letters;
      for (int v : r.get<std::vector<int>>()) {
        if (v == 0) throw Error(ErrorKind::Validation, "letter 0 is not a generator");
        letters.push_back(Letter::from_signed(v));
      }
      rels.emplace_back(std::move(letters));
    }
    const int rank = static_cast<int>(names.size());
    return Presentation(rank, std::move(rels), std::move(names));
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::Syntax, std::string("bad presentation JSON: ") + e.what());
  }
}

Json to_json(const GroupRingElement& e, const std::optional<Character>& phi) {
  Json terms = Json::array();
  for (const auto& [w, c] : e.terms()) {
    Json t{{"word", letters_json(w.letters())}, {"coefficient", rational_string(c)}};
    if (phi) t["degree"] = evaluate(*phi, w);
    terms.push_back(std::move(t));
  }
  return terms;
}

Json to_json(const ConditionReport& r, const Presentation& p, const Character& phi) {
  Json rels = Json::array();
  for (std::size_t i = 0; i < p.relator_count(); ++i) {
    CycleWalk walk = cycle_walk(p.relator(i), phi);
    Json j{{"heights", walk.heights}, {"min_height", walk.min_height}, {"max_height", walk.max_height}};
    if (i < r.witnesses.size()) {
      j["lower_section"] = section_json(r.witnesses[i].section);
      j["single_generator"] = opt(r.witnesses[i].single_generator);
      j["doubled_generator"] = opt(r.witnesses[i].doubled_generator);
    }
    rels.push_back(std::move(j));
  }
  return Json{{"status", to_string(r.status)},
              {"matching", r.matching},
              {"repeated_relator", opt(r.repeated_relator)},
              {"relators", rels}};
}

Json to_json(const StructureReport& s) {
  Json diag = Json::array();
  for (const auto& d : s.diag_leading) {
    diag.push_back(Json{{"shape", to_string(d.shape)}, {"degree", d.degree}, {"piece", to_json(d.piece)}});
  }
  Json mins = Json::array();
  for (const auto& row : s.entry_min_degree) {
    Json jr = Json::array();
    for (const auto& v : row) jr.push_back(opt(v));
    mins.push_back(std::move(jr));
  }
  Json j{{"slot_relators", s.slot_relators},
         {"slot_generators", s.slot_generators},
         {"minima", s.minima},
         {"offdiag_ok", s.offdiag_ok},
         {"entry_min_degree", mins},
         {"diagonal_leading", diag}};
  if (s.nonunit_certificate) {
    const auto& c = *s.nonunit_certificate;
    j["nonunit_certificate"] = Json{{"slot", c.slot},
                                    {"base", letters_json(c.base.letters())},
                                    {"kernel_element", letters_json(c.kernel_element.letters())},
                                    {"alpha", rational_string(c.alpha)},
                                    {"piece", to_json(c.piece)}};
  }
  return j;
}

Json to_json(const SigmaVerdict& v) {
  Json j{{"membership", to_string(v.membership)},
         {"character", v.character.values()},
         {"no_zero_divisors", v.no_zero_divisors},
         {"justification", v.justification}};
  if (v.normalization) {
    j["normalization"] = normalization_json(*v.normalization);
    if (v.condition) {
      j["condition"] = to_json(*v.condition, v.normalization->transformed_presentation,
                               v.normalization->transformed_character);
    }
  }
  if (v.structure) j["structure"] = to_json(*v.structure);
  if (v.leading_unit) j["leading_unit"] = unit_json(*v.leading_unit);
  return j;
}

Json to_json(const SymmetryReport& r) {
  return Json{{"b1", r.b1},
              {"character", r.character.values()},
              {"nonsymmetric", r.nonsymmetric},
              {"not_lerf", r.not_lerf},
              {"not_fibering", r.not_fibering},
              {"plus", to_json(r.plus)},
              {"minus", to_json(r.minus)}};
}

Json fox_json(const Presentation& p, const std::optional<Character>& phi) {
  auto m = fox_matrix(p);
  Json rows = Json::array();
  for (const auto& row : m) {
    Json jr = Json::array();
    for (const auto& e : row) {
      Json cell{{"terms", to_json(e, phi)}};
      if (phi) cell["min_degree"] = opt(grade(e, *phi).min_degree);
      jr.push_back(std::move(cell));
    }
    rows.push_back(std::move(jr));
  }
  Json j{{"presentation", to_json(p)}, {"matrix", rows}};
  if (phi) j["character"] = phi->values();
  return j;
}

Json to_json(const TransformRecord& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps) {
    steps.push_back(Json{{"min_vertex", s.min_vertex}, {"epsilon", s.epsilon}, {"max_vertex", s.max_vertex}});
  }
  return Json{{"input", to_json(t.input)},
              {"character", t.phi.values()},
              {"steps", steps},
              {"output", to_json(t.output)}};
}

Json to_json(const SampleRecord& r) {
  Json j{{"trial", r.trial}, {"presentation", r.presentation}};
  j["b1"] = opt(r.b1);
  j["small_cancellation"] = opt(r.small_cancellation);
  j["plus"] = opt(r.plus);
  j["minus"] = opt(r.minus);
  j["nonsymmetric"] = r.nonsymmetric;
  j["not_lerf"] = r.not_lerf;
  j["not_fibering"] = r.not_fibering;
  j["unknown_both"] = r.unknown_both;
  j["transform_image"] = r.transform_image;
  j["transform_abort"] = r.transform_abort;
  j["error"] = opt(r.error);
  return j;
}

Json to_json(const EstimateReport& r) {
  Json props = Json::array();
  for (const auto& p : r.properties) {
    props.push_back(Json{{"name", p.name},
                         {"successes", p.successes},
                         {"trials", p.trials},
                         {"estimate", p.estimate},
                         {"ci_low", p.ci_low},
                         {"ci_high", p.ci_high}});
  }
  const auto& c = r.config;
  return Json{{"config",
               {{"relators", c.relators},
                {"generators", c.generators},
                {"max_length", c.max_length},
                {"trials", c.trials},
                {"seed", c.seed}}},
              {"properties", props},
              {"runtime_seconds", r.runtime_seconds}};
}

Json to_json(const GrowthSequence& seq, const GrowthEstimate& est, std::optional<bool> levitt) {
  return Json{{"classification", est.label()},
              {"degree", est.kind == GrowthKind::Polynomial ? Json(est.degree) : Json(nullptr)},
              {"lengths", seq.lengths},
              {"iterations", seq.requested},
              {"truncated", seq.truncated},
              {"tail_ratio_geomean", est.tail_ratio_geomean},
              {"doubling_exponents", est.doubling_exponents},
              {"levitt_bound", opt(levitt)}};
}

}  // namespace bnsigma
