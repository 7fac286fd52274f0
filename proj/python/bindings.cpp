#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "bnsigma/error.hpp"
#include "bnsigma/growth.hpp"
#include "bnsigma/json_io.hpp"
#include "bnsigma/random_model.hpp"
#include "bnsigma/sigma.hpp"
#include "bnsigma/transform.hpp"

namespace py = pybind11;
using namespace bnsigma;

namespace {

// Results cross the boundary as JSON text; the Python side decodes them.
std::string dump(const Json& j) { return j.dump(); }

Character to_character(const std::vector<std::int64_t>& values) { return Character(values); }

std::optional<Character> opt_character(const std::optional<std::vector<std::int64_t>>& v) {
  if (!v) return std::nullopt;
  return Character(*v);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Native core of the bnsigma package";

  static py::exception<Error> error(m, "Error", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, (std::string(to_string(e.kind())) + ": " + e.what()).c_str());
    }
  });

  m.def("parse_presentation", [](const std::string& text) { return dump(to_json(parse_presentation(text))); },
        py::arg("text"));
  m.def("first_betti", [](const std::string& text) { return first_betti(parse_presentation(text)); }, py::arg("text"));
  m.def(
      "character_lattice",
      [](const std::string& text) {
        std::vector<std::vector<std::int64_t>> out;
        for (const auto& c : character_lattice(parse_presentation(text))) out.push_back(c.values());
        return out;
      },
      py::arg("text"));
  m.def(
      "small_cancellation",
      [](const std::string& text) {
        auto r = small_cancellation_check(parse_presentation(text));
        return py::make_tuple(r.passes, r.max_piece_ratio.numerator(), r.max_piece_ratio.denominator());
      },
      py::arg("text"));
  m.def(
      "decide",
      [](const std::string& text, const std::vector<std::int64_t>& phi, bool nzd) {
        return dump(to_json(decide(parse_presentation(text), to_character(phi), nzd)));
      },
      py::arg("text"), py::arg("phi"), py::arg("no_zero_divisors") = false);
  m.def(
      "symmetry_report",
      [](const std::string& text, const std::optional<std::vector<std::int64_t>>& phi, bool nzd) {
        Presentation p = parse_presentation(text);
        if (phi) return dump(to_json(symmetry_report(p, to_character(*phi), nzd)));
        return dump(to_json(symmetry_report(p, nzd)));
      },
      py::arg("text"), py::arg("phi") = py::none(), py::arg("no_zero_divisors") = false);
  m.def(
      "insert_commutators",
      [](const std::string& text, const std::vector<std::int64_t>& phi) {
        return dump(to_json(insert_commutators(parse_presentation(text), to_character(phi))));
      },
      py::arg("text"), py::arg("phi"));
  m.def(
      "remove_commutators",
      [](const std::string& text, const std::vector<std::int64_t>& phi) {
        return dump(to_json(remove_commutators(parse_presentation(text), to_character(phi))));
      },
      py::arg("text"), py::arg("phi"));
  m.def(
      "fox_matrix",
      [](const std::string& text, const std::optional<std::vector<std::int64_t>>& phi) {
        return dump(fox_json(parse_presentation(text), opt_character(phi)));
      },
      py::arg("text"), py::arg("phi") = py::none());
  m.def(
      "count_cyclically_reduced", [](int gens, int length) { return count_cyclically_reduced(gens, length).str(); },
      py::arg("gens"), py::arg("length"));
  m.def(
      "run_experiment",
      [](int gens, int rels, int max_length, std::uint64_t trials, std::uint64_t seed, unsigned threads) {
        SampleConfig c;
        c.generators = gens;
        c.relators = rels;
        c.max_length = max_length;
        c.trials = trials;
        c.seed = seed;
        c.threads = threads;
        EstimateReport r;
        {
          py::gil_scoped_release release;
          r = run_experiment(c);
        }
        return py::make_tuple(dump(to_json(r)), r.to_csv());
      },
      py::arg("gens"), py::arg("rels"), py::arg("max_length"), py::arg("trials"), py::arg("seed"),
      py::arg("threads") = 1);
  m.def(
      "growth",
      [](const std::string& automorphism, const std::string& word, std::size_t iterations) {
        AutomorphismSpec phi = parse_automorphism(automorphism);
        GrowthSequence seq = growth_sequence(phi, parse_word(word, phi.names), iterations);
        GrowthEstimate est = estimate_degree(seq);
        std::optional<bool> levitt;
        if (est.kind == GrowthKind::Polynomial) levitt = check_levitt_bound(phi, est);
        return dump(to_json(seq, est, levitt));
      },
      py::arg("automorphism"), py::arg("word"), py::arg("iterations") = 64);
}
