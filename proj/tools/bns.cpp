// bns: command-line driver for the bnsigma library.
//
// Exit codes: 0 decided / success, 1 usage or input error, 2 some verdict
// came back UNKNOWN.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "bnsigma/error.hpp"
#include "bnsigma/growth.hpp"
#include "bnsigma/json_io.hpp"
#include "bnsigma/random_model.hpp"
#include "bnsigma/sigma.hpp"
#include "bnsigma/transform.hpp"

using namespace bnsigma;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitUnknown = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Validation, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool looks_like_json(const std::string& text) {
  auto pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string::npos && text[pos] == '{';
}

// Accepts the text format, a Presentation JSON object, or a TransformRecord
// JSON object (its "output" field).
Presentation load_presentation(const std::string& path) {
  std::string text = read_file(path);
  if (!looks_like_json(text)) return parse_presentation(text);
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::Syntax, path + ": " + e.what());
  }
  if (j.contains("output")) return presentation_from_json(j.at("output"));
  return presentation_from_json(j);
}

std::optional<Character> char_option(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return parse_character(text);
}

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

bool unknown(Membership m) { return m == Membership::Unknown; }

struct Options {
  std::string format = "auto";
  int verbosity = 0;

  std::string pres;
  std::string character;
  bool no_zero_divisors = false;

  int gens = 2;
  int rels = 1;
  int len = 10;
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  std::string log;
  unsigned threads = 0;
  bool skip_classification = false;
  bool skip_transform = false;

  std::string in;
  bool remove = false;

  std::string automorphism;
  std::string word;
  std::size_t iters = 64;
  std::size_t cap = kDefaultLengthCap;
};

std::string format_for(const Options& o, const char* fallback) { return o.format == "auto" ? fallback : o.format; }

void require_format(const std::string& fmt, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (fmt == a) return;
  throw Error(ErrorKind::Validation, "--format " + fmt + " is not available for this subcommand");
}

int run_analyze(const Options& o) {
  const std::string fmt = format_for(o, "json");
  require_format(fmt, {"json", "text"});
  Presentation p = load_presentation(o.pres);
  if (auto phi = char_option(o.character)) {
    SigmaVerdict v = decide(p, *phi, o.no_zero_divisors);
    if (fmt == "json") {
      print_json(to_json(v));
    } else {
      std::cout << to_string(v.membership) << '\n';
      for (const auto& line : v.justification) std::cout << "  " << line << '\n';
    }
    return unknown(v.membership) ? kExitUnknown : kExitOk;
  }
  SymmetryReport s = symmetry_report(p, o.no_zero_divisors);
  if (fmt == "json") {
    print_json(to_json(s));
  } else {
    std::cout << "character " << s.character.to_string() << '\n'
              << "+phi " << to_string(s.plus.membership) << '\n'
              << "-phi " << to_string(s.minus.membership) << '\n'
              << "nonsymmetric " << s.nonsymmetric << '\n'
              << "not_lerf " << s.not_lerf << '\n'
              << "not_fibering " << s.not_fibering << '\n';
  }
  return unknown(s.plus.membership) || unknown(s.minus.membership) ? kExitUnknown : kExitOk;
}

unsigned default_threads() {
  if (const char* env = std::getenv("BNS_THREADS")) {
    try {
      int v = std::stoi(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    throw Error(ErrorKind::Validation, std::string("BNS_THREADS must be a positive integer, got '") + env + "'");
  }
  return 1;
}

int run_sample(const Options& o) {
  const std::string fmt = format_for(o, "csv");
  require_format(fmt, {"csv", "json", "text"});
  SampleConfig c;
  c.generators = o.gens;
  c.relators = o.rels;
  c.max_length = o.len;
  c.trials = o.trials;
  c.seed = o.seed;
  c.threads = o.threads ? o.threads : default_threads();
  c.flags.classification = !o.skip_classification;
  c.flags.transform_image = !o.skip_transform && !o.skip_classification;
  validate(c);

  std::ofstream log;
  SampleLog sink;
  if (!o.log.empty()) {
    log.open(o.log, std::ios::binary);
    if (!log) throw Error(ErrorKind::Validation, "cannot write " + o.log);
    sink = [&log](const SampleRecord& r) { log << to_json(r).dump() << '\n'; };
  }
  EstimateReport report = run_experiment(c, sink);
  if (o.verbosity > 0) std::cerr << "runtime " << report.runtime_seconds << " s\n";

  if (fmt == "csv") {
    std::cout << report.to_csv();
  } else if (fmt == "json") {
    Json j = to_json(report);
    j.erase("runtime_seconds");  // keep stdout a function of the flags
    print_json(j);
  } else {
    for (const auto& p : report.properties) {
      std::cout << p.name << ": " << p.successes << "/" << p.trials << " = " << p.estimate << " [" << p.ci_low
                << ", " << p.ci_high << "]\n";
    }
  }
  return kExitOk;
}

int run_transform(const Options& o) {
  const std::string fmt = format_for(o, "json");
  require_format(fmt, {"json", "text"});
  Presentation p = load_presentation(o.in);
  Character phi = parse_character(o.character);
  if (o.remove) {
    Presentation x = remove_commutators(p, phi);
    if (fmt == "json") {
      print_json(to_json(x));
    } else {
      std::cout << x.to_string() << '\n';
    }
    return kExitOk;
  }
  TransformRecord rec = insert_commutators(p, phi);
  if (fmt == "json") {
    print_json(to_json(rec));
  } else {
    std::cout << rec.output.to_string() << '\n';
  }
  return kExitOk;
}

int run_fox(const Options& o) {
  const std::string fmt = format_for(o, "json");
  require_format(fmt, {"json"});
  Presentation p = load_presentation(o.pres);
  print_json(fox_json(p, char_option(o.character)));
  return kExitOk;
}

int run_growth(const Options& o) {
  const std::string fmt = format_for(o, "json");
  require_format(fmt, {"json", "csv", "text"});
  AutomorphismSpec phi = parse_automorphism(read_file(o.automorphism));
  Word g = parse_word(o.word, phi.names);
  GrowthSequence seq = growth_sequence(phi, g, o.iters, o.cap);
  GrowthEstimate est = estimate_degree(seq);
  std::optional<bool> levitt;
  if (est.kind == GrowthKind::Polynomial) levitt = check_levitt_bound(phi, est);
  if (fmt == "json") {
    print_json(to_json(seq, est, levitt));
  } else if (fmt == "csv") {
    std::cout << "n,length\n";
    for (std::size_t n = 0; n < seq.lengths.size(); ++n) std::cout << n << ',' << seq.lengths[n] << '\n';
  } else {
    std::cout << est.label() << '\n';
  }
  return est.kind == GrowthKind::Inconclusive ? kExitUnknown : kExitOk;
}

int run_count(const Options& o) {
  const std::string fmt = format_for(o, "text");
  require_format(fmt, {"text", "csv", "json"});
  if (o.gens < 1) throw Error(ErrorKind::Validation, "--gens must be at least 1");
  if (o.len < 1) throw Error(ErrorKind::Validation, "--len must be at least 1");
  std::vector<std::string> counts;
  for (int k = 1; k <= o.len; ++k) counts.push_back(count_cyclically_reduced(o.gens, k).str());
  if (fmt == "text") {
    for (std::size_t i = 0; i < counts.size(); ++i) std::cout << (i ? "," : "") << counts[i];
    std::cout << '\n';
  } else if (fmt == "csv") {
    std::cout << "length,count\n";
    for (std::size_t i = 0; i < counts.size(); ++i) std::cout << i + 1 << ',' << counts[i] << '\n';
  } else {
    print_json(Json{{"generators", o.gens}, {"counts", counts}});
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sigma invariants of deficiency one presentations"};
  app.require_subcommand(1);
  app.set_config("--config", "", "TOML file with option defaults");
  Options o;
  app.add_option("--format", o.format, "json, csv or text (default depends on subcommand)")
      ->check(CLI::IsMember({"auto", "json", "csv", "text"}));
  app.add_flag("-v,--verbose", o.verbosity, "diagnostics on stderr");

  auto* analyze = app.add_subcommand("analyze", "decide Sigma membership for a character");
  analyze->add_option("--pres", o.pres, "presentation file")->required();
  analyze->add_option("--char", o.character, "character values, comma separated");
  analyze->add_flag("--assume-no-zero-divisors", o.no_zero_divisors);

  auto* sample = app.add_subcommand("sample", "Monte Carlo estimates in the few-relator model");
  sample->add_option("--gens", o.gens, "generators m")->capture_default_str();
  sample->add_option("--rels", o.rels, "relators n")->capture_default_str();
  sample->add_option("--len", o.len, "maximum relator length l")->capture_default_str();
  sample->add_option("--trials", o.trials)->capture_default_str();
  sample->add_option("--seed", o.seed)->required();
  sample->add_option("--log", o.log, "per-sample JSONL log");
  sample->add_option("--threads", o.threads, "worker threads (default $BNS_THREADS or 1)");
  sample->add_flag("--no-classification", o.skip_classification, "only b1 and small cancellation");
  sample->add_flag("--no-transform", o.skip_transform, "skip transform image detection");

  auto* transform = app.add_subcommand("transform", "insert or remove the commutator pattern");
  transform->add_option("--in", o.in, "presentation file or JSON")->required();
  transform->add_option("--char", o.character)->required();
  transform->add_flag("--remove", o.remove, "invert the transform");

  auto* fox = app.add_subcommand("fox", "Fox matrix as JSON");
  fox->add_option("--pres", o.pres)->required();
  fox->add_option("--char", o.character, "annotate terms with degrees");

  auto* growth = app.add_subcommand("growth", "growth of a word under an automorphism");
  growth->add_option("--auto", o.automorphism, "automorphism file")->required();
  growth->add_option("--word", o.word)->required();
  growth->add_option("--iters", o.iters)->capture_default_str();
  growth->add_option("--cap", o.cap, "length cap")->capture_default_str();

  auto* count = app.add_subcommand("count", "cyclically reduced word counts for lengths 1..len");
  count->add_option("--gens", o.gens)->required();
  count->add_option("--len", o.len)->required();

  for (auto* sub : {analyze, sample, transform, fox, growth, count}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*analyze) return run_analyze(o);
    if (*sample) return run_sample(o);
    if (*transform) return run_transform(o);
    if (*fox) return run_fox(o);
    if (*growth) return run_growth(o);
    if (*count) return run_count(o);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
