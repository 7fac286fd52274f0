#include "bnsigma/growth.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

#include "bnsigma/error.hpp"

namespace bnsigma {

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::vector<Letter> substitute(const std::vector<Word>& images, std::span<const Letter> w) {
  std::vector<Letter> out;
  for (Letter l : w) {
    if (l.generator() > static_cast<int>(images.size())) {
      throw Error(ErrorKind::Validation, "letter x" + std::to_string(l.generator()) + " exceeds rank " +
                                             std::to_string(images.size()));
    }
    const Word& img = images[static_cast<std::size_t>(l.generator() - 1)];
    if (l.sign() > 0) {
      out.insert(out.end(), img.begin(), img.end());
    } else {
      for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it) out.push_back(it->inverse());
    }
  }
  return out;
}

bool composes_to_identity(const std::vector<Word>& outer, const std::vector<Word>& inner) {
  for (std::size_t g = 0; g < inner.size(); ++g) {
    Word w = free_reduce(substitute(outer, inner[g].letters()));
    if (w != Word::of({static_cast<int>(g) + 1})) return false;
  }
  return true;
}

using Mapping = std::vector<std::pair<std::string, std::string>>;

Mapping parse_block(std::string_view block) {
  Mapping out;
  std::string stmt;
  auto flush = [&] {
    std::string s = trim(stmt);
    stmt.clear();
    if (s.empty()) return;
    auto arrow = s.find("->");
    if (arrow == std::string::npos) throw Error(ErrorKind::Syntax, "expected 'name -> word', got '" + s + "'");
    std::string lhs = trim(std::string_view(s).substr(0, arrow));
    if (lhs.empty()) throw Error(ErrorKind::Syntax, "missing generator name in '" + s + "'");
    out.emplace_back(lhs, trim(std::string_view(s).substr(arrow + 2)));
  };
  for (char c : block) {
    if (c == ';' || c == '\n') {
      flush();
    } else {
      stmt += c;
    }
  }
  flush();
  return out;
}

std::vector<Word> resolve(const Mapping& m, const std::vector<std::string>& names) {
  std::vector<Word> images(names.size());
  std::vector<bool> seen(names.size(), false);
  for (const auto& [lhs, rhs] : m) {
    auto it = std::find(names.begin(), names.end(), lhs);
    if (it == names.end()) throw Error(ErrorKind::Validation, "unknown generator '" + lhs + "'");
    auto k = static_cast<std::size_t>(it - names.begin());
    if (seen[k]) throw Error(ErrorKind::Validation, "generator '" + lhs + "' mapped twice");
    seen[k] = true;
    images[k] = parse_word(rhs, names);
  }
  for (std::size_t k = 0; k < names.size(); ++k)
    if (!seen[k]) throw Error(ErrorKind::Validation, "no image for generator '" + names[k] + "'");
  return images;
}

}  // namespace

AutomorphismSpec make_automorphism(std::vector<std::string> names, std::vector<Word> images,
                                   std::optional<std::vector<Word>> inverse_images) {
  AutomorphismSpec spec;
  spec.rank = static_cast<int>(images.size());
  if (spec.rank < 1) throw Error(ErrorKind::Validation, "automorphism needs at least one generator");
  if (names.empty())
    for (int i = 1; i <= spec.rank; ++i) names.push_back("x" + std::to_string(i));
  if (static_cast<int>(names.size()) != spec.rank) throw Error(ErrorKind::Validation, "names do not match rank");
  spec.names = std::move(names);
  for (const auto& w : images)
    for (Letter l : w)
      if (l.generator() > spec.rank) throw Error(ErrorKind::Validation, "image uses a generator beyond the rank");
  spec.images = std::move(images);
  if (inverse_images) {
    if (inverse_images->size() != spec.images.size()) {
      throw Error(ErrorKind::Validation, "inverse block has a different rank");
    }
    if (!composes_to_identity(spec.images, *inverse_images) || !composes_to_identity(*inverse_images, spec.images)) {
      throw Error(ErrorKind::Validation, "inverse images do not invert the map");
    }
    spec.inverse_images = std::move(inverse_images);
    spec.verified = true;
  }
  return spec;
}

AutomorphismSpec AutomorphismSpec::inverse() const {
  if (!inverse_images) throw Error(ErrorKind::Precondition, "no inverse images supplied");
  return make_automorphism(names, *inverse_images, images);
}

AutomorphismSpec parse_automorphism(std::string_view text) {
  std::string body;
  {
    std::istringstream lines{std::string(text)};
    std::string line;
    while (std::getline(lines, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      body += line;
      body += '\n';
    }
  }
  std::string_view forward = body;
  std::optional<std::string_view> backward;
  if (auto pos = body.find("inverse:"); pos != std::string::npos) {
    forward = std::string_view(body).substr(0, pos);
    backward = std::string_view(body).substr(pos + 8);
  }
  Mapping fwd = parse_block(forward);
  if (fwd.empty()) throw Error(ErrorKind::Syntax, "automorphism file has no mappings");
  std::vector<std::string> names;
  std::set<std::string> seen;
  for (const auto& [lhs, rhs] : fwd) {
    if (seen.insert(lhs).second) names.push_back(lhs);
  }
  std::vector<Word> images = resolve(fwd, names);
  std::optional<std::vector<Word>> inv;
  if (backward) inv = resolve(parse_block(*backward), names);
  return make_automorphism(std::move(names), std::move(images), std::move(inv));
}

std::string to_string(const AutomorphismSpec& phi) {
  std::ostringstream out;
  for (std::size_t g = 0; g < phi.images.size(); ++g) {
    out << (g ? "; " : "") << phi.names[g] << " -> " << format_word(phi.images[g], phi.names);
  }
  if (phi.inverse_images) {
    out << "\ninverse:\n";
    for (std::size_t g = 0; g < phi.inverse_images->size(); ++g) {
      out << (g ? "; " : "") << phi.names[g] << " -> " << format_word((*phi.inverse_images)[g], phi.names);
    }
  }
  return out.str();
}

Word apply(const AutomorphismSpec& phi, const Word& w) { return free_reduce(substitute(phi.images, w.letters())); }

GrowthSequence growth_sequence(const AutomorphismSpec& phi, const Word& g, std::size_t iterations,
                               std::size_t length_cap) {
  if (iterations < 1) throw Error(ErrorKind::Precondition, "growth_sequence needs N >= 1");
  GrowthSequence seq;
  seq.requested = iterations;
  std::vector<std::size_t> image_len;
  for (const auto& w : phi.images) image_len.push_back(w.size());

  // Conjugacy classes map to conjugacy classes, so iterate on the cyclic core.
  Word cur = cyclic_reduce(g).core.word();
  seq.lengths.push_back(cur.size());
  for (std::size_t n = 1; n <= iterations; ++n) {
    std::size_t bound = 0;
    for (Letter l : cur) {
      if (l.generator() > phi.rank) throw Error(ErrorKind::Validation, "word exceeds the automorphism rank");
      bound += image_len[static_cast<std::size_t>(l.generator() - 1)];
    }
    if (bound > length_cap) {
      seq.truncated = true;
      break;
    }
    cur = cyclic_reduce(apply(phi, cur)).core.word();
    seq.lengths.push_back(cur.size());
  }
  return seq;
}

std::string_view to_string(GrowthKind k) {
  switch (k) {
    case GrowthKind::Polynomial: return "POLYNOMIAL";
    case GrowthKind::Exponential: return "EXPONENTIAL";
    case GrowthKind::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

std::string GrowthEstimate::label() const {
  if (kind == GrowthKind::Polynomial) return "POLYNOMIAL(" + std::to_string(degree) + ")";
  return std::string(to_string(kind));
}

GrowthEstimate estimate_degree(const GrowthSequence& seq) { return estimate_degree(seq.lengths); }

GrowthEstimate estimate_degree(const std::vector<std::size_t>& lengths) {
  if (lengths.size() < kMinGrowthSamples) {
    throw Error(ErrorKind::Precondition, "need at least " + std::to_string(kMinGrowthSamples) +
                                             " untruncated lengths, got " + std::to_string(lengths.size()));
  }
  GrowthEstimate est;
  est.lengths = lengths;
  const std::size_t last = lengths.size() - 1;

  if (std::all_of(lengths.begin(), lengths.end(), [](std::size_t v) { return v == 0; })) {
    est.kind = GrowthKind::Polynomial;
    est.degree = 0;
    return est;
  }
  if (std::find(lengths.begin() + static_cast<std::ptrdiff_t>(last / 4), lengths.end(), 0) != lengths.end()) {
    return est;  // a nontrivial class never becomes trivial; the data is not an orbit
  }

  // Ratio test on the last quarter.
  std::vector<double> ratios;
  for (std::size_t n = last - last / 4; n < last; ++n) {
    ratios.push_back(static_cast<double>(lengths[n + 1]) / static_cast<double>(lengths[n]));
  }
  double log_sum = 0;
  for (double r : ratios) log_sum += std::log(r);
  est.tail_ratio_geomean = std::exp(log_sum / static_cast<double>(ratios.size()));
  if (est.tail_ratio_geomean >= 1.05) {
    const std::size_t h = ratios.size() / 2;
    auto excess = [&](std::size_t a, std::size_t b) {
      double s = 0;
      for (std::size_t i = a; i < b; ++i) s += std::log(ratios[i]);
      return s / static_cast<double>(b - a);
    };
    const double early = excess(0, h), late = excess(h, ratios.size());
    // Polynomial ratios decay like d/n; exponential ones settle.
    if (late >= 0.9 * early) {
      est.kind = GrowthKind::Exponential;
      return est;
    }
  }

  // Doubling test: len(2n)/len(n) -> 2^d.
  for (std::size_t n = std::max<std::size_t>(1, last / 4); 2 * n <= last && n <= last / 2; ++n) {
    est.doubling_exponents.push_back(
        std::log2(static_cast<double>(lengths[2 * n]) / static_cast<double>(lengths[n])));
  }
  if (est.doubling_exponents.empty()) return est;
  auto [lo, hi] = std::minmax_element(est.doubling_exponents.begin(), est.doubling_exponents.end());
  const long d_lo = std::lround(*lo), d_hi = std::lround(*hi);
  if (*hi - *lo < 0.35 && d_lo == d_hi && d_lo >= 0) {
    est.kind = GrowthKind::Polynomial;
    est.degree = static_cast<int>(d_lo);
  }
  return est;
}

bool check_levitt_bound(const AutomorphismSpec& phi, const GrowthEstimate& estimate) {
  if (estimate.kind != GrowthKind::Polynomial) {
    throw Error(ErrorKind::Precondition, "Levitt bound applies to polynomial growth only, got " + estimate.label());
  }
  return estimate.degree <= phi.rank - 1;
}

}  // namespace bnsigma
