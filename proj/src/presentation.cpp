#include "bnsigma/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "bnsigma/error.hpp"

namespace bnsigma {

namespace {

std::vector<std::string> default_names(int rank) {
  std::vector<std::string> names;
  for (int i = 1; i <= rank; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

// Splits on commas that are not nested inside brackets or parentheses.
std::vector<std::string> split_top_level(std::string_view s) {
  std::vector<std::string> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '[' || c == '(') ++depth;
    if (c == ']' || c == ')') --depth;
    if (depth < 0) throw Error(ErrorKind::Syntax, "unbalanced brackets in relator list");
    if (c == ',' && depth == 0) {
      parts.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (depth != 0) throw Error(ErrorKind::Syntax, "unbalanced brackets in relator list");
  parts.push_back(trim(s.substr(start)));
  return parts;
}

}  // namespace

Presentation::Presentation(int rank, std::vector<CyclicWord> relators, std::vector<std::string> names)
    : rank_(rank), relators_(std::move(relators)), names_(std::move(names)) {
  if (rank_ < 1) throw Error(ErrorKind::Validation, "presentation needs at least one generator");
  if (relators_.empty()) throw Error(ErrorKind::Validation, "presentation needs at least one relator");
  if (names_.empty()) names_ = default_names(rank_);
  if (static_cast<int>(names_.size()) != rank_) {
    throw Error(ErrorKind::Validation, "generator name count does not match rank");
  }
  for (std::size_t i = 0; i < relators_.size(); ++i) {
    if (relators_[i].empty()) {
      throw Error(ErrorKind::Validation, "relator " + std::to_string(i + 1) + " is empty");
    }
    for (Letter l : relators_[i]) {
      if (l.generator() > rank_) {
        throw Error(ErrorKind::Validation, "relator " + std::to_string(i + 1) + " uses generator x" +
                                               std::to_string(l.generator()) + " beyond rank " +
                                               std::to_string(rank_));
      }
    }
  }
}

std::size_t Presentation::total_length() const {
  std::size_t t = 0;
  for (const auto& r : relators_) t += r.size();
  return t;
}

std::size_t Presentation::max_relator_length() const {
  std::size_t t = 0;
  for (const auto& r : relators_) t = std::max(t, r.size());
  return t;
}

std::string Presentation::to_string() const {
  std::ostringstream out;
  out << '<';
  for (std::size_t i = 0; i < names_.size(); ++i) out << (i ? "," : "") << names_[i];
  out << " | ";
  for (std::size_t i = 0; i < relators_.size(); ++i) {
    out << (i ? ", " : "") << format_letters(relators_[i].letters(), names_);
  }
  out << '>';
  return out.str();
}

Presentation parse_presentation(std::string_view text) {
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
  std::string s = trim(body);
  if (s.size() < 2 || s.front() != '<' || s.back() != '>') {
    throw Error(ErrorKind::Syntax, "presentation must have the form <generators | relators>");
  }
  std::string_view inner = std::string_view(s).substr(1, s.size() - 2);
  auto bar = inner.find('|');
  if (bar == std::string_view::npos) throw Error(ErrorKind::Syntax, "missing '|' in presentation");

  std::vector<std::string> names;
  std::set<std::string> seen;
  for (const auto& part : split_top_level(inner.substr(0, bar))) {
    if (!is_identifier(part)) throw Error(ErrorKind::Syntax, "bad generator name '" + part + "'");
    if (!seen.insert(part).second) throw Error(ErrorKind::Syntax, "duplicate generator '" + part + "'");
    names.push_back(part);
  }

  std::vector<CyclicWord> relators;
  std::string_view rel_text = inner.substr(bar + 1);
  if (trim(rel_text).empty()) throw Error(ErrorKind::Validation, "presentation needs at least one relator");
  auto parts = split_top_level(rel_text);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    auto letters = parse_letters(parts[i], names);
    if (letters.empty()) {
      throw Error(ErrorKind::Validation, "relator " + std::to_string(i + 1) + " is empty");
    }
    if (!is_cyclically_reduced(letters)) {
      throw Error(ErrorKind::Validation, "relator " + std::to_string(i + 1) + " (" + parts[i] +
                                             ") is not cyclically reduced");
    }
    relators.emplace_back(std::move(letters));
  }
  const int rank = static_cast<int>(names.size());
  return Presentation(rank, std::move(relators), std::move(names));
}

void require_deficiency_one(const Presentation& p) {
  if (p.deficiency() != 1) {
    throw Error(ErrorKind::Precondition,
                "expected a deficiency-1 presentation (m = n + 1), got m = " + std::to_string(p.rank()) +
                    ", n = " + std::to_string(p.relator_count()));
  }
}

IntMatrix abelianization_matrix(const Presentation& p) {
  IntMatrix a(p.relator_count(), static_cast<std::size_t>(p.rank()));
  for (std::size_t i = 0; i < p.relator_count(); ++i) {
    for (Letter l : p.relator(i)) a(i, static_cast<std::size_t>(l.generator() - 1)) += l.sign();
  }
  return a;
}

int first_betti(const Presentation& p) {
  return p.rank() - static_cast<int>(rational_rank(abelianization_matrix(p)));
}

SmallCancellationReport small_cancellation_check(const Presentation& p, Ratio lambda) {
  struct Entry {
    const CyclicWord* word;
    PieceLocation where;
  };
  std::vector<CyclicWord> inverses;
  inverses.reserve(p.relator_count());
  for (const auto& r : p.relators()) inverses.push_back(r.inverse());

  std::vector<Entry> entries;
  for (std::size_t i = 0; i < p.relator_count(); ++i) {
    for (int o = 0; o < 2; ++o) {
      const CyclicWord* w = o ? &inverses[i] : &p.relator(i);
      for (std::size_t k = 0; k < w->size(); ++k) entries.push_back({w, {i, o == 1, k}});
    }
  }

  SmallCancellationReport report;
  report.lambda = lambda;
  std::size_t best_len = 0;
  for (std::size_t a = 0; a < entries.size(); ++a) {
    const Entry& ea = entries[a];
    const std::size_t la = ea.word->size();
    for (std::size_t b = a + 1; b < entries.size(); ++b) {
      const Entry& eb = entries[b];
      const std::size_t lb = eb.word->size();
      const std::size_t cap = std::min(la, lb);
      std::size_t len = 0;
      while (len < cap && (*ea.word)[(ea.where.offset + len) % la] == (*eb.word)[(eb.where.offset + len) % lb]) {
        ++len;
      }
      if (len == 0) continue;
      Ratio ratio(static_cast<long>(len), static_cast<long>(cap));
      if (ratio > report.max_piece_ratio || (ratio == report.max_piece_ratio && len > best_len)) {
        report.max_piece_ratio = ratio;
        best_len = len;
        report.first = ea.where;
        report.second = eb.where;
        report.witness.clear();
        for (std::size_t t = 0; t < len; ++t) report.witness.push_back((*ea.word)[(ea.where.offset + t) % la]);
      }
    }
  }
  report.passes = report.max_piece_ratio < lambda;
  return report;
}

}  // namespace bnsigma
