#include "bnsigma/transform.hpp"

#include <algorithm>

#include "bnsigma/error.hpp"
#include "bnsigma/sections.hpp"

namespace bnsigma {

namespace {

struct Blocks {
  std::vector<Letter> at_min;  // [X, x^eps]
  std::vector<Letter> at_max;  // [X^-1, x^-eps], squared on the first relator
  std::size_t min_offset;      // first phi-minimal vertex inside at_min
  std::size_t max_offset;      // first phi-maximal vertex inside at_max
  int epsilon;
};

Blocks blocks_for(const Character& phi, std::size_t i, int rank) {
  const int g = static_cast<int>(i) + 1;
  const Letter x(g, +1);
  const Letter big_x(rank, +1);
  const bool positive = phi.on_generator(g) > 0;
  Blocks b;
  b.epsilon = positive ? -1 : 1;
  const Letter xe = b.epsilon > 0 ? x : x.inverse();
  b.at_min = {big_x, xe, big_x.inverse(), xe.inverse()};
  std::vector<Letter> up = {big_x.inverse(), xe.inverse(), big_x, xe};
  b.at_max = up;
  if (i == 0) b.at_max.insert(b.at_max.end(), up.begin(), up.end());
  // Heights along [X, x^eps]: P, P+c, P+c-|phi(x)|, ...; with phi(x) = 0 the
  // minimum is the edge x between offsets 1 and 2.
  b.min_offset = positive ? 2 : 1;
  b.max_offset = positive ? 2 : 1;
  return b;
}

std::size_t first_extremal_vertex(std::span<const Letter> r, const Character& phi, bool maximal) {
  std::int64_t h = 0;
  std::int64_t best = 0;
  std::size_t at = 0;
  for (std::size_t k = 0; k < r.size(); ++k) {
    if (k == 0 || (maximal ? h > best : h < best)) {
      best = h;
      at = k;
    }
    h += phi.on(r[k]);
  }
  return at;
}

std::vector<Letter> insert_at(std::span<const Letter> r, std::size_t vertex, std::span<const Letter> block) {
  std::vector<Letter> out(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(vertex));
  out.insert(out.end(), block.begin(), block.end());
  out.insert(out.end(), r.begin() + static_cast<std::ptrdiff_t>(vertex), r.end());
  return out;
}

void require_reduced(const std::vector<Letter>& w, std::size_t relator, const char* stage) {
  if (!is_cyclically_reduced(w)) {
    throw Error(ErrorKind::FreeCancellation, std::string("inserting the ") + stage + " commutator into relator " +
                                                 std::to_string(relator + 1) + " causes free cancellation: " +
                                                 format_letters(w));
  }
}

}  // namespace

TransformRecord insert_commutators(const Presentation& tuple, const Character& phi) {
  if (!is_normalized(tuple, phi)) {
    throw Error(ErrorKind::Precondition, "insert_commutators needs a normalized character, got " + phi.to_string());
  }
  if (!vanishes_on_relators(tuple, phi)) {
    throw Error(ErrorKind::Precondition, "character does not vanish on every relator");
  }
  TransformRecord rec{tuple, phi, {}, tuple};
  std::vector<CyclicWord> out;
  for (std::size_t i = 0; i < tuple.relator_count(); ++i) {
    const Blocks b = blocks_for(phi, i, tuple.rank());
    auto r = tuple.relator(i).letters();
    InsertionStep step;
    step.epsilon = b.epsilon;
    step.min_vertex = first_extremal_vertex(r, phi, false);
    std::vector<Letter> r1 = insert_at(r, step.min_vertex, b.at_min);
    require_reduced(r1, i, "minimum");
    step.max_vertex = first_extremal_vertex(r1, phi, true);
    std::vector<Letter> r2 = insert_at(r1, step.max_vertex, b.at_max);
    require_reduced(r2, i, "maximum");
    out.emplace_back(std::move(r2));
    rec.steps.push_back(step);
  }
  rec.output = Presentation(tuple.rank(), std::move(out), tuple.names());
  return rec;
}

Presentation remove_commutators(const Presentation& image, const Character& phi) {
  if (!is_normalized(image, phi) || !vanishes_on_relators(image, phi)) {
    throw Error(ErrorKind::NotAnImage, "character is not normalized for this presentation");
  }
  auto fail = [](std::size_t i, const std::string& why) -> Error {
    return Error(ErrorKind::NotAnImage, "relator " + std::to_string(i + 1) + ": " + why);
  };
  auto strip = [&](std::vector<Letter>& w, std::size_t vertex, std::size_t offset, const std::vector<Letter>& block,
                   std::size_t i) {
    if (vertex < offset || vertex - offset + block.size() > w.size()) throw fail(i, "inserted commutator not found");
    auto start = w.begin() + static_cast<std::ptrdiff_t>(vertex - offset);
    if (!std::equal(block.begin(), block.end(), start)) throw fail(i, "inserted commutator not found");
    w.erase(start, start + static_cast<std::ptrdiff_t>(block.size()));
  };

  std::vector<CyclicWord> rels;
  for (std::size_t i = 0; i < image.relator_count(); ++i) {
    const Blocks b = blocks_for(phi, i, image.rank());
    std::vector<Letter> w(image.relator(i).begin(), image.relator(i).end());
    strip(w, first_extremal_vertex(w, phi, true), b.max_offset, b.at_max, i);
    strip(w, first_extremal_vertex(w, phi, false), b.min_offset, b.at_min, i);
    if (w.empty() || !is_cyclically_reduced(w)) throw fail(i, "removal leaves an invalid relator");
    rels.emplace_back(std::move(w));
  }
  Presentation original(image.rank(), std::move(rels), image.names());
  try {
    if (insert_commutators(original, phi).output == image) return original;
  } catch (const Error&) {
  }
  throw Error(ErrorKind::NotAnImage, "presentation is not an image of the insertion map");
}

}  // namespace bnsigma
