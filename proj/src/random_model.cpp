#include "bnsigma/random_model.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <thread>

#include "bnsigma/character.hpp"
#include "bnsigma/error.hpp"
#include "bnsigma/sigma.hpp"
#include "bnsigma/transform.hpp"

namespace bnsigma {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
  x += kGolden;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : key_(splitmix64(seed ^ splitmix64(stream ^ 0x6a09e667f3bcc909ULL))) {}

CounterRng::result_type CounterRng::operator()() { return splitmix64(key_ + (++counter_) * kGolden); }

BigInt uniform_below(CounterRng& rng, const BigInt& bound) {
  if (bound <= 0) throw Error(ErrorKind::Precondition, "uniform_below needs a positive bound");
  const unsigned bits = boost::multiprecision::msb(bound) + 1;
  const unsigned words = (bits + 63) / 64;
  const unsigned top = bits - 64 * (words - 1);
  for (;;) {
    BigInt x = 0;
    for (unsigned w = 0; w < words; ++w) {
      std::uint64_t v = rng();
      if (w == 0 && top < 64) v &= (std::uint64_t{1} << top) - 1;
      x <<= 64;
      x += v;
    }
    if (x < bound) return x;
  }
}

BigInt count_cyclically_reduced(int m, int k) {
  if (m < 1 || k < 1) throw Error(ErrorKind::Precondition, "count_cyclically_reduced needs m >= 1 and k >= 1");
  const std::size_t s = static_cast<std::size_t>(2 * m);
  using Mat = std::vector<std::vector<BigInt>>;
  auto mul = [s](const Mat& a, const Mat& b) {
    Mat c(s, std::vector<BigInt>(s, 0));
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t l = 0; l < s; ++l) {
        if (a[i][l] == 0) continue;
        for (std::size_t j = 0; j < s; ++j) c[i][j] += a[i][l] * b[l][j];
      }
    return c;
  };
  Mat t(s, std::vector<BigInt>(s, 0));
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t b = 0; b < s; ++b) t[a][b] = (b == (a ^ 1)) ? 0 : 1;
  Mat acc(s, std::vector<BigInt>(s, 0));
  for (std::size_t i = 0; i < s; ++i) acc[i][i] = 1;
  for (int e = k; e > 0; e >>= 1) {
    if (e & 1) acc = mul(acc, t);
    if (e > 1) t = mul(t, t);
  }
  BigInt trace = 0;
  for (std::size_t i = 0; i < s; ++i) trace += acc[i][i];
  return trace;
}

CyclicWordSampler::CyclicWordSampler(int m, int l) : m_(m), l_(l) {
  if (m < 1 || l < 1) throw Error(ErrorKind::Precondition, "sampler needs m >= 1 and l >= 1");
  const std::size_t s = static_cast<std::size_t>(2 * m);
  const std::size_t len = static_cast<std::size_t>(l);
  tails_.assign(s, std::vector<std::vector<BigInt>>(len, std::vector<BigInt>(s, 0)));
  counts_.assign(len + 1, 0);
  for (std::size_t a = 0; a < s; ++a) {
    auto& d = tails_[a];
    for (std::size_t c = 0; c < s; ++c) d[0][c] = (c == (a ^ 1)) ? 0 : 1;
    for (std::size_t r = 1; r < len; ++r)
      for (std::size_t c = 0; c < s; ++c)
        for (std::size_t b = 0; b < s; ++b)
          if (b != (c ^ 1)) d[r][c] += d[r - 1][b];
    for (std::size_t k = 1; k <= len; ++k) counts_[k] += d[k - 1][a];
  }
  total_ = 0;
  for (std::size_t k = 1; k <= len; ++k) total_ += counts_[k];
}

CyclicWord CyclicWordSampler::sample(CounterRng& rng) const {
  const std::size_t s = static_cast<std::size_t>(2 * m_);
  BigInt x = uniform_below(rng, total_);
  std::size_t k = 1;
  while (x >= counts_[k]) {
    x -= counts_[k];
    ++k;
  }
  // x is now uniform in [0, count(k)); it selects the first letter, then the rest.
  std::size_t a = 0;
  while (x >= tails_[a][k - 1][a]) {
    x -= tails_[a][k - 1][a];
    ++a;
  }
  std::vector<Letter> out;
  out.reserve(k);
  out.push_back(letter_of(static_cast<int>(a)));
  std::size_t cur = a;
  const auto& d = tails_[a];
  for (std::size_t rem = k - 1; rem > 0; --rem) {
    BigInt y = uniform_below(rng, d[rem][cur]);
    std::size_t next = 0;
    for (std::size_t b = 0; b < s; ++b) {
      if (b == (cur ^ 1)) continue;
      if (y < d[rem - 1][b]) {
        next = b;
        break;
      }
      y -= d[rem - 1][b];
    }
    out.push_back(letter_of(static_cast<int>(next)));
    cur = next;
  }
  return CyclicWord(std::move(out));
}

void validate(const SampleConfig& c) {
  if (c.generators < 2) throw Error(ErrorKind::Validation, "need m >= 2 generators");
  if (c.relators < 1) throw Error(ErrorKind::Validation, "need n >= 1 relators");
  if (c.max_length < 1) throw Error(ErrorKind::Validation, "need l >= 1");
  if (c.trials < 1) throw Error(ErrorKind::Validation, "need trials >= 1");
}

Presentation sample_presentation(const SampleConfig& config, const CyclicWordSampler& sampler, CounterRng& rng) {
  std::vector<CyclicWord> rels;
  rels.reserve(static_cast<std::size_t>(config.relators));
  for (int i = 0; i < config.relators; ++i) rels.push_back(sampler.sample(rng));
  return Presentation(config.generators, std::move(rels));
}

namespace {

bool is_transform_image(const Presentation& p, const Character& phi) {
  for (int d : distinguished_candidates(phi)) {
    Normalization n = normalize_with(p, phi, d);
    try {
      remove_commutators(n.transformed_presentation, n.transformed_character);
      return true;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotAnImage) throw;
    }
  }
  return false;
}

}  // namespace

SampleRecord measure_presentation(const Presentation& p, const MeasureFlags& flags) {
  SampleRecord rec;
  rec.presentation = p.to_string();
  try {
    bool nzd = false;
    if (flags.small_cancellation || flags.classification || flags.transform_image) {
      rec.small_cancellation = small_cancellation_check(p).passes;
      nzd = *rec.small_cancellation;
    }
    rec.b1 = first_betti(p);
    const bool testable = *rec.b1 == 1 && p.deficiency() == 1;
    if (!testable) return rec;
    const Character phi = character_lattice(p).front();
    if (flags.classification) {
      SymmetryReport s = symmetry_report(p, nzd);
      rec.plus = std::string(to_string(s.plus.membership));
      rec.minus = std::string(to_string(s.minus.membership));
      rec.nonsymmetric = s.nonsymmetric;
      rec.not_lerf = s.not_lerf;
      rec.not_fibering = s.not_fibering;
      rec.unknown_both = s.plus.membership == Membership::Unknown && s.minus.membership == Membership::Unknown;
    }
    if (flags.transform_image) {
      // Images certify non-symmetry only under the no-zero-divisor hypothesis.
      rec.transform_image = nzd && (is_transform_image(p, phi) || is_transform_image(p, -phi));
      Normalization n = normalize(p, phi);
      try {
        insert_commutators(n.transformed_presentation, n.transformed_character);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::FreeCancellation) throw;
        rec.transform_abort = true;
      }
    }
  } catch (const Error& e) {
    rec.error = e.what();
  }
  if (!flags.b1) rec.b1.reset();
  if (!flags.small_cancellation) rec.small_cancellation.reset();
  return rec;
}

const PropertyEstimate* EstimateReport::find(const std::string& name) const {
  for (const auto& p : properties)
    if (p.name == name) return &p;
  return nullptr;
}

std::string EstimateReport::to_csv() const {
  std::string out = "name,successes,trials,estimate,ci_low,ci_high\n";
  char buf[256];
  for (const auto& p : properties) {
    std::snprintf(buf, sizeof buf, "%s,%llu,%llu,%.6f,%.6f,%.6f\n", p.name.c_str(),
                  static_cast<unsigned long long>(p.successes), static_cast<unsigned long long>(p.trials),
                  p.estimate, p.ci_low, p.ci_high);
    out += buf;
  }
  return out;
}

std::pair<double, double> wilson_interval(std::uint64_t successes, std::uint64_t trials) {
  if (trials == 0) return {0.0, 1.0};
  constexpr double z = 1.959963984540054;
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double denom = 1 + z * z / n;
  const double centre = (p + z * z / (2 * n)) / denom;
  const double half = z / denom * std::sqrt(p * (1 - p) / n + z * z / (4 * n * n));
  // Clamp so the interval always contains the estimate despite rounding.
  return {std::min(p, std::max(0.0, centre - half)), std::max(p, std::min(1.0, centre + half))};
}

namespace {

enum Tally : std::size_t {
  kB1,
  kSmallCancellation,
  kNonsymmetric,
  kNotLerf,
  kNotFibering,
  kUnknownBoth,
  kTransformImage,
  kTransformAbort,
  kError,
  kTallyCount
};

constexpr const char* kTallyNames[kTallyCount] = {
    "b1_eq_1",      "small_cancellation", "nonsymmetric",    "not_lerf", "not_fibering",
    "unknown_both", "transform_image",    "transform_abort", "error"};

using Counts = std::array<std::uint64_t, kTallyCount>;

void tally(const SampleRecord& r, Counts& c) {
  c[kB1] += r.b1 && *r.b1 == 1;
  c[kSmallCancellation] += r.small_cancellation && *r.small_cancellation;
  c[kNonsymmetric] += r.nonsymmetric;
  c[kNotLerf] += r.not_lerf;
  c[kNotFibering] += r.not_fibering;
  c[kUnknownBoth] += r.unknown_both;
  c[kTransformImage] += r.transform_image;
  c[kTransformAbort] += r.transform_abort;
  c[kError] += r.error.has_value();
}

bool reported(Tally t, const MeasureFlags& f) {
  switch (t) {
    case kB1: return f.b1;
    case kSmallCancellation: return f.small_cancellation;
    case kNonsymmetric:
    case kNotLerf:
    case kNotFibering:
    case kUnknownBoth: return f.classification;
    case kTransformImage:
    case kTransformAbort: return f.transform_image;
    default: return true;
  }
}

}  // namespace

EstimateReport run_experiment(const SampleConfig& config, const SampleLog& log) {
  validate(config);
  const auto start = std::chrono::steady_clock::now();
  const CyclicWordSampler sampler(config.generators, config.max_length);

  auto run_trial = [&](std::uint64_t t) {
    CounterRng rng(config.seed, t);
    SampleRecord r = measure_presentation(sample_presentation(config, sampler, rng), config.flags);
    r.trial = t;
    return r;
  };

  const unsigned workers =
      static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(config.threads, config.trials)));
  Counts total{};
  if (workers == 1) {
    for (std::uint64_t t = 0; t < config.trials; ++t) {
      SampleRecord r = run_trial(t);
      tally(r, total);
      if (log) log(r);
    }
  } else {
    std::vector<Counts> partial(workers, Counts{});
    std::vector<SampleRecord> records(log ? config.trials : 0);
    std::vector<std::exception_ptr> failures(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::uint64_t t = w; t < config.trials; t += workers) {
            SampleRecord r = run_trial(t);
            tally(r, partial[w]);
            if (log) records[t] = std::move(r);
          }
        } catch (...) {
          failures[w] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& f : failures)
      if (f) std::rethrow_exception(f);
    for (const auto& c : partial)
      for (std::size_t i = 0; i < kTallyCount; ++i) total[i] += c[i];
    if (log)
      for (const auto& r : records) log(r);
  }

  EstimateReport report;
  report.config = config;
  for (std::size_t i = 0; i < kTallyCount; ++i) {
    if (!reported(static_cast<Tally>(i), config.flags)) continue;
    PropertyEstimate p;
    p.name = kTallyNames[i];
    p.successes = total[i];
    p.trials = config.trials;
    p.estimate = static_cast<double>(p.successes) / static_cast<double>(p.trials);
    std::tie(p.ci_low, p.ci_high) = wilson_interval(p.successes, p.trials);
    report.properties.push_back(std::move(p));
  }
  report.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace bnsigma
