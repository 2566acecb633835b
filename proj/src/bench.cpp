#include "fg/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>

#include "fg/minimize.hpp"
#include "fg/orbit.hpp"
#include "fg/sample.hpp"

namespace fg {

const char* task_name(BenchTask task) {
  switch (task) {
    case BenchTask::Primitivity: return "primitivity";
    case BenchTask::Equivalence: return "equivalence";
    case BenchTask::Trim: return "trim";
    case BenchTask::SmFraction: return "sm-fraction";
    case BenchTask::OrbitCensus: return "orbit-census";
  }
  return "?";
}

namespace {

void validate(const BenchConfig& cfg) {
  if (cfg.samples < 1) throw std::invalid_argument("bench: samples must be >= 1");
  for (std::size_t i = 1; i < cfg.lengths.size(); ++i)
    if (cfg.lengths[i] <= cfg.lengths[i - 1])
      throw std::invalid_argument("bench: lengths must be ascending");
}

double percentile95(std::vector<std::uint64_t> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const std::size_t rank =
      static_cast<std::size_t>(std::ceil(0.95 * static_cast<double>(values.size())));
  return static_cast<double>(values[rank == 0 ? 0 : rank - 1]);
}

struct LoopResult {
  std::vector<std::uint64_t> works;
  std::size_t conclusive = 0;
  std::uint64_t mean_wall_ns = 0;
};

template <typename PerSample>
LoopResult run_samples(const BenchConfig& cfg, std::size_t record_index,
                       PerSample&& per_sample) {
  LoopResult res;
  res.works.reserve(cfg.samples);
  const auto t0 = std::chrono::steady_clock::now();
  for (std::size_t j = 0; j < cfg.samples; ++j) {
    Rng rng = Rng::stream(cfg.seed, record_index * cfg.samples + j);
    std::uint64_t work = 0;
    bool conclusive = false;
    per_sample(rng, &work, &conclusive);
    res.works.push_back(work);
    if (conclusive) ++res.conclusive;
  }
  if (cfg.measure_wall && cfg.samples > 0) {
    const auto t1 = std::chrono::steady_clock::now();
    res.mean_wall_ns = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count() /
        static_cast<long long>(cfg.samples));
  }
  return res;
}

BenchRecord make_record(const BenchConfig& cfg, std::size_t n, LoopResult res) {
  BenchRecord rec;
  rec.task = task_name(cfg.task);
  rec.r = cfg.rank;
  rec.n = n;
  rec.samples = cfg.samples;
  double sum = 0;
  for (auto w : res.works) sum += static_cast<double>(w);
  rec.mean_work = cfg.samples ? sum / static_cast<double>(cfg.samples) : 0.0;
  rec.p95_work = percentile95(res.works);
  rec.filter_conclusive_fraction =
      cfg.samples ? static_cast<double>(res.conclusive) /
                        static_cast<double>(cfg.samples)
                  : 0.0;
  rec.mean_wall_ns = res.mean_wall_ns;
  rec.seed = cfg.seed;
  return rec;
}

}  // namespace

std::vector<BenchRecord> bench_primitivity(const BenchConfig& cfg) {
  validate(cfg);
  const Rank rank(cfg.rank);
  std::vector<BenchRecord> out;
  for (std::size_t i = 0; i < cfg.lengths.size(); ++i) {
    const std::size_t n = cfg.lengths[i];
    auto res = run_samples(cfg, i, [&](Rng& rng, std::uint64_t* work, bool* conclusive) {
      const Word w = sample_cyclically_reduced(rank, n, rng);
      const PrimitivityVerdict v = is_primitive(w);
      *work = v.stats.letters_examined;
      *conclusive = v.stats.filter_conclusive;
    });
    out.push_back(make_record(cfg, n, std::move(res)));
  }
  return out;
}

std::vector<BenchRecord> bench_equivalence(const BenchConfig& cfg) {
  validate(cfg);
  const Rank rank(cfg.rank);
  std::vector<BenchRecord> out;
  for (std::size_t i = 0; i < cfg.lengths.size(); ++i) {
    const std::size_t n = cfg.lengths[i];
    const BoundedLengthSampler ball(rank, n);
    auto res = run_samples(cfg, i, [&](Rng& rng, std::uint64_t* work, bool* conclusive) {
      const Word u = sample_freely_reduced(rank, n, rng);
      const Word v = ball.sample(rng);
      const EquivVerdict verdict = same_orbit(u, v, cfg.budget);
      *work = verdict.stats.letters_examined;
      *conclusive = verdict.path == EquivPath::FastSM;
    });
    out.push_back(make_record(cfg, n, std::move(res)));
  }
  return out;
}

std::vector<BenchRecord> bench_trim(const BenchConfig& cfg) {
  validate(cfg);
  const Rank rank(cfg.rank);
  std::vector<BenchRecord> out;
  for (std::size_t i = 0; i < cfg.lengths.size(); ++i) {
    const std::size_t n = cfg.lengths[i];
    auto res = run_samples(cfg, i, [&](Rng& rng, std::uint64_t* work, bool* conclusive) {
      const Word w = sample_freely_reduced(rank, n, rng);
      const TrimReport rep = cyclic_trim(w);
      *work = rep.steps;
      *conclusive = rep.steps == 0;  // already cyclically reduced
    });
    out.push_back(make_record(cfg, n, std::move(res)));
  }
  return out;
}

std::vector<BenchRecord> bench_sm_fraction(const BenchConfig& cfg) {
  validate(cfg);
  const Rank rank(cfg.rank);
  std::vector<BenchRecord> out;
  for (std::size_t i = 0; i < cfg.lengths.size(); ++i) {
    const std::size_t n = cfg.lengths[i];
    auto res = run_samples(cfg, i, [&](Rng& rng, std::uint64_t* work, bool* conclusive) {
      const Word w = sample_cyclically_reduced(rank, n, rng);
      *conclusive = is_strictly_minimal(canonical_cyclic(w), work);
    });
    out.push_back(make_record(cfg, n, std::move(res)));
  }
  return out;
}

std::string to_csv(const std::vector<BenchRecord>& records) {
  std::string out = kBenchCsvHeader;
  out += '\n';
  char line[256];
  for (const auto& r : records) {
    std::snprintf(line, sizeof line, "%s,%d,%zu,%zu,%.4f,%.1f,%.6f,%llu,%llu\n",
                  r.task.c_str(), r.r, r.n, r.samples, r.mean_work, r.p95_work,
                  r.filter_conclusive_fraction,
                  static_cast<unsigned long long>(r.mean_wall_ns),
                  static_cast<unsigned long long>(r.seed));
    out += line;
  }
  return out;
}

std::vector<CensusRow> orbit_census(const BenchConfig& cfg) {
  const Rank rank(cfg.rank);
  std::vector<CensusRow> out;
  for (const auto& text : cfg.words) {
    const Word w = parse_word(text, rank);
    const OrbitEnumeration orbit = bounded_orbit_enumerate(w, cfg.max_len, cfg.budget);
    std::size_t min_len = cfg.max_len + 1;
    for (const auto& e : orbit.elements) min_len = std::min(min_len, e.size());
    std::uint64_t level_size = 0;
    for (const auto& e : orbit.elements)
      if (e.size() == min_len) ++level_size;
    for (std::size_t l = std::min(min_len, cfg.max_len); l <= cfg.max_len; ++l) {
      CensusRow row;
      row.word = text;
      row.r = cfg.rank;
      row.len = l;
      for (const auto& e : orbit.elements)
        if (e.size() <= l) ++row.cum_count;
      row.level_size = level_size;
      row.complete = orbit.complete;
      row.seed = cfg.seed;
      out.push_back(std::move(row));
    }
  }
  return out;
}

std::string to_csv(const std::vector<CensusRow>& rows) {
  std::string out = kCensusCsvHeader;
  out += '\n';
  char line[256];
  for (const auto& r : rows) {
    std::snprintf(line, sizeof line, "orbit-census,%d,%s,%zu,%llu,%llu,%d,%llu\n",
                  r.r, r.word.c_str(), r.len,
                  static_cast<unsigned long long>(r.cum_count),
                  static_cast<unsigned long long>(r.level_size),
                  r.complete ? 1 : 0, static_cast<unsigned long long>(r.seed));
    out += line;
  }
  return out;
}

namespace {

bool frequencies_ok(const std::map<std::string, std::uint64_t>& observed,
                    const std::map<std::string, double>& expected,
                    double draws, std::string* message) {
  for (const auto& [key, p] : expected) {
    const double exp_count = draws * p;
    const double sigma = std::sqrt(draws * p * (1.0 - p));
    const auto it = observed.find(key);
    const double obs = it == observed.end() ? 0.0 : static_cast<double>(it->second);
    if (std::abs(obs - exp_count) > 5.0 * sigma + 1e-9) {
      if (message)
        *message = "frequency of '" + key + "' off: observed " +
                   std::to_string(obs) + ", expected " + std::to_string(exp_count);
      return false;
    }
  }
  for (const auto& [key, count] : observed) {
    if (!expected.contains(key)) {
      if (message) *message = "sampler produced unexpected word '" + key + "'";
      return false;
    }
    (void)count;
  }
  return true;
}

void enumerate_freely_reduced(Rank rank, std::size_t n, std::vector<Letter>& prefix,
                              std::vector<std::string>& out) {
  if (prefix.size() == n) {
    out.push_back(Word::from_reduced(prefix, rank).str());
    return;
  }
  for (int v = 0; v < rank.alphabet_size(); ++v) {
    const Letter l = Letter::from_vertex(v);
    if (!prefix.empty() && l == prefix.back().inverse()) continue;
    prefix.push_back(l);
    enumerate_freely_reduced(rank, n, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

bool sampler_self_test(Rank rank, std::uint64_t seed, std::string* message) {
  constexpr std::size_t kLen = 3;
  std::vector<std::string> all;
  {
    std::vector<Letter> prefix;
    enumerate_freely_reduced(rank, kLen, prefix, all);
  }
  // Exhaustive checks only while the word list stays small.
  if (all.size() <= 200) {
    const std::size_t draws = 500 * all.size();
    Rng rng = Rng::stream(seed, 0xF5EE);
    std::map<std::string, std::uint64_t> obs_free;
    for (std::size_t i = 0; i < draws; ++i)
      ++obs_free[sample_freely_reduced(rank, kLen, rng).str()];
    std::map<std::string, double> exp_free;
    for (const auto& w : all) exp_free[w] = 1.0 / static_cast<double>(all.size());
    if (!frequencies_ok(obs_free, exp_free, static_cast<double>(draws), message))
      return false;

    std::vector<std::string> cyc;
    for (const auto& w : all)
      if (parse_word(w, rank).cyclically_reduced()) cyc.push_back(w);
    std::map<std::string, std::uint64_t> obs_cyc;
    Rng rng2 = Rng::stream(seed, 0xF5EF);
    for (std::size_t i = 0; i < draws; ++i)
      ++obs_cyc[sample_cyclically_reduced(rank, kLen, rng2).str()];
    std::map<std::string, double> exp_cyc;
    for (const auto& w : cyc) exp_cyc[w] = 1.0 / static_cast<double>(cyc.size());
    if (!frequencies_ok(obs_cyc, exp_cyc, static_cast<double>(draws), message))
      return false;
  }

  // Ball sampler: length frequencies must follow the exact counts.
  {
    const BoundedLengthSampler ball(rank, kLen);
    const std::size_t draws = 40000;
    Rng rng = Rng::stream(seed, 0xF5F0);
    std::map<std::string, std::uint64_t> obs;
    for (std::size_t i = 0; i < draws; ++i)
      ++obs[std::to_string(ball.sample_length(rng))];
    std::map<std::string, double> expected;
    const double total = ball.total().convert_to<double>();
    for (std::size_t m = 0; m <= kLen; ++m)
      expected[std::to_string(m)] =
          count_freely_reduced(rank, m).convert_to<double>() / total;
    if (!frequencies_ok(obs, expected, static_cast<double>(draws), message))
      return false;
  }
  return true;
}

}  // namespace fg
