#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fg/word.hpp"

namespace fg {

enum class BenchTask { Primitivity, Equivalence, Trim, SmFraction, OrbitCensus };

const char* task_name(BenchTask task);

struct BenchConfig {
  int rank = 2;
  std::vector<std::size_t> lengths;  // ascending n values
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
  BenchTask task = BenchTask::Primitivity;
  // orbit-census inputs
  std::vector<std::string> words;
  std::size_t max_len = 0;
  std::size_t budget = 1'000'000;
  // Wall time is machine-dependent; it is reported only on request so that
  // default CSV output is byte-identical across runs.
  bool measure_wall = false;
};

// One row per length. Work counters are abstract units (letters examined),
// deterministic for a given seed; wall time is informational only.
struct BenchRecord {
  std::string task;
  int r = 2;
  std::size_t n = 0;
  std::size_t samples = 0;
  double mean_work = 0.0;
  double p95_work = 0.0;
  double filter_conclusive_fraction = 0.0;
  std::uint64_t mean_wall_ns = 0;
  std::uint64_t seed = 0;
};

inline constexpr const char* kBenchCsvHeader =
    "task,r,n,samples,mean_work,p95_work,filter_conclusive_fraction,"
    "mean_wall_ns,seed";

std::vector<BenchRecord> bench_primitivity(const BenchConfig& cfg);
std::vector<BenchRecord> bench_equivalence(const BenchConfig& cfg);
std::vector<BenchRecord> bench_trim(const BenchConfig& cfg);
std::vector<BenchRecord> bench_sm_fraction(const BenchConfig& cfg);

std::string to_csv(const std::vector<BenchRecord>& records);

// Orbit census: cumulative counts of cyclic orbit members per length
// bound, plus the level-set size at the minimum. Report only; the growth
// questions it probes are open.
struct CensusRow {
  std::string word;
  int r = 2;
  std::size_t len = 0;        // length bound l
  std::uint64_t cum_count = 0;  // |CA(w) with length <= l|
  std::uint64_t level_size = 0; // orbit members at the minimal length
  bool complete = true;
  std::uint64_t seed = 0;
};

inline constexpr const char* kCensusCsvHeader =
    "task,r,word,len,cum_count,level_size,complete,seed";

std::vector<CensusRow> orbit_census(const BenchConfig& cfg);
std::string to_csv(const std::vector<CensusRow>& rows);

// Exhaustive frequency check of the samplers on tiny words (n <= 3).
// Returns false and fills `message` when an empirical frequency falls
// outside five binomial sigmas of its exact expectation.
bool sampler_self_test(Rank rank, std::uint64_t seed, std::string* message);

}  // namespace fg
