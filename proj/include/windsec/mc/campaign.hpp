#pragma once

// Monte Carlo campaigns: for each m, many independent events of m closed
// walks, tallied and reduced to integer moment sums. Integer sums merge
// exactly in any order, so results do not depend on the worker count.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "windsec/mc/sector_tally.hpp"
#include "windsec/mc/walk.hpp"

namespace windsec::mc {

// How lattice steps convert to Brownian time. half_steps is brownian_time();
// steps (t = N) exists for the calibration self-test.
enum class TimeConvention { half_steps, steps };

double time_for(TimeConvention convention, long n_steps);
const char* to_string(TimeConvention convention);
TimeConvention time_convention_from_string(const std::string& name);

inline constexpr long kBlockEvents = 100;

struct CampaignConfig {
  std::vector<int> m_values;
  long n_steps = 100000;
  long n_events = 2000;
  std::uint64_t master_seed = 1;
  int workers = 0;  // 0: OpenMP default, 1: serial kernel
  std::filesystem::path checkpoint_dir;  // empty: no checkpoints
  TimeConvention time = TimeConvention::half_steps;
  int n_max = 8;
  // Per worker. Events whose m walks need more are tallied with walks
  // regenerated from their seeds instead of stored.
  std::size_t stored_walk_bytes = std::size_t{1} << 28;

  // Throws std::invalid_argument.
  void validate() const;
};

// Observables per event, as raw cell counts: S, S_0, S_{0..0}, then S_n for
// n = -n_max..n_max without n = 0.
std::vector<std::string> observable_names(int n_max);
inline constexpr std::size_t kObsS = 0, kObsS0 = 1, kObsS00 = 2;
std::size_t observable_index_Sn(int n_max, int n);

struct MomentSums {
  long long events = 0;
  std::vector<long long> sum;
  std::vector<__int128> sum_sq;
  __int128 sum_s_s0 = 0;  // for the covariance in q

  explicit MomentSums(std::size_t k = 0) : sum(k, 0), sum_sq(k, 0) {}
  void add_event(std::span<const long long> x);
  void merge(const MomentSums& other);
  bool operator==(const MomentSums&) const = default;
};

// Observables of one tally, in observable_names order.
std::vector<long long> observables(const SectorTally& t, int n_max);

// Walk p of event e for a given m.
RunSeed event_seed(std::uint64_t master_seed, int m, long event, std::uint32_t path);

// Events [first, first + count) for one m. The serial kernel runs them in
// order on the calling thread; the parallel kernel spreads them over an
// OpenMP team of config.workers threads. Both return identical sums.
MomentSums run_block_serial(const CampaignConfig& config, int m, long first, long count);
MomentSums run_block_parallel(const CampaignConfig& config, int m, long first, long count);

struct Measured {
  double value = 0.0;
  double stderr_ = 0.0;
};

struct MSummary {
  int m = 0;
  double t = 0.0;
  MomentSums sums;

  long long events() const { return sums.events; }
  // Mean of observable k in units of t; stderr is stddev / sqrt(events).
  Measured mean(std::size_t k) const;
  // S_0 / (S - S_0) from the event means; delta-method error.
  Measured q() const;
};

struct CampaignResult {
  CampaignConfig config;
  std::vector<MSummary> per_m;
};

// Called on the calling thread after each finished block.
using ProgressFn = std::function<void(int m, long done, long total)>;

// Runs (or resumes, from checkpoint_dir) every m in config.m_values.
CampaignResult run_campaign(const CampaignConfig& config, const ProgressFn& progress = {});

// Checkpoint file for one m inside checkpoint_dir.
std::filesystem::path checkpoint_path(const CampaignConfig& config, int m);

}  // namespace windsec::mc
