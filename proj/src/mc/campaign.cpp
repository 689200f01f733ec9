#include "windsec/mc/campaign.hpp"

#include <omp.h>

#include <cmath>
#include <exception>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace windsec::mc {

using json = nlohmann::json;

double time_for(TimeConvention convention, long n_steps) {
  return convention == TimeConvention::half_steps ? brownian_time(n_steps) : static_cast<double>(n_steps);
}

const char* to_string(TimeConvention convention) {
  return convention == TimeConvention::half_steps ? "half_steps" : "steps";
}

TimeConvention time_convention_from_string(const std::string& name) {
  if (name == "half_steps" || name == "N/2") return TimeConvention::half_steps;
  if (name == "steps" || name == "N") return TimeConvention::steps;
  throw std::invalid_argument("unknown time convention '" + name + "' (half_steps or steps)");
}

void CampaignConfig::validate() const {
  if (m_values.empty()) throw std::invalid_argument("campaign: m_values is empty");
  for (int m : m_values)
    if (m < 1) throw std::invalid_argument("campaign: m must be >= 1");
  if (n_steps < 2 || n_steps % 2 != 0) throw std::invalid_argument("campaign: n_steps must be even and >= 2");
  if (n_events < 1) throw std::invalid_argument("campaign: n_events must be >= 1");
  if (n_events > (1L << 32)) throw std::invalid_argument("campaign: n_events must fit in 32 bits");
  if (workers < 0) throw std::invalid_argument("campaign: workers must be >= 0");
  if (n_max < 1) throw std::invalid_argument("campaign: n_max must be >= 1");
}

std::vector<std::string> observable_names(int n_max) {
  std::vector<std::string> names{"S", "S0", "S00"};
  for (int n = -n_max; n <= n_max; ++n)
    if (n != 0) names.push_back("S_" + std::to_string(n));
  return names;
}

std::size_t observable_index_Sn(int n_max, int n) {
  if (n == 0 || n < -n_max || n > n_max) throw std::out_of_range("observable_index_Sn: n out of range");
  return static_cast<std::size_t>(3 + (n < 0 ? n + n_max : n + n_max - 1));
}

void MomentSums::add_event(std::span<const long long> x) {
  if (x.size() != sum.size()) throw std::invalid_argument("MomentSums: observable count mismatch");
  ++events;
  for (std::size_t k = 0; k < x.size(); ++k) {
    sum[k] += x[k];
    sum_sq[k] += static_cast<__int128>(x[k]) * x[k];
  }
  sum_s_s0 += static_cast<__int128>(x[kObsS]) * x[kObsS0];
}

void MomentSums::merge(const MomentSums& other) {
  if (other.sum.size() != sum.size()) throw std::invalid_argument("MomentSums: observable count mismatch");
  events += other.events;
  for (std::size_t k = 0; k < sum.size(); ++k) {
    sum[k] += other.sum[k];
    sum_sq[k] += other.sum_sq[k];
  }
  sum_s_s0 += other.sum_s_s0;
}

std::vector<long long> observables(const SectorTally& t, int n_max) {
  std::vector<long long> x{t.s_total, t.s_zero_inside, t.s_all_zero_inside};
  for (int n = -n_max; n <= n_max; ++n)
    if (n != 0) x.push_back(t.count(n));
  return x;
}

RunSeed event_seed(std::uint64_t master_seed, int m, long event, std::uint32_t path) {
  return {master_seed, (static_cast<std::uint64_t>(m) << 32) | static_cast<std::uint64_t>(event), path};
}

namespace {

// Buffers owned by one worker.
struct EventState {
  TallyWorkspace workspace;
  std::vector<ClosedWalk> walks;
  WalkScratch scratch;
  ClosedWalk regenerated;
  std::size_t regenerated_path = SIZE_MAX;
};

std::vector<long long> run_event(const CampaignConfig& c, int m, long event, EventState& st) {
  const auto mm = static_cast<std::size_t>(m);
  SectorTally t;
  if (mm * static_cast<std::size_t>(c.n_steps) * sizeof(Step) <= c.stored_walk_bytes) {
    st.walks.resize(mm);
    for (std::size_t p = 0; p < mm; ++p)
      sample_closed_walk(c.n_steps, event_seed(c.master_seed, m, event, static_cast<std::uint32_t>(p)),
                         st.walks[p], st.scratch);
    t = st.workspace.tally(st.walks);
  } else {
    st.regenerated_path = SIZE_MAX;
    const WalkSource source = [&](std::size_t p) -> const ClosedWalk& {
      if (p != st.regenerated_path) {
        sample_closed_walk(c.n_steps, event_seed(c.master_seed, m, event, static_cast<std::uint32_t>(p)),
                           st.regenerated, st.scratch);
        st.regenerated_path = p;
      }
      return st.regenerated;
    };
    t = st.workspace.tally(mm, source);
  }
  return observables(t, c.n_max);
}

}  // namespace

MomentSums run_block_serial(const CampaignConfig& config, int m, long first, long count) {
  MomentSums sums(observable_names(config.n_max).size());
  EventState st;
  for (long e = first; e < first + count; ++e) sums.add_event(run_event(config, m, e, st));
  return sums;
}

MomentSums run_block_parallel(const CampaignConfig& config, int m, long first, long count) {
  const std::size_t k = observable_names(config.n_max).size();
  MomentSums total(k);
  std::exception_ptr failure;
  const int threads = config.workers > 0 ? config.workers : omp_get_max_threads();
#pragma omp parallel num_threads(threads)
  {
    MomentSums local(k);
    EventState st;
#pragma omp for schedule(dynamic, 1)
    for (long e = first; e < first + count; ++e) {
      try {
        local.add_event(run_event(config, m, e, st));
      } catch (...) {
#pragma omp critical(windsec_campaign_failure)
        if (!failure) failure = std::current_exception();
      }
    }
#pragma omp critical(windsec_campaign_merge)
    total.merge(local);
  }
  if (failure) std::rethrow_exception(failure);
  return total;
}

Measured MSummary::mean(std::size_t k) const {
  const double n = static_cast<double>(sums.events);
  if (sums.events < 1) return {};
  const double mu = static_cast<double>(sums.sum[k]) / n;
  double se = 0.0;
  if (sums.events > 1) {
    // Centre in integers first: sum_sq - sum^2/n loses everything in doubles.
    const __int128 s = sums.sum[k];
    const long double ss = static_cast<long double>(sums.sum_sq[k] * sums.events - s * s);
    const double var = static_cast<double>(ss / (static_cast<long double>(n) * (n - 1)));
    se = std::sqrt(std::max(var, 0.0) / n);
  }
  return {mu / t, se / t};
}

Measured MSummary::q() const {
  const long long n = sums.events;
  if (n < 2) return {};
  const __int128 s = sums.sum[kObsS], z = sums.sum[kObsS0];
  const long double nd = static_cast<long double>(n);
  const long double denom = nd * (nd - 1);
  const long double var_s = static_cast<long double>(sums.sum_sq[kObsS] * n - s * s) / denom;
  const long double var_z = static_cast<long double>(sums.sum_sq[kObsS0] * n - z * z) / denom;
  const long double cov_sz = static_cast<long double>(sums.sum_s_s0 * n - s * z) / denom;
  const long double a = static_cast<long double>(z) / nd;      // <S_0>
  const long double b = static_cast<long double>(s - z) / nd;  // <S - S_0>
  if (b <= 0) return {};
  const long double var_b = var_s - 2 * cov_sz + var_z;
  const long double cov_ab = cov_sz - var_z;
  const long double var_r = (var_z / (b * b) - 2 * a * cov_ab / (b * b * b) + a * a * var_b / (b * b * b * b)) / nd;
  return {static_cast<double>(a / b), static_cast<double>(std::sqrt(std::max(var_r, 0.0L)))};
}

std::filesystem::path checkpoint_path(const CampaignConfig& config, int m) {
  return config.checkpoint_dir / ("checkpoint_m" + std::to_string(m) + ".json");
}

namespace {

std::string i128_to_string(__int128 v) {
  if (v == 0) return "0";
  const bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  std::string s;
  while (u > 0) {
    s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  return neg ? "-" + s : s;
}

__int128 i128_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty integer");
  std::size_t i = s[0] == '-' ? 1 : 0;
  if (i == s.size()) throw std::invalid_argument("bad integer '" + s + "'");
  __int128 v = 0;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad integer '" + s + "'");
    v = v * 10 + (s[i] - '0');
  }
  return s[0] == '-' ? -v : v;
}

json fingerprint(const CampaignConfig& c, int m) {
  return {{"m", m}, {"n_steps", c.n_steps}, {"n_events", c.n_events},
          {"master_seed", c.master_seed}, {"n_max", c.n_max}, {"block_events", kBlockEvents}};
}

void write_checkpoint(const CampaignConfig& c, int m, const MomentSums& sums) {
  json j = fingerprint(c, m);
  j["events_done"] = sums.events;
  j["sum"] = sums.sum;
  json sq = json::array();
  for (const auto v : sums.sum_sq) sq.push_back(i128_to_string(v));
  j["sum_sq"] = sq;
  j["sum_s_s0"] = i128_to_string(sums.sum_s_s0);

  const auto path = checkpoint_path(c, m);
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << j.dump(1) << '\n';
    out.flush();
    if (!out) throw std::runtime_error("campaign: cannot write checkpoint " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

// Sums recorded so far, or an empty MomentSums if there is no checkpoint.
MomentSums read_checkpoint(const CampaignConfig& c, int m) {
  MomentSums sums(observable_names(c.n_max).size());
  const auto path = checkpoint_path(c, m);
  if (!std::filesystem::exists(path)) return sums;
  std::ifstream in(path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw std::runtime_error("campaign: unreadable checkpoint " + path.string() + ": " + e.what());
  }
  const json expected = fingerprint(c, m);
  for (const auto& [key, value] : expected.items())
    if (!j.contains(key) || j[key] != value)
      throw std::runtime_error("campaign: checkpoint " + path.string() + " was written for a different " + key);
  sums.events = j.at("events_done").get<long long>();
  sums.sum = j.at("sum").get<std::vector<long long>>();
  const auto sq = j.at("sum_sq").get<std::vector<std::string>>();
  if (sums.sum.size() != sq.size() || sums.sum.size() != sums.sum_sq.size() ||
      (sums.events % kBlockEvents != 0 && sums.events != c.n_events))
    throw std::runtime_error("campaign: inconsistent checkpoint " + path.string());
  for (std::size_t k = 0; k < sq.size(); ++k) sums.sum_sq[k] = i128_from_string(sq[k]);
  sums.sum_s_s0 = i128_from_string(j.at("sum_s_s0").get<std::string>());
  return sums;
}

}  // namespace

CampaignResult run_campaign(const CampaignConfig& config, const ProgressFn& progress) {
  config.validate();
  const bool checkpoints = !config.checkpoint_dir.empty();
  if (checkpoints) std::filesystem::create_directories(config.checkpoint_dir);

  CampaignResult result{config, {}};
  for (int m : config.m_values) {
    MSummary summary{m, time_for(config.time, config.n_steps), MomentSums(observable_names(config.n_max).size())};
    if (checkpoints) {
      summary.sums = read_checkpoint(config, m);
      // Fails early on an unwritable directory.
      if (summary.sums.events == 0) write_checkpoint(config, m, summary.sums);
    }
    if (progress) progress(m, summary.sums.events, config.n_events);
    while (summary.sums.events < config.n_events) {
      const long first = summary.sums.events;
      const long count = std::min(kBlockEvents, config.n_events - first);
      summary.sums.merge(config.workers == 1 ? run_block_serial(config, m, first, count)
                                             : run_block_parallel(config, m, first, count));
      if (checkpoints) write_checkpoint(config, m, summary.sums);
      if (progress) progress(m, summary.sums.events, config.n_events);
    }
    result.per_m.push_back(std::move(summary));
  }
  return result;
}

}  // namespace windsec::mc
