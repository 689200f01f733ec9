#pragma once

// Uniform closed nearest-neighbour walks on the square lattice.
//
// In the rotated coordinates u = x + y, v = x - y every lattice step moves
// both u and v by +-1, and the four steps are the four sign pairs. A closed
// walk of N steps is therefore a pair of independent +-1 bridges of length
// N (N/2 up-steps each), and a uniform closed walk is a pair of uniformly
// shuffled bridges.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace windsec::mc {

enum class Step : std::uint8_t { R = 0, L = 1, U = 2, D = 3 };

inline constexpr int kStepDx[4] = {1, -1, 0, 0};
inline constexpr int kStepDy[4] = {0, 0, 1, -1};

inline constexpr int step_dx(Step s) { return kStepDx[static_cast<int>(s)]; }
inline constexpr int step_dy(Step s) { return kStepDy[static_cast<int>(s)]; }

// Identifies an independent random stream.
struct RunSeed {
  std::uint64_t master_seed = 0;
  std::uint64_t stream_id = 0;  // event index (campaigns fold m in as well)
  std::uint32_t path_id = 0;    // which of the m walks
};

struct ClosedWalk {
  std::vector<Step> steps;  // starts at the origin

  std::size_t size() const { return steps.size(); }
  bool is_closed() const;
};

// Reusable buffers for sampling many walks of the same length.
struct WalkScratch {
  std::vector<std::uint8_t> u_bits;
};

// Throws std::domain_error for odd or non-positive n_steps.
ClosedWalk sample_closed_walk(long n_steps, const RunSeed& seed);
void sample_closed_walk(long n_steps, const RunSeed& seed, ClosedWalk& out, WalkScratch& scratch);

// Brownian time matched to the walk: each coordinate has variance 1/2 per
// step, and the continuum paths have E[x(t)^2] = t.
double brownian_time(long n_steps);

// One step per line, tokens R L U D.
std::string to_dump(const ClosedWalk& walk);
ClosedWalk from_dump(std::string_view text);

}  // namespace windsec::mc
