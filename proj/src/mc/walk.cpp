#include "windsec/mc/walk.hpp"

#include <algorithm>
#include <stdexcept>

#include "windsec/rng/philox.hpp"

namespace windsec::mc {

namespace {

// Urn draw of n/2 ones among n positions; bits[i] |= 1 << shift for ones.
void urn_bridge(std::uint8_t* bits, long n, int shift, rng::PhiloxStream& rng) {
  auto ups = static_cast<std::uint32_t>(n / 2);
  for (long i = 0; i < n; ++i) {
    const auto left = static_cast<std::uint32_t>(n - i);
    const std::uint32_t up = rng.uniform_below(left) < ups;
    ups -= up;
    bits[i] |= static_cast<std::uint8_t>(up << shift);
  }
}

}  // namespace

bool ClosedWalk::is_closed() const {
  long x = 0, y = 0;
  for (Step s : steps) {
    x += step_dx(s);
    y += step_dy(s);
  }
  return x == 0 && y == 0;
}

void sample_closed_walk(long n_steps, const RunSeed& seed, ClosedWalk& out, WalkScratch& scratch) {
  if (n_steps < 2 || n_steps % 2 != 0)
    throw std::domain_error("no closed walk of odd length exists on the square lattice (n_steps must be even and >= 2)");
  if (n_steps > 0x7fffffffL) throw std::domain_error("n_steps too large");
  rng::PhiloxStream rng(seed.master_seed, static_cast<std::uint32_t>(seed.stream_id),
                        static_cast<std::uint32_t>(seed.stream_id >> 32), seed.path_id);
  // Bit 1 carries du > 0, bit 0 dv > 0: 3 R, 0 L, 2 U, 1 D.
  scratch.u_bits.assign(static_cast<std::size_t>(n_steps), 0);
  urn_bridge(scratch.u_bits.data(), n_steps, 1, rng);
  urn_bridge(scratch.u_bits.data(), n_steps, 0, rng);
  static constexpr Step table[4] = {Step::L, Step::D, Step::U, Step::R};
  out.steps.resize(static_cast<std::size_t>(n_steps));
  for (std::size_t i = 0; i < out.steps.size(); ++i) out.steps[i] = table[scratch.u_bits[i]];
}

ClosedWalk sample_closed_walk(long n_steps, const RunSeed& seed) {
  ClosedWalk w;
  WalkScratch s;
  sample_closed_walk(n_steps, seed, w, s);
  return w;
}

double brownian_time(long n_steps) {
  if (n_steps < 2) throw std::domain_error("brownian_time: n_steps must be >= 2");
  return 0.5 * static_cast<double>(n_steps);
}

std::string to_dump(const ClosedWalk& walk) {
  static constexpr char names[] = {'R', 'L', 'U', 'D'};
  std::string s;
  s.reserve(walk.size() * 2);
  for (Step st : walk.steps) {
    s.push_back(names[static_cast<int>(st)]);
    s.push_back('\n');
  }
  return s;
}

ClosedWalk from_dump(std::string_view text) {
  ClosedWalk w;
  for (char c : text) {
    switch (c) {
      case 'R': w.steps.push_back(Step::R); break;
      case 'L': w.steps.push_back(Step::L); break;
      case 'U': w.steps.push_back(Step::U); break;
      case 'D': w.steps.push_back(Step::D); break;
      case '\n': case '\r': case ' ': case '\t': break;
      default: throw std::invalid_argument(std::string("walk dump: unexpected character '") + c + "'");
    }
  }
  return w;
}

}  // namespace windsec::mc
