#pragma once

// Philox4x32-10 counter-based generator (Salmon et al., SC'11) and a
// sequential stream view over it. A stream is identified by a 64-bit key and
// three counter words; the fourth counter word walks the stream, so distinct
// (key, id) tuples never share output blocks.

#include <array>
#include <cstdint>

namespace windsec::rng {

using Block = std::array<std::uint32_t, 4>;
using Key = std::array<std::uint32_t, 2>;

inline Block philox4x32_10(Block ctr, Key key) {
  constexpr std::uint32_t m0 = 0xD2511F53u;
  constexpr std::uint32_t m1 = 0xCD9E8D57u;
  constexpr std::uint32_t w0 = 0x9E3779B9u;
  constexpr std::uint32_t w1 = 0xBB67AE85u;
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      key[0] += w0;
      key[1] += w1;
    }
    const std::uint64_t p0 = static_cast<std::uint64_t>(m0) * ctr[0];
    const std::uint64_t p1 = static_cast<std::uint64_t>(m1) * ctr[2];
    const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
    const auto lo0 = static_cast<std::uint32_t>(p0);
    const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
    const auto lo1 = static_cast<std::uint32_t>(p1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
  }
  return ctr;
}

// Sequential 32-bit stream. counter word 0 is the block index within the
// stream; words 1..3 identify the stream.
class PhiloxStream {
 public:
  PhiloxStream(std::uint64_t seed, std::uint32_t id1, std::uint32_t id2, std::uint32_t id3)
      : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
        ctr_{0u, id1, id2, id3} {}

  std::uint32_t next_u32() {
    if (used_ == 4) refill();
    return buf_[used_++];
  }

  std::uint64_t next_u64() {
    const std::uint64_t hi = next_u32();
    return (hi << 32) | next_u32();
  }

  // Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Exactly uniform integer in [0, bound), bound >= 1 (Lemire's method).
  std::uint32_t uniform_below(std::uint32_t bound) {
    std::uint64_t m = static_cast<std::uint64_t>(next_u32()) * bound;
    auto low = static_cast<std::uint32_t>(m);
    if (low < bound) {
      const std::uint32_t threshold = static_cast<std::uint32_t>(-bound) % bound;
      while (low < threshold) {
        m = static_cast<std::uint64_t>(next_u32()) * bound;
        low = static_cast<std::uint32_t>(m);
      }
    }
    return static_cast<std::uint32_t>(m >> 32);
  }

  std::uint64_t blocks_used() const { return ctr_[0]; }

 private:
  void refill() {
    buf_ = philox4x32_10(ctr_, key_);
    ++ctr_[0];
    used_ = 0;
  }

  Key key_;
  Block ctr_;
  Block buf_{};
  int used_ = 4;
};

}  // namespace windsec::rng
