#include "doctest.h"

#include <array>
#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

#include "windsec/mc/walk.hpp"
#include "windsec/rng/philox.hpp"

using namespace windsec;
using namespace windsec::mc;

TEST_CASE("Philox4x32-10 known answers") {
  const rng::Block zero = rng::philox4x32_10({0, 0, 0, 0}, {0, 0});
  CHECK(zero == rng::Block{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u});
  const rng::Block ones =
      rng::philox4x32_10({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu}, {0xffffffffu, 0xffffffffu});
  CHECK(ones == rng::Block{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u, 0x6d5451fdu});
}

TEST_CASE("Philox streams are reproducible and distinct") {
  rng::PhiloxStream a(42, 1, 2, 3), b(42, 1, 2, 3), c(42, 1, 2, 4), d(43, 1, 2, 3);
  int same_c = 0, same_d = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto x = a.next_u32();
    CHECK(x == b.next_u32());
    same_c += x == c.next_u32();
    same_d += x == d.next_u32();
  }
  CHECK(same_c < 3);
  CHECK(same_d < 3);
  CHECK(a.blocks_used() == 250);
}

TEST_CASE("uniform_below is unbiased") {
  rng::PhiloxStream r(9, 0, 0, 0);
  const int bound = 7, draws = 70000;
  std::array<int, bound> counts{};
  for (int i = 0; i < draws; ++i) {
    const auto v = r.uniform_below(bound);
    REQUIRE(v < static_cast<unsigned>(bound));
    ++counts[v];
  }
  double chi2 = 0.0;
  for (int c : counts) chi2 += (c - draws / double(bound)) * (c - draws / double(bound)) / (draws / double(bound));
  CHECK(chi2 < 16.81);  // chi^2 with 6 dof, 1% upper point
  for (int i = 0; i < 1000; ++i) {
    const double u = r.uniform01();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("odd or empty walks are rejected") {
  CHECK_THROWS_AS(sample_closed_walk(3, RunSeed{}), std::domain_error);
  CHECK_THROWS_AS(sample_closed_walk(0, RunSeed{}), std::domain_error);
}

namespace {

// All closed walks of n steps by brute force.
std::vector<std::vector<Step>> enumerate_closed(int n) {
  std::vector<std::vector<Step>> out;
  const int total = 1 << (2 * n);
  for (int code = 0; code < total; ++code) {
    std::vector<Step> s;
    int x = 0, y = 0;
    for (int k = 0; k < n; ++k) {
      const auto st = static_cast<Step>((code >> (2 * k)) & 3);
      s.push_back(st);
      x += step_dx(st);
      y += step_dy(st);
    }
    if (x == 0 && y == 0) out.push_back(s);
  }
  return out;
}

}  // namespace

TEST_CASE("N = 2: each closed walk has probability 1/4") {
  const auto all = enumerate_closed(2);
  REQUIRE(all.size() == 4);
  std::map<std::vector<Step>, int> counts;
  const int draws = 100000;
  ClosedWalk w;
  WalkScratch s;
  for (int i = 0; i < draws; ++i) {
    sample_closed_walk(2, RunSeed{11, static_cast<std::uint64_t>(i), 0}, w, s);
    ++counts[w.steps];
  }
  REQUIRE(counts.size() == 4);
  const double sigma = std::sqrt(0.25 * 0.75 / draws);
  for (const auto& walk : all) CHECK(std::abs(counts[walk] / double(draws) - 0.25) <= 3 * sigma);
}

TEST_CASE("N = 4: uniform over the 36 closed walks") {
  const auto all = enumerate_closed(4);
  REQUIRE(all.size() == 36);
  std::map<std::vector<Step>, int> counts;
  const int draws = 72000;
  for (int i = 0; i < draws; ++i) ++counts[sample_closed_walk(4, RunSeed{5, static_cast<std::uint64_t>(i), 3}).steps];
  REQUIRE(counts.size() == 36);
  const double expect = draws / 36.0;
  double chi2 = 0.0;
  for (const auto& walk : all) chi2 += (counts[walk] - expect) * (counts[walk] - expect) / expect;
  CHECK(chi2 < 57.34);  // chi^2 with 35 dof, 1% upper point
}

TEST_CASE("sampled walks close and have balanced bridges") {
  for (long n : {2L, 10L, 1000L, 100000L}) {
    const ClosedWalk w = sample_closed_walk(n, RunSeed{1, static_cast<std::uint64_t>(n), 7});
    CHECK(w.size() == static_cast<std::size_t>(n));
    CHECK(w.is_closed());
    long u_up = 0, v_up = 0;
    for (Step s : w.steps) {
      u_up += s == Step::R || s == Step::U;
      v_up += s == Step::R || s == Step::D;
    }
    CHECK(u_up == n / 2);
    CHECK(v_up == n / 2);
  }
}

TEST_CASE("identical seeds give identical walks") {
  const RunSeed s{123, (5ULL << 32) | 17, 2};
  CHECK(sample_closed_walk(5000, s).steps == sample_closed_walk(5000, s).steps);
  RunSeed t = s;
  t.path_id = 3;
  CHECK(sample_closed_walk(5000, s).steps != sample_closed_walk(5000, t).steps);
  t = s;
  t.stream_id = 17;
  CHECK(sample_closed_walk(5000, s).steps != sample_closed_walk(5000, t).steps);
}

TEST_CASE("Brownian time is half the step count") {
  CHECK(brownian_time(1000000) == 500000.0);
  CHECK(brownian_time(2) == 1.0);
  CHECK_THROWS(brownian_time(1));
  // Open walks: E[x^2] after N uniform steps is N/2.
  rng::PhiloxStream r(77, 0, 0, 0);
  const int walks = 20000, n = 100;
  double sum = 0.0, sum2 = 0.0;
  for (int k = 0; k < walks; ++k) {
    int x = 0;
    for (int i = 0; i < n; ++i) x += step_dx(static_cast<Step>(r.uniform_below(4)));
    sum += x * x;
    sum2 += double(x) * x * x * x;
  }
  const double mean = sum / walks;
  const double se = std::sqrt((sum2 / walks - mean * mean) / walks);
  CHECK(std::abs(mean - brownian_time(n)) <= 4 * se);
}

TEST_CASE("walk dump round-trips") {
  const ClosedWalk w = sample_closed_walk(50, RunSeed{3, 4, 5});
  const std::string text = to_dump(w);
  CHECK(text.substr(0, 2).find('\n') == 1);
  CHECK(from_dump(text).steps == w.steps);
  CHECK(from_dump("R\nU\nL\nD\n").is_closed());
  CHECK_THROWS_AS(from_dump("R\nX\n"), std::invalid_argument);
}
