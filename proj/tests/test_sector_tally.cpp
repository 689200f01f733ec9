#include "doctest.h"

#include <numeric>
#include <vector>

#include "windsec/mc/sector_tally.hpp"
#include "windsec/mc/walk.hpp"
#include "windsec/mc/winding_field.hpp"

using namespace windsec::mc;

namespace {

std::vector<ClosedWalk> walks_of(std::initializer_list<const char*> dumps) {
  std::vector<ClosedWalk> out;
  for (const char* d : dumps) out.push_back(from_dump(d));
  return out;
}

}  // namespace

TEST_CASE("inside mask basics") {
  CHECK(inside_mask(walks_of({"R U L D"})).count() == 1);
  CHECK(inside_mask(walks_of({"R L"})).count() == 0);
  const auto back_and_forth = walks_of({"R U L D U R D L"});
  const InsideMask m = inside_mask(back_and_forth);
  CHECK(m.count() == 1);
  CHECK(m.at(0, 0));
  const SectorTally t = tally(back_and_forth);
  CHECK(t.s_total == 1);
  CHECK(t.s_zero_inside == 1);
  CHECK(t.s_all_zero_inside == 1);
  CHECK(t.by_total_n == std::map<int, long long>{{0, 1}});
}

TEST_CASE("degenerate walk tallies to nothing") {
  const SectorTally t = tally(walks_of({"R L", "U D"}));
  CHECK(t.s_total == 0);
  CHECK(t.by_total_n.empty());
}

TEST_CASE("two copies of the same square") {
  const SectorTally t = tally(walks_of({"R U L D", "R U L D"}), TallyOptions{true});
  CHECK(t.by_total_n == std::map<int, long long>{{2, 1}});
  CHECK(t.s_total == 1);
  CHECK(t.s_zero_inside == 0);
  REQUIRE(t.by_tuple_class.size() == 1);
  CHECK(t.by_tuple_class.begin()->first == TupleClass{{1, 1}, 0});
  CHECK(t.by_tuple_class.begin()->second == 1);
}

TEST_CASE("opposite squares on adjacent cells") {
  // Second walk steps right, circles cell (1,0) clockwise, and returns.
  const SectorTally t = tally(walks_of({"R U L D", "R U R D L L"}), TallyOptions{true});
  CHECK(t.by_total_n == std::map<int, long long>{{-1, 1}, {1, 1}});
  CHECK(t.s_zero_inside == 0);
  CHECK(t.s_total == 2);
  CHECK(t.by_tuple_class.at(TupleClass{{1}, 1}) == 1);
  CHECK(t.by_tuple_class.at(TupleClass{{-1}, 1}) == 1);
}

TEST_CASE("opposite squares on the same cell") {
  const SectorTally t = tally(walks_of({"R U L D", "U R D L"}), TallyOptions{true});
  CHECK(t.s_total == 1);
  CHECK(t.s_zero_inside == 1);
  CHECK(t.s_all_zero_inside == 0);
  CHECK(t.by_tuple_class.at(TupleClass{{-1, 1}, 0}) == 1);
}

TEST_CASE("closure identities hold on random events") {
  TallyWorkspace ws;
  for (std::uint64_t e = 0; e < 200; ++e) {
    const int m = 1 + static_cast<int>(e % 5);
    std::vector<ClosedWalk> walks;
    for (int p = 0; p < m; ++p) walks.push_back(sample_closed_walk(400, RunSeed{99, e, static_cast<std::uint32_t>(p)}));
    const SectorTally t = ws.tally(walks, TallyOptions{true});
    REQUIRE_NOTHROW(t.verify());
    long long classes = 0;
    for (const auto& [c, n] : t.by_tuple_class) {
      REQUIRE(static_cast<int>(c.nonzero.size()) + c.zero_count == m);
      classes += n;
    }
    REQUIRE(classes == t.s_total);
    // Tuple classes and the plain tally agree.
    const SectorTally plain = ws.tally(walks);
    REQUIRE(plain.by_total_n == t.by_total_n);
    REQUIRE(plain.s_all_zero_inside == t.s_all_zero_inside);
    // Every cell with nonzero winding is inside.
    const InsideMask mask = ws.inside_mask(walks);
    for (const auto& w : walks) {
      const WindingField f = winding_field(w);
      for (int j = f.box.y0; j < f.box.y1; ++j)
        for (int i = f.box.x0; i < f.box.x1; ++i)
          if (f.at(i, j) != 0) REQUIRE(mask.at(i, j));
    }
  }
}

TEST_CASE("adding a walk never shrinks S") {
  TallyWorkspace ws;
  for (std::uint64_t e = 0; e < 100; ++e) {
    std::vector<ClosedWalk> walks;
    long long prev = 0;
    for (std::uint32_t p = 0; p < 4; ++p) {
      walks.push_back(sample_closed_walk(300, RunSeed{5, e, p}));
      const long long s = ws.tally(walks).s_total;
      REQUIRE(s >= prev);
      prev = s;
    }
  }
}

TEST_CASE("single-walk fast path matches the general path") {
  TallyWorkspace ws;
  for (std::uint64_t e = 0; e < 50; ++e) {
    const std::vector<ClosedWalk> w{sample_closed_walk(600, RunSeed{6, e, 0})};
    const SectorTally a = ws.tally(w), b = ws.tally(w, TallyOptions{true});
    REQUIRE(a.by_total_n == b.by_total_n);
    REQUIRE(a.s_all_zero_inside == b.s_all_zero_inside);
  }
}
