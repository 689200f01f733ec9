#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "windsec/mc/walk.hpp"
#include "windsec/mc/winding_field.hpp"

using namespace windsec::mc;

namespace {

struct Pt {
  long x, y;
};

std::vector<Pt> vertices(const ClosedWalk& w) {
  std::vector<Pt> v{{0, 0}};
  for (Step s : w.steps) v.push_back({v.back().x + step_dx(s), v.back().y + step_dy(s)});
  return v;
}

// Winding number around (cx, cy) by summing signed turning angles.
int winding_by_angles(const ClosedWalk& w, double cx, double cy) {
  const auto v = vertices(w);
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < v.size(); ++k) {
    const double a0 = std::atan2(v[k].y - cy, v[k].x - cx);
    const double a1 = std::atan2(v[k + 1].y - cy, v[k + 1].x - cx);
    double d = a1 - a0;
    if (d > M_PI) d -= 2 * M_PI;
    if (d < -M_PI) d += 2 * M_PI;
    total += d;
  }
  return static_cast<int>(std::lround(total / (2 * M_PI)));
}

ClosedWalk reversed(const ClosedWalk& w) {
  ClosedWalk r;
  for (auto it = w.steps.rbegin(); it != w.steps.rend(); ++it) {
    const Step s = *it;
    r.steps.push_back(s == Step::R ? Step::L : s == Step::L ? Step::R : s == Step::U ? Step::D : Step::U);
  }
  return r;
}

}  // namespace

TEST_CASE("unit squares") {
  const ClosedWalk ccw = from_dump("R U L D");
  const WindingField f = winding_field(ccw);
  CHECK(f.box.area() == 1);
  CHECK(f.at(0, 0) == 1);
  CHECK(f.at(1, 0) == 0);
  CHECK(f.at(-1, 0) == 0);
  CHECK(signed_area(ccw) == 1);
  CHECK(dump(f) == "box 0 0 1 1\n1\n");

  const ClosedWalk cw = from_dump("U R D L");
  CHECK(winding_field(cw).at(0, 0) == -1);
  CHECK(signed_area(cw) == -1);
}

TEST_CASE("figure eight through a shared vertex") {
  const ClosedWalk w = from_dump("R U L D D L U R");
  const WindingField f = winding_field(w);
  CHECK(f.at(0, 0) == 1);
  CHECK(f.at(-1, -1) == -1);
  CHECK(f.at(-1, 0) == 0);
  CHECK(f.at(0, -1) == 0);
  CHECK(f.sum() == 0);
  // Shoelace on the explicit vertex list.
  const auto v = vertices(w);
  long twice = 0;
  for (std::size_t k = 0; k + 1 < v.size(); ++k) twice += v[k].x * v[k + 1].y - v[k + 1].x * v[k].y;
  CHECK(twice == 0);
  CHECK(signed_area(w) == 0);
}

TEST_CASE("degenerate walk has no area") {
  const WindingField f = winding_field(from_dump("R L"));
  CHECK(f.sum() == 0);
  CHECK(f.box.area() == 0);
}

TEST_CASE("winding sum equals the shoelace area on random walks") {
  for (std::uint64_t k = 0; k < 1000; ++k) {
    const ClosedWalk w = sample_closed_walk(1000, RunSeed{2024, k, 0});
    REQUIRE(winding_field(w).sum() == signed_area(w));
  }
}

TEST_CASE("field matches turning-angle winding numbers") {
  for (std::uint64_t k = 0; k < 20; ++k) {
    const ClosedWalk w = sample_closed_walk(200, RunSeed{8, k, 1});
    const WindingField f = winding_field(w);
    for (int j = f.box.y0 - 1; j <= f.box.y1; ++j)
      for (int i = f.box.x0 - 1; i <= f.box.x1; ++i) REQUIRE(f.at(i, j) == winding_by_angles(w, i + 0.5, j + 0.5));
  }
}

TEST_CASE("reversal negates the field") {
  const ClosedWalk w = sample_closed_walk(400, RunSeed{1, 2, 3});
  const WindingField f = winding_field(w), g = winding_field(reversed(w));
  CHECK(f.box.x0 == g.box.x0);
  CHECK(f.box.y1 == g.box.y1);
  for (std::size_t k = 0; k < f.grid.size(); ++k) REQUIRE(g.grid[k] == -f.grid[k]);
  CHECK(signed_area(reversed(w)) == -signed_area(w));
}

TEST_CASE("starting at another vertex translates the field") {
  const ClosedWalk w = sample_closed_walk(300, RunSeed{4, 4, 4});
  const std::size_t shift = 77;
  ClosedWalk r;
  r.steps.assign(w.steps.begin() + shift, w.steps.end());
  r.steps.insert(r.steps.end(), w.steps.begin(), w.steps.begin() + shift);
  const auto p = vertices(w)[shift];
  const WindingField f = winding_field(w), g = winding_field(r);
  for (int j = f.box.y0; j < f.box.y1; ++j)
    for (int i = f.box.x0; i < f.box.x1; ++i) REQUIRE(g.at(i - p.x, j - p.y) == f.at(i, j));
}

TEST_CASE("unclosed walk is rejected") { CHECK_THROWS(winding_field(from_dump("R U"))); }
