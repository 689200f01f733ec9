#include "windsec/mc/winding_field.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace windsec::mc {

WalkGeometry walk_geometry(const ClosedWalk& walk) {
  int x = 0, y = 0, xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  for (Step s : walk.steps) {
    x += step_dx(s);
    y += step_dy(s);
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  }
  return {{xmin, ymin, xmax, ymax}, x == 0 && y == 0};
}

CellBox cell_box(const ClosedWalk& walk) { return walk_geometry(walk).box; }

long long WindingField::sum() const { return std::accumulate(grid.begin(), grid.end(), 0LL); }

WindingField winding_field(const ClosedWalk& walk) {
  if (!walk.is_closed()) throw std::invalid_argument("winding_field: walk is not closed");
  WindingField f;
  f.box = cell_box(walk);
  const int w = f.box.width();
  f.grid.assign(static_cast<std::size_t>(f.box.area()), 0);
  if (f.grid.empty()) return f;
  // An up-step along x = c crosses row y; cells at i >= c of that row see
  // the crossing to their left. Record -1 (up) / +1 (down) at column c.
  int x = 0, y = 0;
  for (Step s : walk.steps) {
    if (s == Step::U || s == Step::D) {
      const int row = s == Step::U ? y : y - 1;
      if (x < f.box.x1) f.grid[static_cast<std::size_t>(row - f.box.y0) * w + (x - f.box.x0)] += s == Step::U ? -1 : 1;
    }
    x += step_dx(s);
    y += step_dy(s);
  }
  for (int j = 0; j < f.box.height(); ++j) {
    auto row = f.grid.begin() + static_cast<std::ptrdiff_t>(j) * w;
    std::partial_sum(row, row + w, row);
  }
  return f;
}

long long signed_area(const ClosedWalk& walk) {
  long long twice = 0;
  long long x = 0, y = 0;
  for (Step s : walk.steps) {
    const long long nx = x + step_dx(s), ny = y + step_dy(s);
    twice += x * ny - nx * y;
    x = nx;
    y = ny;
  }
  return twice / 2;
}

std::string dump(const WindingField& field) {
  std::ostringstream out;
  out << "box " << field.box.x0 << ' ' << field.box.y0 << ' ' << field.box.x1 << ' ' << field.box.y1 << '\n';
  for (int j = field.box.y1 - 1; j >= field.box.y0; --j) {
    for (int i = field.box.x0; i < field.box.x1; ++i) {
      if (i > field.box.x0) out << ' ';
      out << field.at(i, j);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace windsec::mc
