#pragma once

// Per-cell winding numbers of closed lattice walks. Cell (i, j) is the unit
// square with corners (i, j) and (i+1, j+1); its winding number is that of
// the walk around the cell centre.

#include <cstdint>
#include <string>
#include <vector>

#include "windsec/mc/walk.hpp"

namespace windsec::mc {

// Half-open cell rectangle [x0, x1) x [y0, y1).
struct CellBox {
  int x0 = 0, y0 = 0, x1 = 0, y1 = 0;

  int width() const { return x1 - x0; }
  int height() const { return y1 - y0; }
  long area() const { return static_cast<long>(width()) * height(); }
  bool contains(int i, int j) const { return i >= x0 && i < x1 && j >= y0 && j < y1; }
};

// Cells spanned by the walk's vertices (empty box for walks without area).
CellBox cell_box(const ClosedWalk& walk);

struct WalkGeometry {
  CellBox box;  // as cell_box
  bool closed = false;
};

// One pass over the steps.
WalkGeometry walk_geometry(const ClosedWalk& walk);

struct WindingField {
  CellBox box;
  std::vector<std::int32_t> grid;  // row-major, box.width() per row

  // Zero outside the box.
  std::int32_t at(int i, int j) const {
    if (!box.contains(i, j)) return 0;
    return grid[static_cast<std::size_t>(j - box.y0) * box.width() + (i - box.x0)];
  }
  long long sum() const;
};

// Net signed crossings of vertical edges, then a prefix sum along each row.
WindingField winding_field(const ClosedWalk& walk);

// Shoelace area of the vertex polygon.
long long signed_area(const ClosedWalk& walk);

// Text grid, top row first; each row lists the cells left to right as
// signed integers separated by single spaces. A header line gives the box.
std::string dump(const WindingField& field);

}  // namespace windsec::mc
