#pragma once

// Joint winding-sector accounting for m closed walks: which cells lie inside
// the external frontier, and how the inside cells split by total winding
// and by per-walk winding tuple.

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "windsec/mc/walk.hpp"
#include "windsec/mc/winding_field.hpp"

namespace windsec::mc {

// Tuple label up to permutation: sorted nonzero windings plus the number of
// walks with zero winding.
struct TupleClass {
  std::vector<int> nonzero;
  int zero_count = 0;

  auto operator<=>(const TupleClass&) const = default;
};

struct SectorTally {
  std::map<int, long long> by_total_n;  // inside cells by total winding; empty bins omitted
  long long s_total = 0;                 // S(m)
  long long s_zero_inside = 0;           // S_0(m)
  long long s_all_zero_inside = 0;       // S_{0,...,0}(m)
  std::map<TupleClass, long long> by_tuple_class;  // only when requested
  bool has_tuple_classes = false;

  long long count(int n) const {
    const auto it = by_total_n.find(n);
    return it == by_total_n.end() ? 0 : it->second;
  }
  // Throws std::logic_error if a closure identity fails.
  void verify() const;
};

struct TallyOptions {
  bool tuple_classes = false;
};

// Cells not reachable from beyond the joint bounding box without crossing
// a traversed edge.
struct InsideMask {
  CellBox box;
  std::vector<std::uint8_t> inside;

  bool at(int i, int j) const {
    return box.contains(i, j) && inside[static_cast<std::size_t>(j - box.y0) * box.width() + (i - box.x0)];
  }
  long long count() const;
};

// Produces walk p of an event. Called three times per walk, so it may
// regenerate the walk instead of storing all m of them.
using WalkSource = std::function<const ClosedWalk&(std::size_t p)>;

// Buffers reused across events; one per worker thread.
class TallyWorkspace {
 public:
  SectorTally tally(std::span<const ClosedWalk> walks, const TallyOptions& options = {});
  SectorTally tally(std::size_t m, const WalkSource& walk_at, const TallyOptions& options = {});
  InsideMask inside_mask(std::span<const ClosedWalk> walks);

 private:
  void prepare(std::size_t m, const WalkSource& walk_at);
  void flood_outside();
  void add_walk_field(const ClosedWalk& walk, const CellBox& b, bool tuples);
  int intern(int cls, int w);

  CellBox box_;
  std::vector<CellBox> walk_boxes_;
  std::vector<std::uint8_t> edges_;  // bit0 left edge traversed, bit1 bottom edge, bit2 outside
  std::vector<std::int32_t> total_;
  std::vector<std::uint8_t> any_;
  std::vector<std::int32_t> cls_;
  std::vector<std::int32_t> walk_field_;
  std::vector<std::int32_t> stack_;

  std::vector<std::vector<int>> classes_;
  std::map<std::vector<int>, int> canonical_;
  std::map<std::int64_t, int> transitions_;
};

InsideMask inside_mask(std::span<const ClosedWalk> walks);
SectorTally tally(std::span<const ClosedWalk> walks, const TallyOptions& options = {});

}  // namespace windsec::mc
