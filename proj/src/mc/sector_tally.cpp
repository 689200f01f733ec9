#include "windsec/mc/sector_tally.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace windsec::mc {

namespace {

constexpr std::uint8_t kLeft = 1;
constexpr std::uint8_t kBottom = 2;
constexpr std::uint8_t kOutside = 4;
constexpr int kDenseRange = 256;

}  // namespace

void SectorTally::verify() const {
  long long by_n = 0;
  for (const auto& [n, c] : by_total_n) {
    if (c <= 0) throw std::logic_error("tally: empty total-winding bin stored");
    by_n += c;
  }
  if (by_n != s_total) throw std::logic_error("tally: total-winding bins do not sum to S");
  if (count(0) != s_zero_inside) throw std::logic_error("tally: S_0 differs from the n = 0 bin");
  if (s_zero_inside > s_total || s_all_zero_inside > s_zero_inside)
    throw std::logic_error("tally: S_{0..0} <= S_0 <= S violated");
  if (has_tuple_classes) {
    long long by_tuple = 0, all_zero = 0, zero_sum = 0;
    for (const auto& [cls, c] : by_tuple_class) {
      by_tuple += c;
      if (cls.nonzero.empty()) all_zero += c;
      if (std::accumulate(cls.nonzero.begin(), cls.nonzero.end(), 0) == 0) zero_sum += c;
    }
    if (by_tuple != s_total) throw std::logic_error("tally: tuple classes do not sum to S");
    if (all_zero != s_all_zero_inside) throw std::logic_error("tally: all-zero class differs from S_{0..0}");
    if (zero_sum != s_zero_inside) throw std::logic_error("tally: zero-sum classes differ from S_0");
  }
}

long long InsideMask::count() const { return std::count(inside.begin(), inside.end(), std::uint8_t{1}); }

void TallyWorkspace::prepare(std::size_t m, const WalkSource& walk_at) {
  int xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  walk_boxes_.clear();
  for (std::size_t p = 0; p < m; ++p) {
    const WalkGeometry g = walk_geometry(walk_at(p));
    if (!g.closed) throw std::invalid_argument("tally: walk is not closed");
    walk_boxes_.push_back(g.box);
    xmin = std::min(xmin, g.box.x0);
    ymin = std::min(ymin, g.box.y0);
    xmax = std::max(xmax, g.box.x1);
    ymax = std::max(ymax, g.box.y1);
  }
  // One ring of padding cells, all of which are outside.
  box_ = {xmin - 1, ymin - 1, xmax + 1, ymax + 1};
  const auto n = static_cast<std::size_t>(box_.area());
  edges_.assign(n, 0);
  total_.assign(n, 0);

  // Per step: the cell whose left or bottom edge is traversed, relative to
  // the cell at the current vertex, and the crossing recorded there.
  const int w = box_.width();
  const std::ptrdiff_t offset[4] = {0, -1, 0, -w};
  const std::uint8_t bit[4] = {kBottom, kBottom, kLeft, kLeft};
  const std::int32_t cross[4] = {0, 0, -1, 1};
  const std::ptrdiff_t move[4] = {1, -1, w, -w};
  for (std::size_t p = 0; p < m; ++p) {
    const ClosedWalk& walk = walk_at(p);
    std::ptrdiff_t k = static_cast<std::ptrdiff_t>(-box_.y0) * w - box_.x0;
    for (Step s : walk.steps) {
      const int t = static_cast<int>(s);
      edges_[static_cast<std::size_t>(k + offset[t])] |= bit[t];
      total_[static_cast<std::size_t>(k + offset[t])] += cross[t];
      k += move[t];
    }
  }
  for (int j = 0; j < box_.height(); ++j) {
    auto row = total_.begin() + static_cast<std::ptrdiff_t>(j) * w;
    std::partial_sum(row, row + w, row);
  }
}

void TallyWorkspace::flood_outside() {
  const int w = box_.width(), h = box_.height();
  stack_.clear();
  auto seed = [&](int k) {
    if (!(edges_[k] & kOutside)) {
      edges_[k] |= kOutside;
      stack_.push_back(k);
    }
  };
  for (int i = 0; i < w; ++i) {
    seed(i);
    seed((h - 1) * w + i);
  }
  for (int j = 0; j < h; ++j) {
    seed(j * w);
    seed(j * w + w - 1);
  }
  while (!stack_.empty()) {
    const int k = stack_.back();
    stack_.pop_back();
    const int i = k % w, j = k / w;
    // Moving right crosses the left edge of the right neighbour, and so on.
    if (i + 1 < w && !(edges_[k + 1] & kLeft)) seed(k + 1);
    if (i > 0 && !(edges_[k] & kLeft)) seed(k - 1);
    if (j + 1 < h && !(edges_[k + w] & kBottom)) seed(k + w);
    if (j > 0 && !(edges_[k] & kBottom)) seed(k - w);
  }
}

int TallyWorkspace::intern(int cls, int wnd) {
  const std::int64_t key = (static_cast<std::int64_t>(cls) << 32) | static_cast<std::uint32_t>(wnd);
  if (const auto it = transitions_.find(key); it != transitions_.end()) return it->second;
  std::vector<int> next = classes_[static_cast<std::size_t>(cls)];
  next.insert(std::upper_bound(next.begin(), next.end(), wnd), wnd);
  auto [it, fresh] = canonical_.try_emplace(next, static_cast<int>(classes_.size()));
  if (fresh) classes_.push_back(std::move(next));
  transitions_.emplace(key, it->second);
  return it->second;
}

void TallyWorkspace::add_walk_field(const ClosedWalk& walk, const CellBox& b, bool tuples) {
  if (b.area() == 0) return;
  // Local grid over cells [x0, x1] x [y0 - 1, y1] so every step indexes a
  // valid cell; horizontal steps add zero.
  const int bw = b.width() + 1;
  const int bh = b.height() + 2;
  walk_field_.assign(static_cast<std::size_t>(bw) * bh, 0);
  const std::ptrdiff_t offset[4] = {0, 0, 0, -bw};
  const std::int32_t cross[4] = {0, 0, -1, 1};
  const std::ptrdiff_t move[4] = {1, -1, bw, -bw};
  std::ptrdiff_t k = static_cast<std::ptrdiff_t>(1 - b.y0) * bw - b.x0;
  for (Step s : walk.steps) {
    const int t = static_cast<int>(s);
    walk_field_[static_cast<std::size_t>(k + offset[t])] += cross[t];
    k += move[t];
  }
  const int w = box_.width();
  for (int j = b.y0; j < b.y1; ++j) {
    std::int32_t acc = 0;
    const std::size_t src = static_cast<std::size_t>(j - b.y0 + 1) * bw;
    const std::size_t dst = static_cast<std::size_t>(j - box_.y0) * w + (b.x0 - box_.x0);
    for (int i = 0; i < b.width(); ++i) {
      acc += walk_field_[src + i];
      if (acc != 0) {
        any_[dst + i] = 1;
        if (tuples) cls_[dst + i] = intern(cls_[dst + i], acc);
      }
    }
  }
}

namespace {

WalkSource span_source(std::span<const ClosedWalk> walks) {
  return [walks](std::size_t p) -> const ClosedWalk& { return walks[p]; };
}

}  // namespace

InsideMask TallyWorkspace::inside_mask(std::span<const ClosedWalk> walks) {
  prepare(walks.size(), span_source(walks));
  flood_outside();
  InsideMask m{box_, std::vector<std::uint8_t>(edges_.size())};
  for (std::size_t k = 0; k < edges_.size(); ++k) m.inside[k] = !(edges_[k] & kOutside);
  return m;
}

SectorTally TallyWorkspace::tally(std::span<const ClosedWalk> walks, const TallyOptions& options) {
  return tally(walks.size(), span_source(walks), options);
}

SectorTally TallyWorkspace::tally(std::size_t m, const WalkSource& walk_at, const TallyOptions& options) {
  if (m == 0) throw std::invalid_argument("tally: need at least one walk");
  prepare(m, walk_at);
  flood_outside();

  const bool tuples = options.tuple_classes;
  const bool single = m == 1 && !tuples;
  if (!single) {
    any_.assign(edges_.size(), 0);
    if (tuples) {
      cls_.assign(edges_.size(), 0);
      classes_.assign(1, {});
      canonical_.clear();
      canonical_.emplace(std::vector<int>{}, 0);
      transitions_.clear();
    }
    for (std::size_t p = 0; p < m; ++p) add_walk_field(walk_at(p), walk_boxes_[p], tuples);
  }

  SectorTally t;
  t.has_tuple_classes = tuples;
  std::array<long long, 2 * kDenseRange + 1> dense{};
  std::map<int, long long> sparse;
  std::vector<long long> by_class(tuples ? classes_.size() : 0, 0);
  long long mixed_zero = 0;
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    const std::int32_t n = total_[k];
    const bool nonzero = single ? n != 0 : any_[k] != 0;
    if (edges_[k] & kOutside) {
      if (nonzero) throw std::logic_error("tally: nonzero winding outside the frontier");
      continue;
    }
    ++t.s_total;
    if (n >= -kDenseRange && n <= kDenseRange)
      ++dense[static_cast<std::size_t>(n + kDenseRange)];
    else
      ++sparse[n];
    if (n == 0) {
      ++t.s_zero_inside;
      if (nonzero) ++mixed_zero;
    }
    if (!nonzero) ++t.s_all_zero_inside;
    if (tuples) ++by_class[static_cast<std::size_t>(cls_[k])];
  }
  for (int n = -kDenseRange; n <= kDenseRange; ++n)
    if (const long long c = dense[static_cast<std::size_t>(n + kDenseRange)]) t.by_total_n[n] = c;
  for (const auto& [n, c] : sparse) t.by_total_n[n] = c;
  if (tuples) {
    for (std::size_t c = 0; c < by_class.size(); ++c)
      if (by_class[c] > 0) {
        const auto& nz = classes_[c];
        t.by_tuple_class[TupleClass{nz, static_cast<int>(m - nz.size())}] = by_class[c];
      }
  }
  if (t.s_zero_inside - t.s_all_zero_inside != mixed_zero)
    throw std::logic_error("tally: S_0 - S_{0..0} differs from the mixed zero-sum count");
  t.verify();
  return t;
}

InsideMask inside_mask(std::span<const ClosedWalk> walks) {
  TallyWorkspace ws;
  return ws.inside_mask(walks);
}

SectorTally tally(std::span<const ClosedWalk> walks, const TallyOptions& options) {
  TallyWorkspace ws;
  return ws.tally(walks, options);
}

}  // namespace windsec::mc
