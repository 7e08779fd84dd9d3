#include "sdn/spatial_grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sdn {

PointGrid::PointGrid(std::span<const Point2> points) : points_(points.begin(), points.end()) {
  if (points_.empty()) return;

  double min_c = points_[0].col, max_c = min_c, min_r = points_[0].row, max_r = min_r;
  for (const auto& p : points_) {
    min_c = std::min(min_c, p.col);
    max_c = std::max(max_c, p.col);
    min_r = std::min(min_r, p.row);
    max_r = std::max(max_r, p.row);
  }
  origin_col_ = min_c;
  origin_row_ = min_r;

  // Roughly one point per cell for uniformly spread data.
  const double extent = std::max({max_c - min_c, max_r - min_r, 1e-9});
  const double area = std::max((max_c - min_c) * (max_r - min_r), extent * extent * 1e-3);
  cell_size_ = std::max(std::sqrt(area / double(points_.size())), extent * 1e-4);
  cells_x_ = std::min<long>(cell_coord(max_c, min_c) + 1, 1 << 14);
  cells_y_ = std::min<long>(cell_coord(max_r, min_r) + 1, 1 << 14);
  if (cells_x_ == (1 << 14) || cells_y_ == (1 << 14)) {
    cell_size_ = extent / double((1 << 14) - 1);
    cells_x_ = cell_coord(max_c, min_c) + 1;
    cells_y_ = cell_coord(max_r, min_r) + 1;
  }

  const std::size_t cells = std::size_t(cells_x_) * std::size_t(cells_y_);
  cell_start_.assign(cells + 1, 0);
  std::vector<std::size_t> owner(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) {
    owner[i] = cell_index(cell_coord(points_[i].col, origin_col_), cell_coord(points_[i].row, origin_row_));
    ++cell_start_[owner[i] + 1];
  }
  for (std::size_t c = 0; c < cells; ++c) cell_start_[c + 1] += cell_start_[c];
  cell_items_.resize(points_.size());
  std::vector<std::size_t> fill(cell_start_.begin(), cell_start_.end() - 1);
  for (std::size_t i = 0; i < points_.size(); ++i) cell_items_[fill[owner[i]]++] = i;
}

long PointGrid::cell_coord(double value, double origin) const {
  return static_cast<long>(std::floor((value - origin) / cell_size_));
}

std::size_t PointGrid::cell_index(long cx, long cy) const {
  return std::size_t(cy) * std::size_t(cells_x_) + std::size_t(cx);
}

std::optional<PointGrid::Hit> PointGrid::nearest(const Point2& query) const {
  if (points_.empty()) return std::nullopt;

  const long qx = std::clamp<long>(cell_coord(query.col, origin_col_), 0, cells_x_ - 1);
  const long qy = std::clamp<long>(cell_coord(query.row, origin_row_), 0, cells_y_ - 1);
  // Queries outside the grid start from the nearest border cell.
  const double out_c = std::max({0.0, origin_col_ - query.col,
                                 query.col - (origin_col_ + double(cells_x_) * cell_size_)});
  const double out_r = std::max({0.0, origin_row_ - query.row,
                                 query.row - (origin_row_ + double(cells_y_) * cell_size_)});
  const double outside = std::hypot(out_c, out_r);

  Hit best{0, std::numeric_limits<double>::infinity()};
  auto scan_cell = [&](long cx, long cy) {
    if (cx < 0 || cx >= cells_x_ || cy < 0 || cy >= cells_y_) return;
    const std::size_t c = cell_index(cx, cy);
    for (std::size_t k = cell_start_[c]; k < cell_start_[c + 1]; ++k) {
      const std::size_t i = cell_items_[k];
      const double d2 = squared_distance(points_[i], query);
      if (d2 < best.squared_distance || (d2 == best.squared_distance && i < best.index)) {
        best = {i, d2};
      }
    }
  };

  const long max_ring = std::max(cells_x_, cells_y_);
  for (long ring = 0; ring <= max_ring; ++ring) {
    // Every point in this ring or beyond is at least this far away.
    if (ring > 0) {
      const double gap = double(ring - 1) * cell_size_;
      if (outside * outside + gap * gap > best.squared_distance) break;
    }
    if (ring == 0) {
      scan_cell(qx, qy);
      continue;
    }
    for (long cx = qx - ring; cx <= qx + ring; ++cx) {
      scan_cell(cx, qy - ring);
      scan_cell(cx, qy + ring);
    }
    for (long cy = qy - ring + 1; cy <= qy + ring - 1; ++cy) {
      scan_cell(qx - ring, cy);
      scan_cell(qx + ring, cy);
    }
  }
  return best;
}

}  // namespace sdn
