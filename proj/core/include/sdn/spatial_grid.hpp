#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "sdn/point.hpp"

namespace sdn {

// Uniform bucket grid over a fixed 2-D point set answering exact nearest
// neighbour queries by expanding square rings of cells.
class PointGrid {
 public:
  PointGrid() = default;
  explicit PointGrid(std::span<const Point2> points);

  struct Hit {
    std::size_t index;
    double squared_distance;
  };

  // Closest indexed point to `query`; ties resolve to the lowest index.
  std::optional<Hit> nearest(const Point2& query) const;

  std::size_t size() const noexcept { return points_.size(); }

 private:
  long cell_coord(double value, double origin) const;
  std::size_t cell_index(long cx, long cy) const;

  std::vector<Point2> points_;
  double origin_col_ = 0.0;
  double origin_row_ = 0.0;
  double cell_size_ = 1.0;
  long cells_x_ = 0;
  long cells_y_ = 0;
  std::vector<std::size_t> cell_start_;  // CSR layout, size cells+1
  std::vector<std::size_t> cell_items_;
};

}  // namespace sdn
