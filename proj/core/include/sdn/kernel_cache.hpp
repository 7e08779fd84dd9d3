#pragma once

#include <cstddef>
#include <functional>
#include <list>
#include <span>
#include <vector>

namespace sdn {

// Least-recently-used cache of kernel matrix rows. Rows are produced on
// demand by `fill` and evicted once the byte budget is exhausted. At least
// two rows are always kept so an SMO pair can be held simultaneously.
class KernelRowCache {
 public:
  using RowFiller = std::function<void(std::size_t row, std::span<double> out)>;

  KernelRowCache(std::size_t n, std::size_t budget_bytes, RowFiller fill);

  // The returned span stays valid until the next call to row().
  std::span<const double> row(std::size_t i);

  // Fetches two rows at once; both spans stay valid until the next call.
  std::pair<std::span<const double>, std::span<const double>> rows(std::size_t i, std::size_t j);

  std::size_t capacity_rows() const noexcept { return capacity_; }
  std::size_t hits() const noexcept { return hits_; }
  std::size_t misses() const noexcept { return misses_; }

 private:
  struct Entry {
    std::size_t row;
    std::vector<double> values;
  };

  std::size_t n_;
  std::size_t capacity_;
  RowFiller fill_;
  std::list<Entry> lru_;  // front = most recent
  std::vector<std::list<Entry>::iterator> where_;
  std::vector<bool> cached_;
  std::size_t hits_ = 0;
  std::size_t misses_ = 0;
};

}  // namespace sdn
