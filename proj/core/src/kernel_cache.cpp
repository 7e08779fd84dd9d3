#include "sdn/kernel_cache.hpp"

#include <algorithm>

namespace sdn {

KernelRowCache::KernelRowCache(std::size_t n, std::size_t budget_bytes, RowFiller fill)
    : n_(n), fill_(std::move(fill)), where_(n), cached_(n, false) {
  const std::size_t row_bytes = std::max<std::size_t>(n, 1) * sizeof(double);
  capacity_ = std::clamp<std::size_t>(budget_bytes / row_bytes, 2, std::max<std::size_t>(n, 2));
}

std::span<const double> KernelRowCache::row(std::size_t i) {
  if (cached_[i]) {
    ++hits_;
    lru_.splice(lru_.begin(), lru_, where_[i]);
    return lru_.front().values;
  }
  ++misses_;
  if (lru_.size() >= capacity_) {
    // Recycle the oldest buffer.
    auto oldest = std::prev(lru_.end());
    cached_[oldest->row] = false;
    oldest->row = i;
    lru_.splice(lru_.begin(), lru_, oldest);
  } else {
    lru_.push_front(Entry{i, std::vector<double>(n_)});
  }
  where_[i] = lru_.begin();
  cached_[i] = true;
  fill_(i, lru_.front().values);
  return lru_.front().values;
}

std::pair<std::span<const double>, std::span<const double>> KernelRowCache::rows(std::size_t i, std::size_t j) {
  // Touch i first so fetching j (which may evict the LRU tail) cannot drop it.
  row(i);
  const auto rj = row(j);
  return {where_[i]->values, rj};
}

}  // namespace sdn
