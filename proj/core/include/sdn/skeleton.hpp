#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "sdn/model.hpp"
#include "sdn/point.hpp"

namespace sdn {

inline constexpr std::size_t kDefaultBins = 10;
inline constexpr std::size_t kDefaultMaxSkeletonNodes = 25;

// Uniform-width histogram of foreground sigma_sq values over [lo, hi].
// Bins are half-open [lo_k, hi_k) except the last, which is closed.
struct SigmaHistogram {
  double lo = 0.0;
  double hi = 0.0;
  std::vector<double> bin_centers;
  std::vector<std::size_t> counts;

  std::size_t bins() const noexcept { return counts.size(); }
  double width() const noexcept { return (hi - lo) / double(bins()); }
  double lower_edge(std::size_t bin) const noexcept { return lo + width() * double(bin); }
  std::size_t bin_of(double sigma_sq) const noexcept;
  std::size_t total() const noexcept;
};

// Histogram of raw values; all-equal input collapses to the range
// [v - 1/2, v + 1/2] so no bin has zero width.
SigmaHistogram make_histogram(const std::vector<double>& values, std::size_t bins);
SigmaHistogram sigma_histogram(const SdnModel& model, std::size_t bins = kDefaultBins);

// Two-row layout: "Bin Center:" and "Total Counts:".
std::string format_histogram_table(const SigmaHistogram& histogram);

// Foreground domains with sigma_sq strictly above the threshold, largest
// sigma_sq first (ties keep model order).
std::vector<SimilarityDomain> threshold_domains(const SdnModel& model, double sigma_sq_min);

// Greedy pass in the given (descending sigma_sq) order: a domain is dropped
// when its center lies strictly inside the radius sqrt(a * sigma_sq) of an
// already accepted domain.
std::vector<SimilarityDomain> suppress_nested(const std::vector<SimilarityDomain>& domains, double a);

enum class EdgeKind { Overlap, ClosestFallback };

std::string_view to_string(EdgeKind kind) noexcept;

struct SkeletonNode {
  Point2 center;
  double radius = 0.0;
  double sigma_sq = 0.0;
};

struct SkeletonEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  EdgeKind kind = EdgeKind::Overlap;
};

struct SkeletonGraph {
  std::vector<SkeletonNode> nodes;
  std::vector<SkeletonEdge> edges;
  double threshold = 0.0;  // sigma_sq cut that produced the node set

  std::size_t component_count() const;
  // Straight segments between connected centers, in edge order.
  std::vector<std::pair<Point2, Point2>> polyline() const;
};

// Suppresses nested domains, then links every pair of overlapping domains
// (|c_i - c_j| <= r_i + r_j) and joins remaining components by the globally
// shortest center-to-center links until one component is left.
SkeletonGraph build_skeleton(const std::vector<SimilarityDomain>& domains, double a);

struct AutoThreshold {
  std::size_t max_nodes = kDefaultMaxSkeletonNodes;
};
struct BinThreshold {
  std::size_t bin = 0;
};
struct SigmaThreshold {
  double sigma_sq_min = 0.0;
};
using ThresholdChoice = std::variant<AutoThreshold, BinThreshold, SigmaThreshold>;

// Histogram -> threshold -> suppression -> graph. A bin choice keeps that
// bin and every larger one. Automatic mode scans from the largest bin
// down and keeps the lowest cut leaving between 2 and max_nodes nodes
// (falling back to 1 node when no cut leaves 2).
SkeletonGraph extract_skeleton(const SdnModel& model, const ThresholdChoice& choice,
                               std::size_t bins = kDefaultBins, double a = kDefaultRadiusScale);

// NODE <id> <col> <row> <radius> / EDGE <id1> <id2> <overlap|closest>
std::string format_skeleton(const SkeletonGraph& graph);

}  // namespace sdn
