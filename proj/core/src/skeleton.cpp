#include "sdn/skeleton.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <tuple>

#include <fmt/format.h>

#include "disjoint_sets.hpp"
#include "sdn/error.hpp"

namespace sdn {

std::size_t SigmaHistogram::bin_of(double sigma_sq) const noexcept {
  if (!(sigma_sq > lo)) return 0;
  const auto k = static_cast<std::size_t>(std::floor((sigma_sq - lo) / width()));
  return std::min(k, bins() - 1);
}

std::size_t SigmaHistogram::total() const noexcept {
  std::size_t sum = 0;
  for (auto c : counts) sum += c;
  return sum;
}

SigmaHistogram make_histogram(const std::vector<double>& values, std::size_t bins) {
  if (bins == 0) throw ValidationError("histogram needs at least one bin");
  if (values.empty()) throw ValidationError("histogram of an empty set of shape parameters");
  const auto [mn, mx] = std::minmax_element(values.begin(), values.end());
  SigmaHistogram h;
  h.lo = *mn;
  h.hi = *mx;
  if (h.hi == h.lo) {
    h.lo -= 0.5;
    h.hi += 0.5;
  }
  h.counts.assign(bins, 0);
  h.bin_centers.resize(bins);
  for (std::size_t k = 0; k < bins; ++k) h.bin_centers[k] = h.lo + h.width() * (double(k) + 0.5);
  for (double v : values) ++h.counts[h.bin_of(v)];
  return h;
}

SigmaHistogram sigma_histogram(const SdnModel& model, std::size_t bins) {
  std::vector<double> values;
  for (const auto& d : model.domains()) {
    if (d.label == Label::Foreground) values.push_back(d.sigma_sq);
  }
  if (values.empty()) throw ValidationError("model has no foreground domains to bin");
  return make_histogram(values, bins);
}

std::string format_histogram_table(const SigmaHistogram& histogram) {
  std::string centers = fmt::format("{:<14}", "Bin Center:");
  std::string counts = fmt::format("{:<14}", "Total Counts:");
  for (std::size_t k = 0; k < histogram.bins(); ++k) {
    const std::string c = fmt::format("{:.2f}", histogram.bin_centers[k]);
    const std::size_t w = std::max<std::size_t>(c.size(), 6) + 2;
    centers += fmt::format("{:>{}}", c, w);
    counts += fmt::format("{:>{}}", histogram.counts[k], w);
  }
  return centers + "\n" + counts + "\n";
}

std::vector<SimilarityDomain> threshold_domains(const SdnModel& model, double sigma_sq_min) {
  std::vector<SimilarityDomain> out;
  for (const auto& d : model.domains()) {
    if (d.label == Label::Foreground && d.sigma_sq > sigma_sq_min) out.push_back(d);
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.sigma_sq > r.sigma_sq; });
  return out;
}

std::vector<SimilarityDomain> suppress_nested(const std::vector<SimilarityDomain>& domains, double a) {
  if (!(a > 0.0)) throw ValidationError("radius scale a must be positive");
  std::vector<SimilarityDomain> kept;
  for (const auto& d : domains) {
    const bool nested = std::any_of(kept.begin(), kept.end(), [&](const SimilarityDomain& k) {
      return squared_distance(d.center, k.center) < a * k.sigma_sq;
    });
    if (!nested) kept.push_back(d);
  }
  return kept;
}

std::string_view to_string(EdgeKind kind) noexcept {
  return kind == EdgeKind::Overlap ? "overlap" : "closest";
}

std::size_t SkeletonGraph::component_count() const {
  detail::DisjointSets sets(nodes.size());
  for (const auto& e : edges) sets.unite(e.from, e.to);
  return sets.components();
}

std::vector<std::pair<Point2, Point2>> SkeletonGraph::polyline() const {
  std::vector<std::pair<Point2, Point2>> segments;
  segments.reserve(edges.size());
  for (const auto& e : edges) segments.emplace_back(nodes[e.from].center, nodes[e.to].center);
  return segments;
}

SkeletonGraph build_skeleton(const std::vector<SimilarityDomain>& domains, double a) {
  if (domains.empty()) throw ValidationError("skeleton needs at least one similarity domain");
  auto ordered = domains;
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto& l, const auto& r) { return l.sigma_sq > r.sigma_sq; });
  const auto kept = suppress_nested(ordered, a);

  SkeletonGraph graph;
  for (const auto& d : kept) graph.nodes.push_back({d.center, d.radius(a), d.sigma_sq});

  const std::size_t n = graph.nodes.size();
  detail::DisjointSets sets(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double reach = graph.nodes[i].radius + graph.nodes[j].radius;
      if (squared_distance(graph.nodes[i].center, graph.nodes[j].center) <= reach * reach) {
        graph.edges.push_back({i, j, EdgeKind::Overlap});
        sets.unite(i, j);
      }
    }
  }

  if (sets.components() > 1) {
    std::vector<std::tuple<double, std::size_t, std::size_t>> links;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (sets.find(i) != sets.find(j)) {
          links.emplace_back(squared_distance(graph.nodes[i].center, graph.nodes[j].center), i, j);
        }
      }
    }
    std::sort(links.begin(), links.end());
    for (const auto& [d2, i, j] : links) {
      if (sets.components() == 1) break;
      if (sets.unite(i, j)) graph.edges.push_back({i, j, EdgeKind::ClosestFallback});
    }
  }
  return graph;
}

namespace {

double cut_for_bin(const SigmaHistogram& h, std::size_t bin) {
  return std::nextafter(h.lower_edge(bin), -std::numeric_limits<double>::infinity());
}

}  // namespace

SkeletonGraph extract_skeleton(const SdnModel& model, const ThresholdChoice& choice, std::size_t bins, double a) {
  const SigmaHistogram histogram = sigma_histogram(model, bins);

  double cut = 0.0;
  if (const auto* manual = std::get_if<SigmaThreshold>(&choice)) {
    cut = manual->sigma_sq_min;
  } else if (const auto* bin = std::get_if<BinThreshold>(&choice)) {
    if (bin->bin >= histogram.bins()) {
      throw ValidationError(fmt::format("bin {} out of range (histogram has {} bins)", bin->bin, histogram.bins()));
    }
    cut = cut_for_bin(histogram, bin->bin);
  } else {
    const auto max_nodes = std::get<AutoThreshold>(choice).max_nodes;
    if (max_nodes == 0) throw ValidationError("automatic threshold needs max_nodes >= 1");
    std::optional<double> best_pair, best_single;
    double fewest_cut = cut_for_bin(histogram, histogram.bins() - 1);
    // Node counts only grow as the cut drops, so the lowest admissible cut
    // is the last one seen while scanning downward.
    for (std::size_t b = histogram.bins(); b-- > 0;) {
      const double c = cut_for_bin(histogram, b);
      const std::size_t nodes = suppress_nested(threshold_domains(model, c), a).size();
      if (nodes > max_nodes) break;
      if (nodes >= 2) best_pair = c;
      if (nodes >= 1) best_single = c;
    }
    cut = best_pair ? *best_pair : best_single ? *best_single : fewest_cut;
  }

  const auto domains = threshold_domains(model, cut);
  if (domains.empty()) {
    throw EmptySkeletonError(fmt::format(
        "no foreground domain has sigma_sq above {:.6g} (largest is {:.6g}); lower the threshold", cut,
        histogram.hi));
  }
  SkeletonGraph graph = build_skeleton(domains, a);
  graph.threshold = cut;
  return graph;
}

std::string format_skeleton(const SkeletonGraph& graph) {
  std::string out;
  for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
    const auto& n = graph.nodes[i];
    fmt::format_to(std::back_inserter(out), "NODE {} {:.9g} {:.9g} {:.9g}\n", i, n.center.col, n.center.row,
                   n.radius);
  }
  for (const auto& e : graph.edges) {
    fmt::format_to(std::back_inserter(out), "EDGE {} {} {}\n", e.from, e.to, to_string(e.kind));
  }
  return out;
}

}  // namespace sdn
