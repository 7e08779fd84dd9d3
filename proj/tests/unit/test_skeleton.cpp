#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sdn/error.hpp"
#include "sdn/skeleton.hpp"
#include "sdn/trainer.hpp"
#include "synthetic_shapes.hpp"

namespace sdn {
namespace {

constexpr double kA = kDefaultRadiusScale;

SimilarityDomain fg(double col, double row, double radius) {
  return {{col, row}, radius * radius / kA, 1.0, Label::Foreground};
}

SdnModel model_of(std::vector<SimilarityDomain> domains) {
  return SdnModel(std::move(domains), ModelConstants{}, 200, 200);
}

const SdnModel& bar_model() {
  static const SdnModel m = train_image(testing::bar48x12(), TrainConfig{}).model;
  return m;
}

TEST(Histogram, OneCountPerBin) {
  const std::vector<double> values = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  const auto h = make_histogram(values, 10);
  ASSERT_EQ(h.bins(), 10u);
  EXPECT_DOUBLE_EQ(h.width(), 0.9);
  for (std::size_t k = 0; k < 10; ++k) {
    EXPECT_EQ(h.counts[k], 1u);
    EXPECT_NEAR(h.bin_centers[k], 1.45 + 0.9 * double(k), 1e-12);
  }
  EXPECT_EQ(h.total(), 10u);
}

TEST(Histogram, EqualValuesCollapseIntoOneBin) {
  const auto h = make_histogram({3.0, 3.0, 3.0, 3.0}, 10);
  EXPECT_EQ(h.total(), 4u);
  EXPECT_EQ(std::count(h.counts.begin(), h.counts.end(), 0u), 9);
  EXPECT_DOUBLE_EQ(h.lo, 2.5);
  EXPECT_DOUBLE_EQ(h.hi, 3.5);
}

TEST(Histogram, EdgesAreHalfOpenExceptLast) {
  const auto h = make_histogram({0.0, 1.0, 2.0, 4.0}, 4);
  EXPECT_EQ(h.counts, (std::vector<std::size_t>{1, 1, 1, 1}));
  EXPECT_EQ(h.bin_of(4.0), 3u);
  EXPECT_EQ(h.bin_of(3.0), 3u);
  EXPECT_EQ(h.bin_of(2.999), 2u);
}

TEST(Histogram, CountsOnlyForeground) {
  const auto m = model_of({fg(0, 0, 1), fg(50, 50, 2), {{9, 9}, 100.0, 1.0, Label::Background}});
  EXPECT_EQ(sigma_histogram(m, 5).total(), 2u);
}

TEST(HistogramTable, Layout) {
  const auto h = make_histogram({1, 2, 3, 4, 5, 6, 7, 8, 9, 10}, 10);
  const auto table = format_histogram_table(h);
  const auto newline = table.find('\n');
  ASSERT_NE(newline, std::string::npos);
  const auto first = table.substr(0, newline);
  const auto second = table.substr(newline + 1);
  EXPECT_EQ(first.rfind("Bin Center:", 0), 0u);
  EXPECT_EQ(second.rfind("Total Counts:", 0), 0u);
  for (const char* c : {"1.45", "2.35", "3.25", "9.55"}) EXPECT_NE(first.find(c), std::string::npos) << c;
  int ones = 0;
  for (std::size_t p = second.find(" 1"); p != std::string::npos; p = second.find(" 1", p + 1)) ++ones;
  EXPECT_EQ(ones, 10);
}

TEST(Threshold, Examples) {
  const auto m = model_of({fg(0, 0, 1), fg(10, 0, 3), fg(20, 0, 2), {{9, 9}, 100.0, 1.0, Label::Background}});
  EXPECT_EQ(threshold_domains(m, -1.0).size(), 3u);
  const double max_sigma = 9.0 / kA;
  EXPECT_TRUE(threshold_domains(m, max_sigma).empty());
  const auto kept = threshold_domains(m, 0.5);
  ASSERT_EQ(kept.size(), 2u);
  EXPECT_GE(kept[0].sigma_sq, kept[1].sigma_sq);
}

TEST(Threshold, LongTailedSpectrum) {
  const std::vector<double> centers = {9.93, 29.12, 48.32, 67.51, 86.71, 105.90, 125.09, 144.29, 163.48, 182.68};
  const std::vector<int> counts = {591, 18, 7, 3, 2, 4, 0, 0, 1, 3};
  const double quarter = (centers[1] - centers[0]) / 4.0;
  std::vector<SimilarityDomain> domains;
  for (std::size_t k = 0; k < centers.size(); ++k) {
    for (int i = 0; i < counts[k]; ++i) {
      domains.push_back({{double(domains.size()), 0.0}, centers[k] + quarter, 1.0, Label::Foreground});
    }
  }
  const auto m = model_of(std::move(domains));
  EXPECT_EQ(threshold_domains(m, 29.12).size(), 38u);
  EXPECT_EQ(sigma_histogram(m, 10).counts, (std::vector<std::size_t>{591, 18, 7, 3, 2, 4, 0, 0, 1, 3}));
}

TEST(Suppression, Examples) {
  const auto nested = suppress_nested({fg(0, 0, 5), fg(0, 0, 2)}, kA);
  ASSERT_EQ(nested.size(), 1u);
  EXPECT_NEAR(nested[0].radius(kA), 5.0, 1e-12);

  EXPECT_EQ(suppress_nested({fg(0, 0, 5), fg(7, 0, 2)}, kA).size(), 2u);

  const auto row = suppress_nested({fg(0, 0, 5), fg(4, 0, 5), fg(8, 0, 5)}, kA);
  ASSERT_EQ(row.size(), 2u);
  EXPECT_EQ(row[0].center, (Point2{0, 0}));
  EXPECT_EQ(row[1].center, (Point2{8, 0}));
}

TEST(BuildSkeleton, SmallCases) {
  const auto one = build_skeleton({fg(3, 3, 2)}, kA);
  EXPECT_EQ(one.nodes.size(), 1u);
  EXPECT_TRUE(one.edges.empty());

  const auto two = build_skeleton({fg(0, 0, 3), fg(5, 0, 3)}, kA);
  ASSERT_EQ(two.edges.size(), 1u);
  EXPECT_EQ(two.edges[0].kind, EdgeKind::Overlap);
}

TEST(BuildSkeleton, DistantClustersGetOneFallbackEdge) {
  std::vector<SimilarityDomain> domains;
  for (int i = 0; i < 4; ++i) domains.push_back(fg(10.0 + 3.0 * i, 10.0 + (i % 2), 2.0));
  for (int i = 0; i < 3; ++i) domains.push_back(fg(115.0 + 3.0 * i, 10.0, 2.0));
  const auto g = build_skeleton(domains, kA);

  std::vector<double> col, row, radius;
  for (const auto& n : g.nodes) {
    col.push_back(n.center.col);
    row.push_back(n.center.row);
    radius.push_back(n.radius);
  }
  const auto labels = oracle::overlap_components(col, row, radius);
  const std::size_t clusters = *std::max_element(labels.begin(), labels.end()) + 1;
  ASSERT_EQ(clusters, 2u);

  std::size_t overlap = 0, fallback = 0;
  for (const auto& e : g.edges) {
    const double reach = g.nodes[e.from].radius + g.nodes[e.to].radius;
    if (e.kind == EdgeKind::Overlap) {
      ++overlap;
      EXPECT_LE(squared_distance(g.nodes[e.from].center, g.nodes[e.to].center), reach * reach);
    } else {
      ++fallback;
      EXPECT_NE(labels[e.from], labels[e.to]);
    }
  }
  std::size_t expected_overlap = 0;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < g.nodes.size(); ++j) {
      const double reach = radius[i] + radius[j];
      if (squared_distance(g.nodes[i].center, g.nodes[j].center) <= reach * reach) ++expected_overlap;
    }
  }
  EXPECT_EQ(overlap, expected_overlap);
  EXPECT_EQ(fallback, 1u);
  EXPECT_EQ(g.component_count(), 1u);
}

TEST(BuildSkeleton, NoNodeInsideAnother) {
  const auto m = bar_model();
  const auto g = build_skeleton(threshold_domains(m, -1.0), kA);
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    for (std::size_t j = 0; j < g.nodes.size(); ++j) {
      if (i == j) continue;
      const double r = g.nodes[i].radius;
      EXPECT_GE(squared_distance(g.nodes[i].center, g.nodes[j].center), r * r);
    }
  }
  EXPECT_EQ(g.component_count(), 1u);
}

TEST(ExtractSkeleton, BarSpansTheBar) {
  const auto g = extract_skeleton(bar_model(), AutoThreshold{});
  const testing::BarGeometry bar;
  ASSERT_GE(g.nodes.size(), 2u);
  EXPECT_EQ(g.component_count(), 1u);
  double lo = 1e9, hi = -1e9;
  for (const auto& n : g.nodes) {
    EXPECT_GE(n.center.col, bar.col0);
    EXPECT_LE(n.center.col, bar.col1);
    EXPECT_GE(n.center.row, bar.row0);
    EXPECT_LE(n.center.row, bar.row1);
    EXPECT_EQ(classify(bar_model(), n.center), Label::Foreground);
    lo = std::min(lo, n.center.col);
    hi = std::max(hi, n.center.col);
  }
  EXPECT_GE(hi - lo, 0.8 * bar.length());
}

TEST(ExtractSkeleton, NodeCountMonotoneInThreshold) {
  const auto h = sigma_histogram(bar_model(), 10);
  std::size_t previous = std::numeric_limits<std::size_t>::max();
  for (std::size_t bin = 0; bin < h.bins(); ++bin) {
    if (threshold_domains(bar_model(), std::nextafter(h.lower_edge(bin), -1e300)).empty()) continue;
    const auto g = extract_skeleton(bar_model(), BinThreshold{bin});
    EXPECT_LE(g.nodes.size(), previous);
    previous = g.nodes.size();
  }
}

TEST(ExtractSkeleton, DiskCollapsesToCenter) {
  const auto m = train_image(testing::disk32(), TrainConfig{}).model;
  const auto g = extract_skeleton(m, AutoThreshold{});
  EXPECT_LE(g.nodes.size(), 3u);
  for (const auto& n : g.nodes) EXPECT_LE(squared_distance(n.center, {15.5, 15.5}), 4.0 * 4.0);
}

TEST(ExtractSkeleton, ThresholdAboveMaximumIsEmpty) {
  EXPECT_THROW(extract_skeleton(bar_model(), SigmaThreshold{1e9}), EmptySkeletonError);
}

TEST(FormatSkeleton, Lines) {
  const auto g = build_skeleton({fg(0, 0, 3), fg(5, 0, 3)}, kA);
  const auto text = format_skeleton(g);
  EXPECT_NE(text.find("NODE 0 "), std::string::npos);
  EXPECT_NE(text.find("NODE 1 "), std::string::npos);
  EXPECT_NE(text.find("EDGE 0 1 overlap"), std::string::npos);
}

}  // namespace
}  // namespace sdn
