#include "cli/svg_overlay.hpp"

#include <iterator>

#include <fmt/format.h>

namespace sdn::cli {

namespace {

constexpr const char* kBackground = "#2b4c9b";
constexpr const char* kForeground = "#f1d54a";
constexpr const char* kDomain = "#fff27a";
constexpr const char* kCenter = "#d62020";
constexpr const char* kRadius = "#22a046";
constexpr const char* kSkeleton = "#1030ff";

}  // namespace

std::string render_overlay_svg(const BinaryImage& mask, const std::vector<SimilarityDomain>& domains, double a,
                               const SkeletonGraph* skeleton, const OverlayStyle& style) {
  std::string svg;
  auto out = std::back_inserter(svg);
  const int w = mask.width(), h = mask.height();
  fmt::format_to(out,
                 "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:g}\" height=\"{:g}\" "
                 "viewBox=\"-0.5 -0.5 {} {}\">\n",
                 w * style.pixel_scale, h * style.pixel_scale, w, h);
  svg += "<!-- generated by sdn -->\n";
  fmt::format_to(out, "<rect x=\"-0.5\" y=\"-0.5\" width=\"{}\" height=\"{}\" fill=\"{}\"/>\n", w, h, kBackground);

  // Foreground as horizontal runs, one rect per run.
  fmt::format_to(out, "<g fill=\"{}\" shape-rendering=\"crispEdges\">\n", kForeground);
  for (int r = 0; r < h; ++r) {
    int c = 0;
    while (c < w) {
      if (!mask.at(c, r)) {
        ++c;
        continue;
      }
      const int start = c;
      while (c < w && mask.at(c, r)) ++c;
      fmt::format_to(out, "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"1\"/>\n", start - 0.5, r - 0.5,
                     c - start);
    }
  }
  svg += "</g>\n";

  fmt::format_to(out, "<g fill=\"none\" stroke=\"{}\" stroke-width=\"0.15\">\n", kDomain);
  for (const auto& d : domains) {
    fmt::format_to(out, "<circle cx=\"{:.6g}\" cy=\"{:.6g}\" r=\"{:.6g}\"/>\n", d.center.col, d.center.row,
                   d.radius(a));
  }
  svg += "</g>\n";

  if (style.draw_radius_ticks) {
    fmt::format_to(out, "<g stroke=\"{}\" stroke-width=\"0.12\">\n", kRadius);
    for (const auto& d : domains) {
      fmt::format_to(out, "<line x1=\"{:.6g}\" y1=\"{:.6g}\" x2=\"{:.6g}\" y2=\"{:.6g}\"/>\n", d.center.col,
                     d.center.row, d.center.col + d.radius(a), d.center.row);
    }
    svg += "</g>\n";
  }

  if (skeleton != nullptr) {
    fmt::format_to(out, "<g stroke=\"{}\" stroke-width=\"0.4\" stroke-linecap=\"round\">\n", kSkeleton);
    for (const auto& [p, q] : skeleton->polyline()) {
      fmt::format_to(out, "<line x1=\"{:.6g}\" y1=\"{:.6g}\" x2=\"{:.6g}\" y2=\"{:.6g}\"/>\n", p.col, p.row, q.col,
                     q.row);
    }
    svg += "</g>\n";
  }

  fmt::format_to(out, "<g fill=\"{}\">\n", kCenter);
  for (const auto& d : domains) {
    fmt::format_to(out, "<circle cx=\"{:.6g}\" cy=\"{:.6g}\" r=\"0.3\"/>\n", d.center.col, d.center.row);
  }
  svg += "</g>\n</svg>\n";
  return svg;
}

}  // namespace sdn::cli
