#pragma once

#include <string>
#include <vector>

#include "sdn/image.hpp"
#include "sdn/model.hpp"
#include "sdn/skeleton.hpp"

namespace sdn::cli {

struct OverlayStyle {
  double pixel_scale = 8.0;  // SVG user units per image pixel
  bool draw_radius_ticks = true;
};

// Mask (blue background, yellow foreground), similarity domain circles,
// red centers, green radius ticks and, when given, the blue skeleton.
std::string render_overlay_svg(const BinaryImage& mask, const std::vector<SimilarityDomain>& domains,
                               double a, const SkeletonGraph* skeleton, const OverlayStyle& style = {});

}  // namespace sdn::cli
