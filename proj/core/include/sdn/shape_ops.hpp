#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "sdn/image.hpp"
#include "sdn/model.hpp"

namespace sdn {

// One object: foreground domains linked by chains of overlapping domains.
struct DomainGroup {
  std::vector<std::size_t> member_ids;  // indices into foreground_domains(model)
  Point2 centroid;                      // unweighted mean of member centers
};

struct GroupTransform {
  std::size_t group_id = 0;
  double scale = 1.0;
  Point2 shift;
};

// Connected components of the overlap graph over foreground domains with
// radii sqrt(a * sigma_sq). Groups are numbered by their smallest member.
std::vector<DomainGroup> group_domains(const SdnModel& model, double a);

// Scales each listed group about its centroid, then shifts it:
// c -> centroid + scale * (c - centroid) + shift, sigma_sq -> scale^2 sigma_sq.
// The result keeps only foreground domains.
SdnModel transform_groups(const SdnModel& model, std::span<const GroupTransform> transforms, double a);
SdnModel transform_group(const SdnModel& model, const GroupTransform& transform, double a);

// Per-pixel one-class rule over a width x height canvas.
BinaryImage render_one_class(const SdnModel& model, int width, int height, double a);

// Lines of the form "GROUP <id> SCALE <s> SHIFT <dx> <dy>". Blank lines and
// lines starting with '#' are ignored.
std::vector<GroupTransform> parse_transform_script(std::string_view text);

}  // namespace sdn
