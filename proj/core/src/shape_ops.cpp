#include "sdn/shape_ops.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <fmt/format.h>

#include "disjoint_sets.hpp"
#include "sdn/error.hpp"
#include "text_fields.hpp"

namespace sdn {

std::vector<DomainGroup> group_domains(const SdnModel& model, double a) {
  if (!(a > 0.0)) throw ValidationError("radius scale a must be positive");
  const auto fg = foreground_domains(model);
  if (fg.empty()) throw ValidationError("model has no foreground domains to group");

  detail::DisjointSets sets(fg.size());
  for (std::size_t i = 0; i < fg.size(); ++i) {
    const double ri = fg[i].radius(a);
    for (std::size_t j = i + 1; j < fg.size(); ++j) {
      const double reach = ri + fg[j].radius(a);
      if (squared_distance(fg[i].center, fg[j].center) <= reach * reach) sets.unite(i, j);
    }
  }

  // Roots are the smallest member index, so ordered map keys give the
  // required numbering.
  std::map<std::size_t, DomainGroup> by_root;
  for (std::size_t i = 0; i < fg.size(); ++i) by_root[sets.find(i)].member_ids.push_back(i);

  std::vector<DomainGroup> groups;
  groups.reserve(by_root.size());
  for (auto& [root, group] : by_root) {
    Point2 sum;
    for (auto id : group.member_ids) sum = sum + fg[id].center;
    group.centroid = (1.0 / double(group.member_ids.size())) * sum;
    groups.push_back(std::move(group));
  }
  return groups;
}

SdnModel transform_groups(const SdnModel& model, std::span<const GroupTransform> transforms, double a) {
  const auto groups = group_domains(model, a);
  auto fg = foreground_domains(model);

  std::set<std::size_t> seen;
  for (const auto& t : transforms) {
    if (t.group_id >= groups.size()) {
      throw ValidationError(fmt::format("unknown group {} (model has {} groups)", t.group_id, groups.size()));
    }
    if (!(t.scale > 0.0)) throw ValidationError(fmt::format("group {} scale must be positive", t.group_id));
    if (!seen.insert(t.group_id).second) {
      throw ValidationError(fmt::format("group {} transformed more than once", t.group_id));
    }
  }

  for (const auto& t : transforms) {
    const auto& group = groups[t.group_id];
    for (auto id : group.member_ids) {
      auto& d = fg[id];
      d.center = group.centroid + t.scale * (d.center - group.centroid) + t.shift;
      d.sigma_sq *= t.scale * t.scale;
    }
  }
  return SdnModel(std::move(fg), model.constants(), model.source_width(), model.source_height());
}

SdnModel transform_group(const SdnModel& model, const GroupTransform& transform, double a) {
  return transform_groups(model, std::span(&transform, 1), a);
}

BinaryImage render_one_class(const SdnModel& model, int width, int height, double a) {
  if (model.foreground_count() == 0) throw ValidationError("one-class rendering needs foreground domains");
  BinaryImage out(width, height);
  for (int row = 0; row < height; ++row) {
    for (int col = 0; col < width; ++col) {
      out.set(col, row, one_class_classify(model, {double(col), double(row)}, a) == Label::Foreground);
    }
  }
  return out;
}

std::vector<GroupTransform> parse_transform_script(std::string_view text) {
  std::vector<GroupTransform> out;
  const auto lines = detail::split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    const auto f = detail::split_fields(lines[i]);
    if (f.empty() || f[0].front() == '#') continue;
    if (f.size() != 7 || f[0] != "GROUP" || f[2] != "SCALE" || f[4] != "SHIFT") {
      throw FormatError(fmt::format("line {}: expected 'GROUP <id> SCALE <s> SHIFT <dx> <dy>'", line_no));
    }
    const long id = detail::parse_integer(f[1], "group id", line_no);
    if (id < 0) throw FormatError(fmt::format("line {}: group id must be non-negative", line_no));
    GroupTransform t;
    t.group_id = static_cast<std::size_t>(id);
    t.scale = detail::parse_real(f[3], "scale", line_no);
    if (!(t.scale > 0.0)) throw FormatError(fmt::format("line {}: scale must be positive", line_no));
    t.shift = {detail::parse_real(f[5], "dx", line_no), detail::parse_real(f[6], "dy", line_no)};
    out.push_back(t);
  }
  return out;
}

}  // namespace sdn
