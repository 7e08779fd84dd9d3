#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>

#include <fmt/format.h>

#include "sdn/error.hpp"
#include "sdn/model.hpp"
#include "text_fields.hpp"

namespace sdn {
namespace detail {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
    const std::size_t start = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' && line[pos] != '\r') ++pos;
    if (pos > start) out.push_back(line.substr(start, pos - start));
  }
  return out;
}

double parse_real(std::string_view token, std::string_view what, std::size_t line_no) {
  double value = 0.0;
  const char* first = token.data();
  if (!token.empty() && token.front() == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || !std::isfinite(value)) {
    throw FormatError(fmt::format("line {}: invalid {} '{}'", line_no, what, token));
  }
  return value;
}

long parse_integer(std::string_view token, std::string_view what, std::size_t line_no) {
  long value = 0;
  const char* first = token.data();
  if (!token.empty() && token.front() == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw FormatError(fmt::format("line {}: invalid {} '{}'", line_no, what, token));
  }
  return value;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

}  // namespace detail

std::string format_model(const SdnModel& model) {
  const auto& k = model.constants();
  std::string out = fmt::format("SDN v1 {} {} {:.9g} {:.9g} {:.9g}\n", model.source_width(),
                                model.source_height(), k.T, k.C, k.a);
  for (const auto& d : model.domains()) {
    fmt::format_to(std::back_inserter(out), "{:.9g} {:.9g} {:.9g} {:.9g} {}\n", d.center.col, d.center.row,
                   d.sigma_sq, d.alpha, static_cast<int>(d.label));
  }
  return out;
}

SdnModel parse_model(std::string_view text) {
  using detail::parse_integer;
  using detail::parse_real;

  const auto lines = detail::split_lines(text);
  if (lines.empty()) throw FormatError("line 1: model file is empty");

  const auto header = detail::split_fields(lines[0]);
  if (header.size() != 7 || header[0] != "SDN") {
    throw FormatError("line 1: expected header 'SDN v1 <width> <height> <T> <C> <a>'");
  }
  if (header[1] != "v1") throw FormatError(fmt::format("line 1: unsupported model version '{}'", header[1]));
  const long width = parse_integer(header[2], "width", 1);
  const long height = parse_integer(header[3], "height", 1);
  ModelConstants constants{parse_real(header[4], "T", 1), parse_real(header[5], "C", 1),
                           parse_real(header[6], "a", 1)};

  std::vector<SimilarityDomain> domains;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    const auto fields = detail::split_fields(lines[i]);
    if (fields.empty()) continue;
    if (fields.size() != 5) {
      throw FormatError(fmt::format("line {}: expected '<col> <row> <sigma_sq> <alpha> <label>'", line_no));
    }
    SimilarityDomain d;
    d.center = {parse_real(fields[0], "col", line_no), parse_real(fields[1], "row", line_no)};
    d.sigma_sq = parse_real(fields[2], "sigma_sq", line_no);
    d.alpha = parse_real(fields[3], "alpha", line_no);
    const long label = parse_integer(fields[4], "label", line_no);
    if (label != 1 && label != -1) throw FormatError(fmt::format("line {}: label must be 1 or -1", line_no));
    if (!(d.sigma_sq > 0.0)) throw FormatError(fmt::format("line {}: sigma_sq must be positive", line_no));
    d.label = label_from_int(static_cast<int>(label));
    domains.push_back(d);
  }
  if (width < 1 || height < 1 || width > 1'000'000 || height > 1'000'000) {
    throw FormatError(fmt::format("line 1: invalid source size {}x{}", width, height));
  }
  return SdnModel(std::move(domains), constants, static_cast<int>(width), static_cast<int>(height));
}

void save_model(const SdnModel& model, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(fmt::format("cannot open '{}' for writing", path.string()));
  out << format_model(model);
  if (!out) throw IoError(fmt::format("error writing '{}'", path.string()));
}

SdnModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(fmt::format("cannot open '{}'", path.string()));
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_model(text);
}

}  // namespace sdn
