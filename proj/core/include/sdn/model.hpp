#pragma once

#include <cmath>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "sdn/image.hpp"
#include "sdn/point.hpp"

namespace sdn {

inline constexpr double kDefaultT = 0.05;
inline constexpr double kDefaultC = 1000.0;
inline constexpr double kDefaultRadiusScale = 2.85;

// A retained RBF center: a sphere of radius sqrt(a * sigma_sq) around
// `center` carrying weight `alpha` toward class `label`.
struct SimilarityDomain {
  Point2 center;
  double sigma_sq = 1.0;
  double alpha = 0.0;
  Label label = Label::Foreground;

  double radius(double a) const { return std::sqrt(a * sigma_sq); }

  friend bool operator==(const SimilarityDomain&, const SimilarityDomain&) = default;
};

struct ModelConstants {
  double T = kDefaultT;
  double C = kDefaultC;
  double a = kDefaultRadiusScale;  // radius scale for sqrt(a * sigma_sq)

  friend bool operator==(const ModelConstants&, const ModelConstants&) = default;
};

// Trained similarity domains network. Immutable once built.
class SdnModel {
 public:
  SdnModel(std::vector<SimilarityDomain> domains, ModelConstants constants, int source_width,
           int source_height);

  const std::vector<SimilarityDomain>& domains() const noexcept { return domains_; }
  const ModelConstants& constants() const noexcept { return constants_; }
  int source_width() const noexcept { return width_; }
  int source_height() const noexcept { return height_; }
  std::size_t size() const noexcept { return domains_.size(); }
  bool empty() const noexcept { return domains_.empty(); }

  std::size_t foreground_count() const noexcept;
  std::size_t background_count() const noexcept { return size() - foreground_count(); }

  friend bool operator==(const SdnModel&, const SdnModel&) = default;

 private:
  std::vector<SimilarityDomain> domains_;
  ModelConstants constants_;
  int width_;
  int height_;
};

// f(x) = sum_i alpha_i y_i exp(-|x - c_i|^2 / sigma_i^2)
double decision_value(const SdnModel& model, const Point2& x);

// sign(f); f == 0 maps to Background.
Label label_of_value(double f) noexcept;
Label classify(const SdnModel& model, const Point2& x);

BinaryImage reconstruct(const SdnModel& model);
std::size_t pixel_error(const SdnModel& model, const BinaryImage& reference);

// Foreground iff x lies strictly inside some foreground domain of radius
// sqrt(a * sigma_sq). Background domains are ignored.
Label one_class_classify(const SdnModel& model, const Point2& x, double a);

std::vector<SimilarityDomain> foreground_domains(const SdnModel& model);
std::vector<SimilarityDomain> background_domains(const SdnModel& model);

// Line-oriented text format:
//   SDN v1 <width> <height> <T> <C> <a>
//   <col> <row> <sigma_sq> <alpha> <label>     (one per domain)
// Reals use 9 significant digits.
std::string format_model(const SdnModel& model);
SdnModel parse_model(std::string_view text);
void save_model(const SdnModel& model, const std::filesystem::path& path);
SdnModel load_model(const std::filesystem::path& path);

}  // namespace sdn
