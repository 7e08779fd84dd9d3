#include "sdn/model.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "sdn/error.hpp"
#include "sdn/kernel.hpp"

namespace sdn {

SdnModel::SdnModel(std::vector<SimilarityDomain> domains, ModelConstants constants, int source_width,
                   int source_height)
    : domains_(std::move(domains)), constants_(constants), width_(source_width), height_(source_height) {
  if (width_ < 1 || height_ < 1) {
    throw ValidationError(fmt::format("model source size must be positive, got {}x{}", width_, height_));
  }
  if (!(constants_.a > 0.0)) throw ValidationError("radius scale a must be positive");
  for (const auto& d : domains_) {
    if (!(d.sigma_sq > 0.0)) {
      throw ValidationError(fmt::format("domain at ({}, {}) has non-positive sigma_sq {}", d.center.col,
                                        d.center.row, d.sigma_sq));
    }
    if (!(d.alpha > 0.0) || !std::isfinite(d.alpha)) {
      throw ValidationError(fmt::format("domain at ({}, {}) has non-positive weight {}", d.center.col,
                                        d.center.row, d.alpha));
    }
  }
}

std::size_t SdnModel::foreground_count() const noexcept {
  return static_cast<std::size_t>(std::count_if(domains_.begin(), domains_.end(), [](const auto& d) {
    return d.label == Label::Foreground;
  }));
}

double decision_value(const SdnModel& model, const Point2& x) {
  if (model.empty()) throw ValidationError("decision function of an empty model is undefined");
  double f = 0.0;
  for (const auto& d : model.domains()) {
    f += d.alpha * sign_of(d.label) * rbf_unchecked(squared_distance(x, d.center), d.sigma_sq);
  }
  return f;
}

Label label_of_value(double f) noexcept { return f > 0.0 ? Label::Foreground : Label::Background; }

Label classify(const SdnModel& model, const Point2& x) { return label_of_value(decision_value(model, x)); }

BinaryImage reconstruct(const SdnModel& model) {
  if (model.empty()) throw ValidationError("cannot reconstruct from an empty model");
  BinaryImage out(model.source_width(), model.source_height());
  for (int row = 0; row < out.height(); ++row) {
    for (int col = 0; col < out.width(); ++col) {
      out.set(col, row, classify(model, {double(col), double(row)}) == Label::Foreground);
    }
  }
  return out;
}

std::size_t pixel_error(const SdnModel& model, const BinaryImage& reference) {
  if (reference.width() != model.source_width() || reference.height() != model.source_height()) {
    throw ValidationError(fmt::format("reference is {}x{} but the model was trained on {}x{}",
                                      reference.width(), reference.height(), model.source_width(),
                                      model.source_height()));
  }
  return hamming_distance(reconstruct(model), reference);
}

Label one_class_classify(const SdnModel& model, const Point2& x, double a) {
  if (!(a > 0.0)) throw ValidationError(fmt::format("radius scale a must be positive, got {}", a));
  bool any_foreground = false;
  for (const auto& d : model.domains()) {
    if (d.label != Label::Foreground) continue;
    any_foreground = true;
    if (squared_distance(x, d.center) < a * d.sigma_sq) return Label::Foreground;
  }
  if (!any_foreground) throw ValidationError("one-class rule needs at least one foreground domain");
  return Label::Background;
}

namespace {

std::vector<SimilarityDomain> with_label(const SdnModel& model, Label y) {
  std::vector<SimilarityDomain> out;
  std::copy_if(model.domains().begin(), model.domains().end(), std::back_inserter(out),
               [y](const auto& d) { return d.label == y; });
  return out;
}

}  // namespace

std::vector<SimilarityDomain> foreground_domains(const SdnModel& model) {
  return with_label(model, Label::Foreground);
}

std::vector<SimilarityDomain> background_domains(const SdnModel& model) {
  return with_label(model, Label::Background);
}

}  // namespace sdn
