#include "sdn/kernel.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "sdn/error.hpp"
#include "sdn/spatial_grid.hpp"

namespace sdn {

double rbf(const Point2& x, const Point2& center, double sigma_sq) {
  if (!(sigma_sq > 0.0)) throw ValidationError(fmt::format("sigma_sq must be positive, got {}", sigma_sq));
  return rbf_unchecked(squared_distance(x, center), sigma_sq);
}

double pair_sigma_sq(double sigma_sq_i, double sigma_sq_j) {
  if (!(sigma_sq_i > 0.0) || !(sigma_sq_j > 0.0)) {
    throw ValidationError(fmt::format("shape parameters must be positive, got {} and {}", sigma_sq_i, sigma_sq_j));
  }
  return std::min(sigma_sq_i, sigma_sq_j);
}

ShapeParameterSet estimate_sigmas(std::span<const LabeledSample> samples, double T, double safety_factor) {
  if (!(T > 0.0 && T < 1.0)) throw ValidationError(fmt::format("T must lie in (0,1), got {}", T));
  if (!(safety_factor > 0.0 && safety_factor <= 1.0)) {
    throw ValidationError(fmt::format("safety_factor must lie in (0,1], got {}", safety_factor));
  }

  std::vector<Point2> foreground, background;
  for (const auto& s : samples) (s.y == Label::Foreground ? foreground : background).push_back(s.x);
  if (foreground.empty() || background.empty()) {
    throw ValidationError("training data must contain both foreground and background samples");
  }

  const PointGrid fg_index(foreground);
  const PointGrid bg_index(background);
  const double scale = safety_factor / std::log(1.0 / T);

  ShapeParameterSet out;
  out.T = T;
  out.safety_factor = safety_factor;
  out.sigma_sq.reserve(samples.size());
  for (const auto& s : samples) {
    const auto& other = s.y == Label::Foreground ? bg_index : fg_index;
    const double d2 = other.nearest(s.x)->squared_distance;
    if (d2 == 0.0) {
      throw DegenerateDataError(fmt::format(
          "point ({}, {}) appears with both labels; no shape parameter satisfies the constraint",
          s.x.col, s.x.row));
    }
    out.sigma_sq.push_back(scale * d2);
  }
  return out;
}

double max_cross_class_kernel(std::span<const LabeledSample> samples, std::span<const double> sigma_sq) {
  if (samples.size() != sigma_sq.size()) throw ValidationError("samples and sigma_sq differ in length");
  double worst = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    for (std::size_t j = i + 1; j < samples.size(); ++j) {
      if (samples[i].y == samples[j].y) continue;
      const double k = rbf_unchecked(squared_distance(samples[i].x, samples[j].x),
                                     pair_sigma_sq(sigma_sq[i], sigma_sq[j]));
      worst = std::max(worst, k);
    }
  }
  return worst;
}

}  // namespace sdn
