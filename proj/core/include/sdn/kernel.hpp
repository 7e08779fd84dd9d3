#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "sdn/image.hpp"
#include "sdn/point.hpp"

namespace sdn {

// Gaussian RBF exp(-|x - center|^2 / sigma_sq). Throws ValidationError for
// sigma_sq <= 0.
double rbf(const Point2& x, const Point2& center, double sigma_sq);

// Unchecked variant for hot loops where sigma_sq is known to be positive.
inline double rbf_unchecked(double squared_dist, double sigma_sq) noexcept {
  return std::exp(-squared_dist / sigma_sq);
}

// Shape parameter shared by a pair of samples: the smaller of the two.
double pair_sigma_sq(double sigma_sq_i, double sigma_sq_j);

// Per-sample shape parameters fitted to the cross-class constraint
// K(x_i, x_j) < T for every pair with opposite labels.
struct ShapeParameterSet {
  std::vector<double> sigma_sq;
  double T = 0.05;
  double safety_factor = 0.99;
};

// sigma_sq[i] = safety_factor * d2_min(i) / ln(1/T), where d2_min(i) is the
// squared distance to the nearest sample of the other class.
ShapeParameterSet estimate_sigmas(std::span<const LabeledSample> samples, double T,
                                  double safety_factor = 0.99);

// Largest pair kernel value over all cross-class pairs in the given set,
// using pair_sigma_sq. O(n^2); meant for audits and tests.
double max_cross_class_kernel(std::span<const LabeledSample> samples,
                              std::span<const double> sigma_sq);

}  // namespace sdn
