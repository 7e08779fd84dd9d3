#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "sdn/image.hpp"
#include "sdn/kernel.hpp"
#include "sdn/model.hpp"

namespace sdn {

struct TrainConfig {
  double T = kDefaultT;            // cross-class kernel bound, 0 < T < 1
  double C = kDefaultC;            // box bound on every alpha
  double a = kDefaultRadiusScale;  // recorded in the model for one-class use
  double safety_factor = 0.99;
  double kkt_tol = 1e-3;
  double alpha_eps = 1e-8;         // alphas at or below this are not retained
  // Consecutive pair updates without objective gain before giving up.
  // 0 selects 10 * n.
  std::size_t max_stall_updates = 0;
  // Hard cap on pair updates. 0 selects max(10^7, 1000 * n).
  std::size_t max_updates = 0;
  std::size_t cache_bytes = std::size_t(256) << 20;
  // Callback cadence in pair updates (the final state is always reported).
  std::size_t progress_every = 1000;

  void validate() const;
};

struct DualState {
  std::vector<double> alpha;
  double objective = 0.0;
  std::vector<double> gradient;  // dQ/dalpha_i = 1 - y_i * sum_j alpha_j y_j K_ij
};

struct TrainProgress {
  std::size_t update = 0;
  double objective = 0.0;
  double kkt_violation = 0.0;
};

using ProgressCallback = std::function<void(const TrainProgress&)>;

struct TrainStats {
  std::size_t updates = 0;
  double objective = 0.0;
  double kkt_violation = 0.0;
  // Multiplier of the equality constraint sum alpha_i y_i = 0 at the final
  // iterate (midpoint of the violating-pair bracket).
  double equality_multiplier = 0.0;
  // Pair updates whose objective change was negative beyond rounding slack.
  std::size_t ascent_violations = 0;
  double smallest_gain = 0.0;
  std::size_t cache_hits = 0;
  std::size_t cache_misses = 0;
};

struct TrainResult {
  SdnModel model;
  DualState state;
  ShapeParameterSet sigmas;
  TrainStats stats;
};

// Q(alpha) = sum alpha_i - 1/2 sum_ij alpha_i alpha_j y_i y_j K_ij with
// K_ij = exp(-d_ij^2 / min(sigma_i^2, sigma_j^2)). Direct O(n^2) evaluation.
double dual_objective(std::span<const LabeledSample> samples, std::span<const double> sigma_sq,
                      std::span<const double> alpha);

// Width of the maximal violating pair bracket for the box + equality
// constrained dual: max_{i in I_up} y_i g_i - min_{j in I_low} y_j g_j,
// clamped at 0, with g = dQ/dalpha. Zero exactly at a KKT point.
double kkt_violation(std::span<const LabeledSample> samples, std::span<const double> sigma_sq,
                     std::span<const double> alpha, double C);

// Same measure from a precomputed gradient.
double kkt_violation_from_gradient(std::span<const LabeledSample> samples, std::span<const double> gradient,
                                   std::span<const double> alpha, double C);

TrainResult train_detailed(std::span<const LabeledSample> samples, const TrainConfig& config,
                           const ProgressCallback& progress = {});

SdnModel train(std::span<const LabeledSample> samples, const TrainConfig& config,
               const ProgressCallback& progress = {});

// Trains on every pixel of `image`; the model records the image size.
TrainResult train_image(const BinaryImage& image, const TrainConfig& config,
                        const ProgressCallback& progress = {});

}  // namespace sdn
