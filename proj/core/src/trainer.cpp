#include "sdn/trainer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "sdn/error.hpp"
#include "sdn/kernel_cache.hpp"

namespace sdn {

void TrainConfig::validate() const {
  if (!(T > 0.0 && T < 1.0)) throw ValidationError(fmt::format("T must lie in (0,1), got {}", T));
  if (!(C > 0.0)) throw ValidationError(fmt::format("C must be positive, got {}", C));
  if (!(a > 0.0)) throw ValidationError(fmt::format("a must be positive, got {}", a));
  if (!(safety_factor > 0.0 && safety_factor <= 1.0)) {
    throw ValidationError(fmt::format("safety_factor must lie in (0,1], got {}", safety_factor));
  }
  if (!(kkt_tol > 0.0)) throw ValidationError(fmt::format("kkt_tol must be positive, got {}", kkt_tol));
  if (!(alpha_eps >= 0.0)) throw ValidationError(fmt::format("alpha_eps must be >= 0, got {}", alpha_eps));
}

namespace {

void check_lengths(std::size_t n, std::size_t sigmas, std::size_t alphas) {
  if (sigmas != n || alphas != n) {
    throw ValidationError(fmt::format("length mismatch: {} samples, {} shape parameters, {} alphas", n,
                                      sigmas, alphas));
  }
}

double pair_kernel(const LabeledSample& a, const LabeledSample& b, double sa, double sb) {
  return rbf_unchecked(squared_distance(a.x, b.x), std::min(sa, sb));
}

std::vector<double> gradient_direct(std::span<const LabeledSample> samples, std::span<const double> sigma_sq,
                                    std::span<const double> alpha) {
  const std::size_t n = samples.size();
  std::vector<double> g(n, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    double f = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (alpha[j] == 0.0) continue;
      f += alpha[j] * sign_of(samples[j].y) * pair_kernel(samples[i], samples[j], sigma_sq[i], sigma_sq[j]);
    }
    g[i] -= sign_of(samples[i].y) * f;
  }
  return g;
}

bool in_up_set(Label y, double alpha, double C) {
  return y == Label::Foreground ? alpha < C : alpha > 0.0;
}

bool in_low_set(Label y, double alpha, double C) {
  return y == Label::Foreground ? alpha > 0.0 : alpha < C;
}

struct ViolatingPair {
  std::size_t up = 0;   // argmax over I_up of y g
  std::size_t low = 0;  // argmin over I_low of y g
  double up_value = -std::numeric_limits<double>::infinity();
  double low_value = std::numeric_limits<double>::infinity();

  bool valid() const { return std::isfinite(up_value) && std::isfinite(low_value); }
  double gap() const { return valid() ? std::max(0.0, up_value - low_value) : 0.0; }
};

// First-order working set: the maximal violating pair. Strict comparisons
// in ascending index order leave ties with the lowest index.
ViolatingPair select_pair(std::span<const LabeledSample> samples, std::span<const double> gradient,
                          std::span<const double> alpha, double C) {
  ViolatingPair p;
  for (std::size_t t = 0; t < samples.size(); ++t) {
    const double v = sign_of(samples[t].y) * gradient[t];
    if (in_up_set(samples[t].y, alpha[t], C) && v > p.up_value) {
      p.up_value = v;
      p.up = t;
    }
    if (in_low_set(samples[t].y, alpha[t], C) && v < p.low_value) {
      p.low_value = v;
      p.low = t;
    }
  }
  return p;
}

}  // namespace

double dual_objective(std::span<const LabeledSample> samples, std::span<const double> sigma_sq,
                      std::span<const double> alpha) {
  check_lengths(samples.size(), sigma_sq.size(), alpha.size());
  double linear = 0.0, quadratic = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    linear += alpha[i];
    if (alpha[i] == 0.0) continue;
    for (std::size_t j = 0; j < samples.size(); ++j) {
      if (alpha[j] == 0.0) continue;
      quadratic += alpha[i] * alpha[j] * sign_of(samples[i].y) * sign_of(samples[j].y) *
                   pair_kernel(samples[i], samples[j], sigma_sq[i], sigma_sq[j]);
    }
  }
  return linear - 0.5 * quadratic;
}

double kkt_violation_from_gradient(std::span<const LabeledSample> samples, std::span<const double> gradient,
                                   std::span<const double> alpha, double C) {
  check_lengths(samples.size(), gradient.size(), alpha.size());
  return select_pair(samples, gradient, alpha, C).gap();
}

double kkt_violation(std::span<const LabeledSample> samples, std::span<const double> sigma_sq,
                     std::span<const double> alpha, double C) {
  check_lengths(samples.size(), sigma_sq.size(), alpha.size());
  const auto g = gradient_direct(samples, sigma_sq, alpha);
  return select_pair(samples, g, alpha, C).gap();
}

TrainResult train_detailed(std::span<const LabeledSample> samples, const TrainConfig& config,
                           const ProgressCallback& progress) {
  config.validate();
  const std::size_t n = samples.size();
  ShapeParameterSet sigmas = estimate_sigmas(samples, config.T, config.safety_factor);
  const std::vector<double>& sigma_sq = sigmas.sigma_sq;

  KernelRowCache cache(n, config.cache_bytes, [&](std::size_t i, std::span<double> out) {
    const Point2 xi = samples[i].x;
    const double si = sigma_sq[i];
    for (std::size_t k = 0; k < n; ++k) {
      out[k] = rbf_unchecked(squared_distance(xi, samples[k].x), std::min(si, sigma_sq[k]));
    }
  });

  const double C = config.C;
  const std::size_t max_stall = config.max_stall_updates ? config.max_stall_updates : 10 * n;
  const std::size_t max_updates =
      config.max_updates ? config.max_updates : std::max<std::size_t>(10'000'000, 1000 * n);
  constexpr double kMinCurvature = 1e-12;

  std::vector<double> alpha(n, 0.0);
  std::vector<double> g(n, 1.0);
  double objective = 0.0;
  TrainStats stats;
  std::size_t stall = 0;

  auto report = [&](double violation) {
    if (progress) progress({stats.updates, objective, violation});
  };

  ViolatingPair pair = select_pair(samples, g, alpha, C);
  while (pair.gap() > config.kkt_tol) {
    if (stats.updates >= max_updates || stall >= max_stall) {
      throw ConvergenceError(
          fmt::format("dual solver stopped after {} pair updates with KKT violation {:.3g} (tolerance {:.3g})",
                      stats.updates, pair.gap(), config.kkt_tol),
          pair.gap());
    }
    const std::size_t i = pair.up;
    const std::size_t j = pair.low;
    const double yi = sign_of(samples[i].y);
    const double yj = sign_of(samples[j].y);
    const auto [ki, kj] = cache.rows(i, j);

    // Move along alpha_i += y_i t, alpha_j -= y_j t, which keeps sum alpha y.
    const double slope = pair.up_value - pair.low_value;
    const double curvature = ki[i] + kj[j] - 2.0 * ki[j];
    double t = slope / std::max(curvature, kMinCurvature);
    const double bound_i = yi > 0 ? C - alpha[i] : alpha[i];
    const double bound_j = yj > 0 ? alpha[j] : C - alpha[j];
    bool clip_i = false, clip_j = false;
    if (t >= bound_i) {
      t = bound_i;
      clip_i = true;
    }
    if (t >= bound_j) {
      t = bound_j;
      clip_j = true;
      clip_i = clip_i && bound_i == bound_j;
    }

    alpha[i] = clip_i ? (yi > 0 ? C : 0.0) : alpha[i] + yi * t;
    alpha[j] = clip_j ? (yj > 0 ? 0.0 : C) : alpha[j] - yj * t;
    for (std::size_t k = 0; k < n; ++k) g[k] -= sign_of(samples[k].y) * t * (ki[k] - kj[k]);

    const double gain = t * slope - 0.5 * t * t * curvature;
    objective += gain;
    if (gain < -1e-12 * std::max(1.0, std::abs(objective))) ++stats.ascent_violations;
    if (stats.updates == 0 || gain < stats.smallest_gain) stats.smallest_gain = gain;
    stall = gain > 1e-15 * std::max(1.0, std::abs(objective)) ? 0 : stall + 1;
    ++stats.updates;

    pair = select_pair(samples, g, alpha, C);
    if (config.progress_every && stats.updates % config.progress_every == 0) report(pair.gap());
  }

  // Resynchronise the objective with the maintained gradient:
  // Q = 1/2 sum alpha_i (1 + g_i).
  objective = 0.0;
  for (std::size_t k = 0; k < n; ++k) objective += 0.5 * alpha[k] * (1.0 + g[k]);

  stats.objective = objective;
  stats.kkt_violation = pair.gap();
  stats.equality_multiplier = pair.valid() ? 0.5 * (pair.up_value + pair.low_value) : 0.0;
  stats.cache_hits = cache.hits();
  stats.cache_misses = cache.misses();
  report(stats.kkt_violation);

  int max_col = 0, max_row = 0;
  std::vector<SimilarityDomain> domains;
  for (std::size_t k = 0; k < n; ++k) {
    max_col = std::max(max_col, static_cast<int>(std::floor(samples[k].x.col)));
    max_row = std::max(max_row, static_cast<int>(std::floor(samples[k].x.row)));
    if (alpha[k] > config.alpha_eps) domains.push_back({samples[k].x, sigma_sq[k], alpha[k], samples[k].y});
  }

  SdnModel model(std::move(domains), ModelConstants{config.T, config.C, config.a}, std::max(max_col, 0) + 1,
                 std::max(max_row, 0) + 1);
  return TrainResult{std::move(model), DualState{std::move(alpha), objective, std::move(g)}, std::move(sigmas),
                     stats};
}

SdnModel train(std::span<const LabeledSample> samples, const TrainConfig& config,
               const ProgressCallback& progress) {
  return train_detailed(samples, config, progress).model;
}

TrainResult train_image(const BinaryImage& image, const TrainConfig& config, const ProgressCallback& progress) {
  const auto samples = image_to_samples(image);
  auto result = train_detailed(samples, config, progress);
  result.model = SdnModel(result.model.domains(), result.model.constants(), image.width(), image.height());
  return result;
}

}  // namespace sdn
