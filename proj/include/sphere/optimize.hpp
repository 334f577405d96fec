#pragma once

#include "sphere/point_config.hpp"
#include "sphere/potential.hpp"

#include <cstdint>
#include <vector>

namespace sphere {

struct DescentSettings {
  int max_iterations = 100000;
  double gradient_tolerance = 1e-12;  // on the gradient sup-norm
  double initial_step = 0.0;          // 0 means 1/N
  double armijo_c = 1e-4;
  double backtrack_factor = 0.5;
  bool polish = false;       // finish with newton_polish when descent converges
  bool record_trace = false;  // keep the energy after every accepted step

  /// Throws InvalidArgument unless every field is in range.
  void validate() const;
};

enum class DescentStatus { Converged, MaxIterations, Stalled, PolishFailed };

const char* to_string(DescentStatus status);

struct DescentResult {
  PointConfig config;
  double energy = 0.0;
  int iterations = 0;
  bool converged = false;
  double gradient_norm = 0.0;  // sup-norm of the Riemannian gradient
  std::uint64_t seed = 0;
  DescentStatus status = DescentStatus::MaxIterations;
  /// Energy after each accepted step, starting with the initial energy. The
  /// entries are the starting energy plus the accumulated per-step changes,
  /// so they resolve decreases far below the rounding error of E itself.
  std::vector<double> energy_trace;
};

/// N independent points, each a normalized vector of standard normal
/// deviates from a counter-based generator keyed by seed.
PointConfig random_config(int n, int N, std::uint64_t seed);

/// Riemannian gradient descent with Armijo backtracking and per-point
/// renormalization as retraction. The trial step starts at initial_step and
/// afterwards grows by 1/backtrack_factor from the last accepted step.
DescentResult gradient_descent(const PointConfig& start, const PotentialSpec& potential,
                               const DescentSettings& settings, std::uint64_t seed = 0);

inline constexpr double kNewtonTolerance = 1e-13;
inline constexpr double kNewtonStartTolerance = 1e-3;
inline constexpr double kPseudoinverseCutoff = 1e-10;
inline constexpr int kNewtonMaxIterations = 100;

/// Tangent-space Newton iteration on the gradient. Hessian eigenvalues below
/// kPseudoinverseCutoff (relative to the largest) are dropped. Tolerances are
/// relative to force_scale: the start must have gradient sup-norm below
/// 1e-3 * scale (NotNearCritical) and success means at most 1e-13 * scale
/// (DidNotConverge after 100 iterations).
DescentResult newton_polish(const PointConfig& approx, const PotentialSpec& potential,
                            std::uint64_t seed = 0);

}  // namespace sphere
