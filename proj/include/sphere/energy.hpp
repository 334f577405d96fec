#pragma once

#include "sphere/point_config.hpp"
#include "sphere/potential.hpp"

#include <vector>

namespace sphere {

inline constexpr double kCriticalThreshold = 1e-8;
inline constexpr double kZeroEigenvalueThreshold = 1e-8;

/// E_f(C) = (1/2) sum over ordered pairs x != y of f(|x - y|^2), summed over
/// pairs i < j in lexicographic order so the result is bit-reproducible.
double energy(const PointConfig& config, const PotentialSpec& potential);

/// Ambient gradient of E_f projected onto the tangent space at every point.
TangentVector riemannian_gradient(const PointConfig& config, const PotentialSpec& potential);

/// Both the Riemannian gradient and the radial components <g_i, x_i> of the
/// ambient gradient (the Lagrange multipliers of the sphere constraints).
struct GradientParts {
  TangentVector tangent;
  Vector radial;
};

GradientParts gradient_parts(const PointConfig& config, const PotentialSpec& potential);

/// Scale of the forces in the configuration, max(1, max_i |<g_i, x_i>|).
/// Gradient tolerances in the optimizer are taken relative to this.
double force_scale(const GradientParts& parts);

struct HessianSpectrum {
  std::vector<double> eigenvalues;  // ascending, length (n-1)N
  int zero_count = 0;
  bool non_critical = false;
  double asymmetry = 0.0;  // max |H - H^T| before symmetrization
};

/// Riemannian Hessian in per-point orthonormal tangent frames (see
/// tangent_frame), including the curvature term -<g_i, x_i> I.
Matrix riemannian_hessian(const PointConfig& config, const PotentialSpec& potential,
                          std::vector<Matrix>* frames = nullptr);

HessianSpectrum riemannian_hessian_spectrum(const PointConfig& config, const PotentialSpec& potential);

}  // namespace sphere
