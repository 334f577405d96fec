#include "sphere/energy.hpp"

#include "sphere/kernels.hpp"
#include "sphere/linalg.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace sphere {

double energy(const PointConfig& config, const PotentialSpec& potential) {
  return kernels::energy(config.points(), potential.bind(config.dimension()));
}

GradientParts gradient_parts(const PointConfig& config, const PotentialSpec& potential) {
  const Matrix& x = config.points();
  Matrix g = kernels::ambient_gradient(x, potential.bind(config.dimension()));
  GradientParts parts;
  parts.radial.resize(config.size());
  for (int i = 0; i < config.size(); ++i) {
    const double lambda = g.col(i).dot(x.col(i));
    parts.radial(i) = lambda;
    g.col(i) -= lambda * x.col(i);
  }
  parts.tangent.components = std::move(g);
  return parts;
}

TangentVector riemannian_gradient(const PointConfig& config, const PotentialSpec& potential) {
  return gradient_parts(config, potential).tangent;
}

double force_scale(const GradientParts& parts) {
  const double radial = parts.radial.size() ? parts.radial.cwiseAbs().maxCoeff() : 0.0;
  return std::max(1.0, radial);
}

Matrix riemannian_hessian(const PointConfig& config, const PotentialSpec& potential,
                          std::vector<Matrix>* frames) {
  return kernels::tangent_hessian(config.points(), potential.bind(config.dimension()), frames);
}

HessianSpectrum riemannian_hessian_spectrum(const PointConfig& config, const PotentialSpec& potential) {
  Matrix h = riemannian_hessian(config, potential);
  HessianSpectrum spectrum;
  spectrum.asymmetry = (h - h.transpose()).cwiseAbs().maxCoeff();
  h = 0.5 * (h + h.transpose());

  const Vector values = symmetric_eigen(h, false).values;
  spectrum.eigenvalues.assign(values.data(), values.data() + values.size());
  std::sort(spectrum.eigenvalues.begin(), spectrum.eigenvalues.end());
  spectrum.zero_count = static_cast<int>(std::count_if(
      spectrum.eigenvalues.begin(), spectrum.eigenvalues.end(),
      [](double v) { return std::abs(v) < kZeroEigenvalueThreshold; }));
  spectrum.non_critical = riemannian_gradient(config, potential).sup_norm() >= kCriticalThreshold;
  return spectrum;
}

}  // namespace sphere
