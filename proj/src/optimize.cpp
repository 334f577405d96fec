#include "sphere/optimize.hpp"

#include "sphere/energy.hpp"
#include "sphere/error.hpp"
#include "sphere/kernels.hpp"
#include "sphere/linalg.hpp"
#include "sphere/random.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <string>

namespace sphere {

namespace {

constexpr double kMinimumStep = 1e-18;

void normalize_columns(Matrix& x) {
  for (Eigen::Index i = 0; i < x.cols(); ++i) x.col(i) /= x.col(i).norm();
}

// Tangential part of the ambient gradient, in place; returns max |lambda_i|.
double project_tangent(const Matrix& x, Matrix& g) {
  double radial = 0.0;
  for (Eigen::Index i = 0; i < x.cols(); ++i) {
    const double lambda = g.col(i).dot(x.col(i));
    radial = std::max(radial, std::abs(lambda));
    g.col(i) -= lambda * x.col(i);
  }
  return radial;
}

}  // namespace

void DescentSettings::validate() const {
  if (max_iterations < 0) throw Error(ErrorKind::InvalidArgument, "max_iterations must be nonnegative");
  if (!(gradient_tolerance > 0.0)) throw Error(ErrorKind::InvalidArgument, "gradient_tolerance must be positive");
  if (!(initial_step >= 0.0)) throw Error(ErrorKind::InvalidArgument, "initial_step must be nonnegative");
  if (!(armijo_c > 0.0 && armijo_c < 1.0)) throw Error(ErrorKind::InvalidArgument, "armijo_c must lie in (0,1)");
  if (!(backtrack_factor > 0.0 && backtrack_factor < 1.0)) {
    throw Error(ErrorKind::InvalidArgument, "backtrack_factor must lie in (0,1)");
  }
}

const char* to_string(DescentStatus status) {
  switch (status) {
    case DescentStatus::Converged: return "converged";
    case DescentStatus::MaxIterations: return "max_iterations";
    case DescentStatus::Stalled: return "stalled";
    case DescentStatus::PolishFailed: return "polish_failed";
  }
  return "unknown";
}

PointConfig random_config(int n, int N, std::uint64_t seed) {
  if (n < 2 || N < 1) throw Error(ErrorKind::InvalidArgument, "random_config needs n >= 2 and N >= 1");
  const CounterRng rng(seed);
  Matrix x(n, N);
  for (int i = 0; i < N; ++i) {
    for (;;) {
      for (int c = 0; c < n; ++c) {
        x(c, i) = rng.normal(static_cast<std::uint64_t>(i) * n + c);
      }
      if (x.col(i).norm() > 0.0) break;
    }
  }
  return PointConfig::normalized(std::move(x));
}

DescentResult gradient_descent(const PointConfig& start, const PotentialSpec& potential,
                               const DescentSettings& settings, std::uint64_t seed) {
  settings.validate();
  const BoundPotential f = potential.bind(start.dimension());
  Matrix x = start.points();
  double e = kernels::energy(x, f);
  Matrix g = kernels::ambient_gradient(x, f);
  project_tangent(x, g);
  double gnorm = g.cwiseAbs().maxCoeff();

  DescentResult result;
  result.seed = seed;
  if (settings.record_trace) result.energy_trace.push_back(e);
  double tracked = e;
  double step = settings.initial_step > 0.0 ? settings.initial_step : 1.0 / start.size();
  Matrix trial(x.rows(), x.cols());

  int it = 0;
  result.status = DescentStatus::MaxIterations;
  for (;; ++it) {
    if (gnorm <= settings.gradient_tolerance) {
      result.status = DescentStatus::Converged;
      break;
    }
    if (it >= settings.max_iterations) break;

    const double slope = g.squaredNorm();
    double t = step;
    double change = 0.0;
    bool accepted = false;
    bool first = true;
    while (t >= kMinimumStep) {
      trial = x - t * g;
      normalize_columns(trial);
      bool ok = true;
      try {
        change = kernels::step_energy_change(x, g, t, f);
      } catch (const Error&) {
        ok = false;
      }
      if (ok && change <= -settings.armijo_c * t * slope) {
        accepted = true;
        break;
      }
      t *= settings.backtrack_factor;
      first = false;
    }
    if (!accepted) {
      result.status = DescentStatus::Stalled;
      break;
    }
    x.swap(trial);
    tracked += change;
    if (settings.record_trace) result.energy_trace.push_back(tracked);
    step = first ? t / settings.backtrack_factor : t;
    g = kernels::ambient_gradient(x, f);
    project_tangent(x, g);
    gnorm = g.cwiseAbs().maxCoeff();
  }

  result.iterations = it;
  result.config = PointConfig::normalized(std::move(x));
  result.energy = energy(result.config, potential);
  result.gradient_norm = gnorm;
  result.converged = result.status == DescentStatus::Converged;

  if (settings.polish && result.converged) {
    try {
      DescentResult polished = newton_polish(result.config, potential, seed);
      polished.iterations += result.iterations;
      polished.energy_trace = std::move(result.energy_trace);
      return polished;
    } catch (const Error&) {
      result.converged = false;
      result.status = DescentStatus::PolishFailed;
    }
  }
  return result;
}

DescentResult newton_polish(const PointConfig& approx, const PotentialSpec& potential, std::uint64_t seed) {
  const BoundPotential f = potential.bind(approx.dimension());
  const int n = approx.dimension();
  const int count = approx.size();
  Matrix x = approx.points();

  Matrix g = kernels::ambient_gradient(x, f);
  const double scale = std::max(1.0, project_tangent(x, g));
  double gnorm = g.cwiseAbs().maxCoeff();
  if (gnorm >= kNewtonStartTolerance * scale) {
    throw Error(ErrorKind::NotNearCritical,
                "gradient sup-norm " + std::to_string(gnorm) + " is too large to polish");
  }
  const double target = kNewtonTolerance * scale;

  DescentResult result;
  result.seed = seed;
  int it = 0;
  std::vector<Matrix> frames;
  Vector rhs((n - 1) * count);
  for (; gnorm > target; ++it) {
    if (it >= kNewtonMaxIterations) {
      throw Error(ErrorKind::DidNotConverge, "Newton polish stopped at gradient sup-norm " +
                                                 std::to_string(gnorm) + " after " +
                                                 std::to_string(it) + " iterations");
    }
    Matrix h = kernels::tangent_hessian(x, f, &frames);
    h = 0.5 * (h + h.transpose());
    for (int i = 0; i < count; ++i) rhs.segment(i * (n - 1), n - 1) = frames[i].transpose() * g.col(i);

    const SymmetricEigen eig = symmetric_eigen(h);
    const Vector& values = eig.values;
    const Matrix& vectors = eig.vectors;
    const double cutoff = kPseudoinverseCutoff * std::max(1.0, values.cwiseAbs().maxCoeff());
    Vector coeffs = vectors.transpose() * rhs;
    for (Eigen::Index k = 0; k < values.size(); ++k) {
      coeffs(k) = std::abs(values(k)) > cutoff ? coeffs(k) / values(k) : 0.0;
    }
    const Vector delta = -(vectors * coeffs);
    for (int i = 0; i < count; ++i) x.col(i) += frames[i] * delta.segment(i * (n - 1), n - 1);
    normalize_columns(x);

    g = kernels::ambient_gradient(x, f);
    project_tangent(x, g);
    gnorm = g.cwiseAbs().maxCoeff();
  }

  result.iterations = it;
  result.config = PointConfig::normalized(std::move(x));
  result.energy = energy(result.config, potential);
  result.gradient_norm = gnorm;
  result.converged = true;
  result.status = DescentStatus::Converged;
  return result;
}

}  // namespace sphere
