#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <vector>

namespace sphere {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// N unit vectors in R^n, stored column-wise (column i is point i).
class PointConfig {
 public:
  static constexpr double kNormTolerance = 1e-12;

  PointConfig() = default;

  /// Takes ownership of an n x N coordinate matrix. Throws NotOnSphere if a
  /// column is not a unit vector within kNormTolerance, InvalidArgument for
  /// n < 2, N < 1 or non-finite coordinates.
  explicit PointConfig(Matrix points);

  /// Normalizes every column first (for builders that produce points only up
  /// to scale). Zero columns are rejected.
  static PointConfig normalized(Matrix points);

  static PointConfig from_rows(const std::vector<std::vector<double>>& rows);

  int dimension() const { return static_cast<int>(points_.rows()); }
  int size() const { return static_cast<int>(points_.cols()); }

  const Matrix& points() const { return points_; }
  auto point(int i) const { return points_.col(i); }

  Matrix gram() const;

  /// Largest inner product between distinct points (the cosine of the
  /// minimal angle); -1 for a single point.
  double max_inner_product() const;
  double min_squared_distance() const;

  /// Q x_i for every point; Q must be orthogonal.
  PointConfig transformed(const Matrix& q) const;

  /// Points embedded into a larger (or equal) dimension by zero padding.
  PointConfig padded(int dimension) const;

  PointConfig concatenated(const PointConfig& other) const;

 private:
  Matrix points_;
};

/// Per-point tangent displacements, same shape as the configuration.
struct TangentVector {
  Matrix components;

  double sup_norm() const { return components.cwiseAbs().maxCoeff(); }
  double norm() const { return components.norm(); }
};

/// Orthonormal basis (n x (n-1)) of the tangent space at a unit vector x,
/// taken from the Householder reflection that maps x to a coordinate axis.
Matrix tangent_frame(const Eigen::Ref<const Vector>& x);

/// Regular simplex with m vertices, as unit vectors in R^(m-1).
Matrix regular_simplex(int m);

}  // namespace sphere
