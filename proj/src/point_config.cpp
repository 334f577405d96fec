#include "sphere/point_config.hpp"

#include "sphere/error.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace sphere {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::CoincidentPoints: return "CoincidentPoints";
    case ErrorKind::DidNotConverge: return "DidNotConverge";
    case ErrorKind::NotNearCritical: return "NotNearCritical";
    case ErrorKind::NotPSD: return "NotPSD";
    case ErrorKind::RankTooHigh: return "RankTooHigh";
    case ErrorKind::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorKind::EmptyShortening: return "EmptyShortening";
    case ErrorKind::UnknownEntry: return "UnknownEntry";
    case ErrorKind::SpanDeficient: return "SpanDeficient";
    case ErrorKind::NotAnAutomorphism: return "NotAnAutomorphism";
    case ErrorKind::TooFewLevels: return "TooFewLevels";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotOnSphere: return "NotOnSphere";
  }
  return "Unknown";
}

PointConfig::PointConfig(Matrix points) : points_(std::move(points)) {
  if (points_.rows() < 2) {
    throw Error(ErrorKind::InvalidArgument, "dimension must be at least 2");
  }
  if (points_.cols() < 1) {
    throw Error(ErrorKind::InvalidArgument, "configuration needs at least one point");
  }
  if (!points_.allFinite()) {
    throw Error(ErrorKind::InvalidArgument, "non-finite coordinate");
  }
  for (Eigen::Index i = 0; i < points_.cols(); ++i) {
    const double norm = points_.col(i).norm();
    if (std::abs(norm - 1.0) > kNormTolerance) {
      throw Error(ErrorKind::NotOnSphere,
                  "point " + std::to_string(i) + " has norm " + std::to_string(norm));
    }
  }
}

PointConfig PointConfig::normalized(Matrix points) {
  for (Eigen::Index i = 0; i < points.cols(); ++i) {
    const double norm = points.col(i).norm();
    if (!(norm > 0.0)) {
      throw Error(ErrorKind::InvalidArgument, "cannot normalize zero vector " + std::to_string(i));
    }
    points.col(i) /= norm;
  }
  return PointConfig(std::move(points));
}

PointConfig PointConfig::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) throw Error(ErrorKind::InvalidArgument, "no points");
  const auto n = static_cast<Eigen::Index>(rows.front().size());
  Matrix m(n, static_cast<Eigen::Index>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<Eigen::Index>(rows[i].size()) != n) {
      throw Error(ErrorKind::InvalidArgument, "ragged point list");
    }
    for (Eigen::Index c = 0; c < n; ++c) m(c, static_cast<Eigen::Index>(i)) = rows[i][c];
  }
  return PointConfig::normalized(std::move(m));
}

Matrix PointConfig::gram() const { return points_.transpose() * points_; }

double PointConfig::max_inner_product() const {
  double best = -1.0;
  for (int i = 0; i < size(); ++i) {
    for (int j = i + 1; j < size(); ++j) {
      best = std::max(best, points_.col(i).dot(points_.col(j)));
    }
  }
  return best;
}

double PointConfig::min_squared_distance() const {
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < size(); ++i) {
    for (int j = i + 1; j < size(); ++j) {
      best = std::min(best, (points_.col(i) - points_.col(j)).squaredNorm());
    }
  }
  return best;
}

PointConfig PointConfig::transformed(const Matrix& q) const {
  if (q.rows() != dimension() || q.cols() != dimension()) {
    throw Error(ErrorKind::ShapeMismatch, "transform does not match dimension");
  }
  return PointConfig::normalized(q * points_);
}

PointConfig PointConfig::padded(int dimension) const {
  if (dimension < this->dimension()) {
    throw Error(ErrorKind::InvalidArgument, "cannot pad to a smaller dimension");
  }
  Matrix m = Matrix::Zero(dimension, size());
  m.topRows(this->dimension()) = points_;
  return PointConfig(std::move(m));
}

PointConfig PointConfig::concatenated(const PointConfig& other) const {
  if (other.dimension() != dimension()) {
    throw Error(ErrorKind::ShapeMismatch, "dimension mismatch in concatenation");
  }
  Matrix m(dimension(), size() + other.size());
  m << points_, other.points_;
  return PointConfig(std::move(m));
}

Matrix tangent_frame(const Eigen::Ref<const Vector>& x) {
  const Eigen::Index n = x.size();
  Vector v = x;
  const double sign = x(0) >= 0.0 ? 1.0 : -1.0;
  v(0) += sign;
  const double vv = v.squaredNorm();
  Matrix h = Matrix::Identity(n, n) - (2.0 / vv) * v * v.transpose();
  return h.rightCols(n - 1);
}

Matrix regular_simplex(int m) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "simplex needs at least one vertex");
  if (m == 1) return Matrix::Zero(0, 1);
  // Centered standard basis of R^m expressed in a Helmert basis of the
  // sum-zero hyperplane.
  Matrix helmert(m - 1, m);
  helmert.setZero();
  for (int r = 0; r < m - 1; ++r) {
    const double k = r + 1;
    const double scale = 1.0 / std::sqrt(k * (k + 1.0));
    for (int c = 0; c <= r; ++c) helmert(r, c) = scale;
    helmert(r, r + 1) = -k * scale;
  }
  Matrix pts = helmert;  // column c is the image of e_c
  for (int c = 0; c < m; ++c) pts.col(c).normalize();
  return pts;
}

}  // namespace sphere
