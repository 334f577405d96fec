#pragma once

#include "sphere/point_config.hpp"

namespace sphere {

/// Symmetric N x N inner-product matrix with unit diagonal.
class GramMatrix {
 public:
  static constexpr double kSymmetryTolerance = 1e-12;

  /// Throws InvalidArgument unless the matrix is square, symmetric within
  /// kSymmetryTolerance and has an exactly unit diagonal.
  explicit GramMatrix(Matrix entries);

  static GramMatrix of(const PointConfig& config);

  int size() const { return static_cast<int>(entries_.rows()); }
  const Matrix& entries() const { return entries_; }
  double operator()(int i, int j) const { return entries_(i, j); }

  /// Principal submatrix on indices [first, first + count).
  GramMatrix block(int first, int count) const;

  /// Eigenvalues in ascending order.
  Vector eigenvalues() const;

 private:
  Matrix entries_;
};

inline constexpr double kRealizeTolerance = 1e-9;

/// Points in R^n whose Gram matrix is G, from the top n eigenpairs. Throws
/// NotPSD for an eigenvalue below -1e-9 and RankTooHigh when more than n
/// eigenvalues exceed 1e-9.
PointConfig realize_from_gram(const GramMatrix& g, int n);

/// 16 points in R^5 in two parameters |a|, |b| < 1: one point, then two
/// triangles at inner product a and nine points at inner product b.
GramMatrix build_gram_16_in_5(double a, double b);

/// 12 points in R^4, 0 < a < 1/2; nonzero spectrum 12a and 6 - 12a (x2 each).
GramMatrix build_gram_12_in_4_family1(double a);

/// 12 points in R^4, 0 < a < 1/3; a tetrahedron and two parallel dual
/// tetrahedra. Nonzero spectrum 4/3 + 24a^2 (x3) and 8 - 72a^2.
GramMatrix build_gram_12_in_4_family2(double a);

}  // namespace sphere
