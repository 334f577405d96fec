#pragma once

#include "sphere/point_config.hpp"

namespace sphere {

struct SymmetricEigen {
  Vector values;   // ascending
  Matrix vectors;  // empty unless requested
};

/// Eigen-decomposition of a symmetric matrix. The implicit QL iteration can
/// fail to converge on highly degenerate spectra (large Gram matrices of
/// codes); in that case the diagonal is shifted, which leaves the
/// eigenvectors unchanged, and the solve is retried. Throws DidNotConverge
/// if every shift fails.
SymmetricEigen symmetric_eigen(const Matrix& a, bool with_vectors = true);

}  // namespace sphere
