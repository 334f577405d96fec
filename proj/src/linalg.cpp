#include "sphere/linalg.hpp"

#include "sphere/error.hpp"

#include <Eigen/Eigenvalues>

namespace sphere {

SymmetricEigen symmetric_eigen(const Matrix& a, bool with_vectors) {
  const int options = with_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly;
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  for (double shift : {0.0, 1.0, -1.0, 0.5, -0.5}) {
    Matrix b = a;
    b.diagonal().array() += shift * scale;
    Eigen::SelfAdjointEigenSolver<Matrix> solver(b, options);
    if (solver.info() != Eigen::Success) continue;
    SymmetricEigen out;
    out.values = solver.eigenvalues().array() - shift * scale;
    if (with_vectors) out.vectors = solver.eigenvectors();
    return out;
  }
  throw Error(ErrorKind::DidNotConverge, "symmetric eigensolver did not converge");
}

}  // namespace sphere
