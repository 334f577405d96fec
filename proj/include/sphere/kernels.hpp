#pragma once

// Pairwise kernels behind the energy module. Each kernel has a parallel
// (OpenMP) version used by the library and a plain serial reference kept for
// testing and benchmarking. The parallel kernels assign one output row (one
// point) per iteration and sum over partners in index order, so their results
// do not depend on the thread count.

#include "sphere/point_config.hpp"
#include "sphere/potential.hpp"

namespace sphere::kernels {

/// Below this many points the parallel kernels run on the calling thread.
inline constexpr int kParallelThreshold = 192;

/// Squared distances at or below this are treated as coincident points.
inline constexpr double kCoincidentDistance = 1e-14;

/// E_f with a single accumulator over pairs (i, j), i < j, in lexicographic
/// order. This is the canonical energy used everywhere.
double energy(const Matrix& points, const BoundPotential& f);

/// E_f after moving every x_i to (x_i - t d_i) / |x_i - t d_i|, minus E_f
/// before. Computed pair by pair from the change in inner product, with the
/// points taken as exact unit vectors, so the result stays accurate when it
/// is far below the rounding error of E_f itself.
double step_energy_change(const Matrix& points, const Matrix& direction, double t, const BoundPotential& f);

/// Ambient (Euclidean) gradient of E_f, one column per point.
Matrix ambient_gradient(const Matrix& points, const BoundPotential& f);

/// Riemannian Hessian in per-point tangent frames: a dense symmetric matrix
/// of size (n-1)N. `frames` receives the n x (n-1) frame of every point.
Matrix tangent_hessian(const Matrix& points, const BoundPotential& f, std::vector<Matrix>* frames);

Matrix gram(const Matrix& points);

namespace reference {

/// Row-blocked sum: each row sum over j > i, then the row sums in order.
double energy_rows(const Matrix& points, const BoundPotential& f);

/// E_f(moved) - E_f(points) from the displacement of every pair.
double energy_change(const Matrix& points, const Matrix& moved, const BoundPotential& f);

/// Pair loop accumulating into both endpoints.
Matrix ambient_gradient(const Matrix& points, const BoundPotential& f);

/// Full nN x nN ambient Hessian projected onto the tangent frames.
Matrix tangent_hessian(const Matrix& points, const BoundPotential& f);

Matrix gram(const Matrix& points);

}  // namespace reference

}  // namespace sphere::kernels
