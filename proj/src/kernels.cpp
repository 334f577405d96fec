#include "sphere/kernels.hpp"

#include "sphere/error.hpp"

#include <omp.h>

#include <atomic>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

namespace sphere::kernels {

namespace {

bool use_threads(int points) { return points >= kParallelThreshold && !omp_in_parallel(); }

inline double squared_distance(const double* a, const double* b, int dim) {
  double r = 0.0;
  for (int k = 0; k < dim; ++k) {
    const double d = a[k] - b[k];
    r += d * d;
  }
  return r;
}

[[noreturn]] void coincident(int i, int j) {
  throw Error(ErrorKind::CoincidentPoints,
              "points " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
}

}  // namespace

double energy(const Matrix& points, const BoundPotential& f) {
  const int count = static_cast<int>(points.cols());
  const int dim = static_cast<int>(points.rows());
  const bool check = !f.regular_at_zero();
  const double* base = points.data();
  double total = 0.0;
  for (int i = 0; i < count; ++i) {
    const double* xi = base + static_cast<std::ptrdiff_t>(i) * dim;
    for (int j = i + 1; j < count; ++j) {
      const double r = squared_distance(xi, base + static_cast<std::ptrdiff_t>(j) * dim, dim);
      if (check && r <= kCoincidentDistance) coincident(i, j);
      total += f.value(r);
    }
  }
  return total;
}

double step_energy_change(const Matrix& points, const Matrix& direction, double t, const BoundPotential& f) {
  const int count = static_cast<int>(points.cols());
  const int dim = static_cast<int>(points.rows());
  const bool check = !f.regular_at_zero();
  const double* base = points.data();
  const double* dbase = direction.data();
  // |x_i - t d_i| - 1 for every point, taking |x_i| = 1.
  std::vector<double> u(count);
  for (int i = 0; i < count; ++i) {
    const double a = t * (t * direction.col(i).squaredNorm() - 2.0 * direction.col(i).dot(points.col(i)));
    u[i] = std::expm1(0.5 * std::log1p(a));
  }
  std::vector<double> rows(count, 0.0);
  std::atomic<long> bad{-1};

#pragma omp parallel for schedule(dynamic, 8) if (use_threads(count))
  for (int i = 0; i < count; ++i) {
    const double* xi = base + static_cast<std::ptrdiff_t>(i) * dim;
    const double* di = dbase + static_cast<std::ptrdiff_t>(i) * dim;
    double row = 0.0;
    for (int j = i + 1; j < count; ++j) {
      const double* xj = base + static_cast<std::ptrdiff_t>(j) * dim;
      const double* dj = dbase + static_cast<std::ptrdiff_t>(j) * dim;
      double r = 0.0, c = 0.0, b = 0.0, q = 0.0;
      for (int k = 0; k < dim; ++k) {
        const double d = xi[k] - xj[k];
        r += d * d;
        c += xi[k] * xj[k];
        b += xi[k] * dj[k] + di[k] * xj[k];
        q += di[k] * dj[k];
      }
      // New inner product (c + A) / ((1 + u_i)(1 + u_j)); the squared
      // distance changes by -2 times the change in inner product.
      const double m = u[i] * u[j] + u[i] + u[j];
      const double change = (t * (t * q - b) - c * m) / (1.0 + m);
      const double delta = -2.0 * change;
      if (check && (r <= kCoincidentDistance || r + delta <= kCoincidentDistance)) {
        long expected = -1;
        bad.compare_exchange_strong(expected, static_cast<long>(i) * count + j);
        continue;
      }
      row += f.difference(r, delta);
    }
    rows[i] = row;
  }
  if (bad >= 0) coincident(static_cast<int>(bad / count), static_cast<int>(bad % count));
  double total = 0.0;
  for (double row : rows) total += row;
  return total;
}

Matrix ambient_gradient(const Matrix& points, const BoundPotential& f) {
  const int count = static_cast<int>(points.cols());
  const int dim = static_cast<int>(points.rows());
  const bool check = !f.regular_at_zero();
  const double* base = points.data();
  Matrix grad(dim, count);
  std::atomic<long> bad{-1};

#pragma omp parallel for schedule(static) if (use_threads(count))
  for (int i = 0; i < count; ++i) {
    const double* xi = base + static_cast<std::ptrdiff_t>(i) * dim;
    double* gi = grad.data() + static_cast<std::ptrdiff_t>(i) * dim;
    for (int k = 0; k < dim; ++k) gi[k] = 0.0;
    for (int j = 0; j < count; ++j) {
      if (j == i) continue;
      const double* xj = base + static_cast<std::ptrdiff_t>(j) * dim;
      const double r = squared_distance(xi, xj, dim);
      if (check && r <= kCoincidentDistance) {
        bad.store(static_cast<long>(i) * count + j);
        continue;
      }
      const double c = 2.0 * f.derivative(r);
      for (int k = 0; k < dim; ++k) gi[k] += c * (xi[k] - xj[k]);
    }
  }
  if (const long b = bad.load(); b >= 0) coincident(static_cast<int>(b / count), static_cast<int>(b % count));
  return grad;
}

Matrix tangent_hessian(const Matrix& points, const BoundPotential& f, std::vector<Matrix>* frames) {
  const int count = static_cast<int>(points.cols());
  const int dim = static_cast<int>(points.rows());
  const int t = dim - 1;
  const bool check = !f.regular_at_zero();

  std::vector<Matrix> basis(count);
  for (int i = 0; i < count; ++i) basis[i] = tangent_frame(points.col(i));

  Matrix h = Matrix::Zero(static_cast<Eigen::Index>(t) * count, static_cast<Eigen::Index>(t) * count);
  std::atomic<long> bad{-1};

#pragma omp parallel for schedule(dynamic, 4) if (use_threads(count))
  for (int i = 0; i < count; ++i) {
    Matrix diag = Matrix::Zero(dim, dim);
    Vector g = Vector::Zero(dim);
    for (int j = 0; j < count; ++j) {
      if (j == i) continue;
      const Vector d = points.col(i) - points.col(j);
      const double r = d.squaredNorm();
      if (check && r <= kCoincidentDistance) {
        bad.store(static_cast<long>(i) * count + j);
        continue;
      }
      const RadialTerms terms = f.terms(r);
      Matrix m = (4.0 * terms.d2f) * (d * d.transpose());
      m.diagonal().array() += 2.0 * terms.df;
      g.noalias() += (2.0 * terms.df) * d;
      diag += m;
      h.block(static_cast<Eigen::Index>(i) * t, static_cast<Eigen::Index>(j) * t, t, t) =
          -(basis[i].transpose() * m * basis[j]);
    }
    const double lambda = g.dot(points.col(i));
    Matrix block = basis[i].transpose() * diag * basis[i];
    block.diagonal().array() -= lambda;
    h.block(static_cast<Eigen::Index>(i) * t, static_cast<Eigen::Index>(i) * t, t, t) = block;
  }
  if (const long b = bad.load(); b >= 0) coincident(static_cast<int>(b / count), static_cast<int>(b % count));
  if (frames) *frames = std::move(basis);
  return h;
}

Matrix gram(const Matrix& points) {
  const int count = static_cast<int>(points.cols());
  Matrix g(count, count);
#pragma omp parallel for schedule(static) if (use_threads(count))
  for (int i = 0; i < count; ++i) {
    for (int j = 0; j < count; ++j) g(i, j) = points.col(i).dot(points.col(j));
  }
  return g;
}

namespace reference {

double energy_rows(const Matrix& points, const BoundPotential& f) {
  const int count = static_cast<int>(points.cols());
  double total = 0.0;
  for (int i = 0; i < count; ++i) {
    double row = 0.0;
    for (int j = i + 1; j < count; ++j) row += f.value((points.col(i) - points.col(j)).squaredNorm());
    total += row;
  }
  return total;
}

double energy_change(const Matrix& points, const Matrix& moved, const BoundPotential& f) {
  const int count = static_cast<int>(points.cols());
  const int dim = static_cast<int>(points.rows());
  const bool check = !f.regular_at_zero();
  const Matrix shift = moved - points;
  const double* base = points.data();
  const double* dbase = shift.data();
  double total = 0.0;
  for (int i = 0; i < count; ++i) {
    const double* xi = base + static_cast<std::ptrdiff_t>(i) * dim;
    const double* si = dbase + static_cast<std::ptrdiff_t>(i) * dim;
    for (int j = i + 1; j < count; ++j) {
      const double* xj = base + static_cast<std::ptrdiff_t>(j) * dim;
      const double* sj = dbase + static_cast<std::ptrdiff_t>(j) * dim;
      double r = 0.0;
      double delta = 0.0;
      for (int k = 0; k < dim; ++k) {
        const double d = xi[k] - xj[k];
        const double e = si[k] - sj[k];
        r += d * d;
        delta += e * (2.0 * d + e);
      }
      if (check && (r <= kCoincidentDistance || r + delta <= kCoincidentDistance)) coincident(i, j);
      total += f.difference(r, delta);
    }
  }
  return total;
}

Matrix ambient_gradient(const Matrix& points, const BoundPotential& f) {
  const int count = static_cast<int>(points.cols());
  Matrix grad = Matrix::Zero(points.rows(), count);
  for (int i = 0; i < count; ++i) {
    for (int j = i + 1; j < count; ++j) {
      const Vector d = points.col(i) - points.col(j);
      const Vector force = 2.0 * f.derivative(d.squaredNorm()) * d;
      grad.col(i) += force;
      grad.col(j) -= force;
    }
  }
  return grad;
}

Matrix tangent_hessian(const Matrix& points, const BoundPotential& f) {
  const int count = static_cast<int>(points.cols());
  const int dim = static_cast<int>(points.rows());
  Matrix ambient = Matrix::Zero(dim * count, dim * count);
  for (int i = 0; i < count; ++i) {
    for (int j = i + 1; j < count; ++j) {
      const Vector d = points.col(i) - points.col(j);
      const RadialTerms terms = f.terms(d.squaredNorm());
      Matrix m = 4.0 * terms.d2f * d * d.transpose() + 2.0 * terms.df * Matrix::Identity(dim, dim);
      ambient.block(i * dim, i * dim, dim, dim) += m;
      ambient.block(j * dim, j * dim, dim, dim) += m;
      ambient.block(i * dim, j * dim, dim, dim) -= m;
      ambient.block(j * dim, i * dim, dim, dim) -= m;
    }
  }
  const Matrix grad = ambient_gradient(points, f);
  Matrix frames = Matrix::Zero(dim * count, (dim - 1) * count);
  for (int i = 0; i < count; ++i) {
    frames.block(i * dim, i * (dim - 1), dim, dim - 1) = tangent_frame(points.col(i));
  }
  Matrix h = frames.transpose() * ambient * frames;
  for (int i = 0; i < count; ++i) {
    const double lambda = grad.col(i).dot(points.col(i));
    for (int c = 0; c < dim - 1; ++c) h(i * (dim - 1) + c, i * (dim - 1) + c) -= lambda;
  }
  return h;
}

Matrix gram(const Matrix& points) { return points.transpose() * points; }

}  // namespace reference

}  // namespace sphere::kernels
