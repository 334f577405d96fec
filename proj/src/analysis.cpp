#include "sphere/analysis.hpp"

#include "sphere/error.hpp"
#include "sphere/kernels.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace sphere {

std::vector<std::vector<int>> DistanceSpectrum::class_table(int count) const {
  std::vector<std::vector<int>> table(count, std::vector<int>(count, -1));
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (const auto& [i, j] : classes[c].pairs) table[i][j] = table[j][i] = static_cast<int>(c);
  }
  return table;
}

DistanceSpectrum distance_spectrum(const PointConfig& config, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "spectrum tolerance must be positive");
  const Matrix& x = config.points();
  const int count = config.size();
  struct Entry {
    double d;
    int i, j;
  };
  std::vector<Entry> entries;
  entries.reserve(static_cast<std::size_t>(count) * (count - 1) / 2);
  for (int i = 0; i < count; ++i) {
    for (int j = i + 1; j < count; ++j) entries.push_back({(x.col(i) - x.col(j)).squaredNorm(), i, j});
  }
  std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.d < b.d; });

  DistanceSpectrum spectrum;
  spectrum.tolerance = tol;
  double sum = 0.0;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const Entry& e = entries[k];
    if (k == 0 || e.d - entries[k - 1].d > tol * std::max(1.0, e.d)) {
      if (!spectrum.classes.empty()) spectrum.classes.back().squared_distance = sum / spectrum.classes.back().multiplicity;
      spectrum.classes.emplace_back();
      sum = 0.0;
    }
    DistanceClass& c = spectrum.classes.back();
    c.pairs.emplace_back(e.i, e.j);
    ++c.multiplicity;
    sum += e.d;
  }
  if (!spectrum.classes.empty()) spectrum.classes.back().squared_distance = sum / spectrum.classes.back().multiplicity;
  for (std::size_t c = 1; c < spectrum.classes.size(); ++c) {
    const double a = spectrum.classes[c - 1].squared_distance;
    const double b = spectrum.classes[c].squared_distance;
    if (b - a <= 10.0 * tol * std::max(1.0, b)) spectrum.ambiguous = true;
  }
  return spectrum;
}

BalanceResult is_balanced(const PointConfig& config, double tol, double spectrum_tol) {
  const DistanceSpectrum spectrum = distance_spectrum(config, spectrum_tol);
  const Matrix& x = config.points();
  const int n = config.dimension();
  const int count = config.size();
  const int classes = static_cast<int>(spectrum.classes.size());
  BalanceResult result;
  // sums[c] holds, column by column, the class-c neighbour sum of each point.
  std::vector<Matrix> sums(classes, Matrix::Zero(n, count));
  for (int c = 0; c < classes; ++c) {
    for (const auto& [i, j] : spectrum.classes[c].pairs) {
      sums[c].col(i) += x.col(j);
      sums[c].col(j) += x.col(i);
    }
  }
  for (int i = 0; i < count && result.balanced; ++i) {
    for (int c = 0; c < classes; ++c) {
      const Vector s = sums[c].col(i);
      const double violation = (s - s.dot(x.col(i)) * x.col(i)).norm();
      result.violation = std::max(result.violation, violation);
      if (violation > tol) {
        result.balanced = false;
        result.point = i;
        result.distance_class = c;
        break;
      }
    }
  }
  return result;
}

int parameter_count(const PointConfig& config, double tol, double spectrum_tol) {
  const DistanceSpectrum spectrum = distance_spectrum(config, spectrum_tol);
  const Matrix& x = config.points();
  const int n = config.dimension();
  const int count = config.size();
  const int classes = static_cast<int>(spectrum.classes.size());
  Matrix forces = Matrix::Zero(static_cast<Eigen::Index>(n) * count, classes);
  for (int c = 0; c < classes; ++c) {
    for (const auto& [i, j] : spectrum.classes[c].pairs) {
      const Vector d = x.col(i) - x.col(j);
      forces.col(c).segment(i * n, n) += d;
      forces.col(c).segment(j * n, n) -= d;
    }
    for (int i = 0; i < count; ++i) {
      auto f = forces.col(c).segment(i * n, n);
      f -= f.dot(x.col(i)) * x.col(i);
    }
  }
  const Eigen::JacobiSVD<Matrix> svd(forces);
  const Vector& s = svd.singularValues();
  if (s.size() == 0) return 0;
  const double cutoff = tol * std::max(1.0, s(0));
  return static_cast<int>((s.array() > cutoff).count());
}

double gegenbauer(int n, int k, double t) {
  if (k == 0) return 1.0;
  const double lambda = 0.5 * (n - 2);
  double prev = 1.0;
  double cur = t;
  for (int j = 1; j < k; ++j) {
    const double next = (2.0 * (j + lambda) * t * cur - j * prev) / (j + 2.0 * lambda);
    prev = cur;
    cur = next;
  }
  return cur;
}

std::vector<double> gegenbauer_sums(const PointConfig& config, int max_degree) {
  if (max_degree < 1) throw Error(ErrorKind::InvalidArgument, "max_degree must be at least 1");
  const Matrix g = kernels::gram(config.points());
  const double lambda = 0.5 * (config.dimension() - 2);
  std::vector<double> sums(max_degree, 0.0);
  std::vector<double> values(max_degree + 1);
  for (Eigen::Index i = 0; i < g.rows(); ++i) {
    for (Eigen::Index j = 0; j < g.cols(); ++j) {
      const double t = std::clamp(g(i, j), -1.0, 1.0);
      values[0] = 1.0;
      values[1] = t;
      for (int k = 1; k < max_degree; ++k) {
        values[k + 1] = (2.0 * (k + lambda) * t * values[k] - k * values[k - 1]) / (k + 2.0 * lambda);
      }
      for (int k = 1; k <= max_degree; ++k) sums[k - 1] += values[k];
    }
  }
  return sums;
}

int design_strength(const PointConfig& config, int max_degree) {
  const std::vector<double> sums = gegenbauer_sums(config, max_degree);
  const double bound = 1e-8 * static_cast<double>(config.size()) * config.size();
  int t = 0;
  while (t < max_degree && std::abs(sums[t]) <= bound) ++t;
  return t;
}

HopfImage hopf_map(const PointConfig& config) {
  if (config.dimension() != 4) throw Error(ErrorKind::InvalidArgument, "the Hopf map needs points in R^4");
  HopfImage out;
  std::vector<Vector> images;
  for (int i = 0; i < config.size(); ++i) {
    const auto x = config.point(i);
    Vector y(3);
    y << 2.0 * (x(0) * x(2) + x(1) * x(3)), 2.0 * (x(1) * x(2) - x(0) * x(3)),
        x(0) * x(0) + x(1) * x(1) - x(2) * x(2) - x(3) * x(3);
    y.normalize();
    int found = -1;
    for (std::size_t k = 0; k < images.size(); ++k) {
      if ((images[k] - y).norm() <= kHopfMergeTolerance) {
        found = static_cast<int>(k);
        break;
      }
    }
    if (found < 0) {
      found = static_cast<int>(images.size());
      images.push_back(y);
      out.multiplicity.push_back(0);
    }
    ++out.multiplicity[found];
    out.fiber_of.push_back(found);
  }
  Matrix m(3, static_cast<Eigen::Index>(images.size()));
  for (std::size_t k = 0; k < images.size(); ++k) m.col(k) = images[k];
  out.images = PointConfig::normalized(std::move(m));
  return out;
}

OrthogonalRealization realize_automorphism(const PointConfig& config, const std::vector<int>& perm, double tol) {
  const int count = config.size();
  const int n = config.dimension();
  if (static_cast<int>(perm.size()) != count) throw Error(ErrorKind::NotAnAutomorphism, "permutation has the wrong length");
  std::vector<char> seen(count, 0);
  for (int p : perm) {
    if (p < 0 || p >= count || seen[p]) throw Error(ErrorKind::NotAnAutomorphism, "not a permutation");
    seen[p] = 1;
  }
  const Matrix& x = config.points();
  const Eigen::JacobiSVD<Matrix> span(x);
  const Vector& sv = span.singularValues();
  if (sv.size() < n || sv(n - 1) <= 1e-9 * std::max(1.0, sv(0))) {
    throw Error(ErrorKind::SpanDeficient, "points do not span R^" + std::to_string(n));
  }
  const Matrix g = kernels::gram(x);
  for (int i = 0; i < count; ++i) {
    for (int j = 0; j < count; ++j) {
      if (std::abs(g(perm[i], perm[j]) - g(i, j)) > tol) {
        throw Error(ErrorKind::NotAnAutomorphism, "inner products are not preserved");
      }
    }
  }
  Matrix y(n, count);
  for (int i = 0; i < count; ++i) y.col(i) = x.col(perm[i]);
  const Eigen::JacobiSVD<Matrix> svd(y * x.transpose(), Eigen::ComputeFullU | Eigen::ComputeFullV);
  OrthogonalRealization out;
  out.q = svd.matrixU() * svd.matrixV().transpose();
  out.determinant = out.q.determinant();
  out.residual = (out.q * x - y).colwise().norm().maxCoeff();
  if (out.residual > 1e-8) {
    throw Error(ErrorKind::NotAnAutomorphism, "no orthogonal map realizes the permutation");
  }
  return out;
}

}  // namespace sphere
