#pragma once

#include "sphere/point_config.hpp"
#include "sphere/random.hpp"

#include <Eigen/QR>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace sphere::testing {

inline std::string fixture(const std::string& name) { return std::string(SPHERE_FIXTURES) + "/" + name; }

inline Matrix random_orthogonal(int n, std::uint64_t seed) {
  const CounterRng rng(seed);
  Matrix a(n, n);
  for (int i = 0; i < n * n; ++i) a(i % n, i / n) = rng.normal(static_cast<std::uint64_t>(i));
  Eigen::HouseholderQR<Matrix> qr(a);
  return qr.householderQ();
}

/// Sorted inner products between distinct points.
inline std::vector<double> sorted_inner_products(const PointConfig& c) {
  const Matrix g = c.gram();
  std::vector<double> out;
  for (int i = 0; i < c.size(); ++i) {
    for (int j = i + 1; j < c.size(); ++j) out.push_back(g(i, j));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Distinct values of a sorted list, merged at tol, with multiplicities.
inline std::vector<std::pair<double, int>> value_counts(const std::vector<double>& sorted, double tol = 1e-9) {
  std::vector<std::pair<double, int>> out;
  for (double v : sorted) {
    if (out.empty() || v - out.back().first > tol) out.push_back({v, 0});
    ++out.back().second;
  }
  return out;
}

/// Regular pentagon in the (e0, e1) plane together with +-e2 and +-e3.
inline PointConfig nine_in_four() {
  Matrix p = Matrix::Zero(4, 9);
  for (int k = 0; k < 5; ++k) {
    p(0, k) = std::cos(2.0 * std::numbers::pi * k / 5.0);
    p(1, k) = std::sin(2.0 * std::numbers::pi * k / 5.0);
  }
  p(2, 5) = 1.0;
  p(2, 6) = -1.0;
  p(3, 7) = 1.0;
  p(3, 8) = -1.0;
  return PointConfig(p);
}

}  // namespace sphere::testing
