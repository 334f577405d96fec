#include "sphere/constructions.hpp"

#include "sphere/error.hpp"

#include <Eigen/QR>

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

namespace sphere {

namespace {

// Orthonormal basis (columns) of the orthogonal complement of span(vectors).
Matrix complement_basis(const Matrix& vectors) {
  const Eigen::Index n = vectors.rows();
  Eigen::HouseholderQR<Matrix> qr(vectors);
  const Matrix q = qr.householderQ() * Matrix::Identity(n, n);
  return q.rightCols(n - vectors.cols());
}

Matrix select_roots(const Matrix& roots, const Vector& a, double at_a, const Vector* b, double at_b) {
  std::vector<Eigen::Index> keep;
  for (Eigen::Index c = 0; c < roots.cols(); ++c) {
    if (std::abs(roots.col(c).dot(a) - at_a) > 1e-12) continue;
    if (b && std::abs(roots.col(c).dot(*b) - at_b) > 1e-12) continue;
    keep.push_back(c);
  }
  Matrix out(roots.rows(), static_cast<Eigen::Index>(keep.size()));
  for (std::size_t k = 0; k < keep.size(); ++k) out.col(k) = roots.col(keep[k]);
  return out;
}

Matrix join(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows(), a.cols() + b.cols());
  out << a, b;
  return out;
}

Matrix reference_pair() {
  Matrix ab(8, 2);
  ab.col(0) = e8_reference_a();
  ab.col(1) = e8_reference_b();
  return ab;
}

// Sign of a permutation given as a vector of images.
int parity(const std::array<int, 4>& perm) {
  int inversions = 0;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) inversions += perm[i] > perm[j];
  }
  return inversions % 2;
}

// F8 = F2[x]/(x^3 + x + 1), elements as 3-bit polynomials.
int f8_mul(int a, int b) {
  int product = 0;
  for (int k = 0; k < 3; ++k) {
    if ((b >> k) & 1) product ^= a << k;
  }
  for (int k = 4; k >= 3; --k) {
    if ((product >> k) & 1) product ^= 0b1011 << (k - 3);
  }
  return product;
}

}  // namespace

double c_n_alpha(int n) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "C_n needs n >= 2");
  const double nn = n;
  const auto cubic = [nn](double x) {
    return ((nn * nn * nn - 4.0 * nn * nn + 4.0 * nn) * x - nn * nn) * x * x - nn * x + 1.0;
  };
  double lo = 0.0;  // cubic(0) = 1 > 0
  double hi = 1.0 / nn;  // cubic(1/n) = 4(1 - n)/n^2 < 0
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (cubic(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

PointConfig build_c_n(int n) {
  const double alpha = c_n_alpha(n);
  const double beta = std::sqrt((alpha * (n - 1) + 1.0) / n);
  const Matrix u = regular_simplex(n);
  Matrix x = Matrix::Zero(n, 2 * n + 1);
  x(n - 1, 0) = 1.0;
  for (int i = 0; i < n; ++i) {
    x.col(1 + i).head(n - 1) = std::sqrt(1.0 - alpha * alpha) * u.col(i);
    x(n - 1, 1 + i) = alpha;
    x.col(1 + n + i).head(n - 1) = -std::sqrt(1.0 - beta * beta) * u.col(i);
    x(n - 1, 1 + n + i) = -beta;
  }
  return PointConfig::normalized(std::move(x));
}

DiploParameters diplo_parameters(int n) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "diplo-simplex needs n >= 2");
  DiploParameters p;
  if (n % 2 == 1) {
    const double k = (n + 1) / 2;
    p.alpha = std::sqrt((2.0 * k - 2.0) / (2.0 * k - 1.0));
  } else {
    const double k = n / 2;
    p.alpha = std::sqrt((2.0 * k + 1.0) * (2.0 * k - 2.0)) / (2.0 * k);
    p.beta = 1.0 / (2.0 * k);
  }
  return p;
}

PointConfig build_diplo_simplex(int n) { return perturb_diplo_simplex(n, diplo_parameters(n)); }

PointConfig perturb_diplo_simplex(int n, const DiploParameters& p) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "diplo-simplex needs n >= 2");
  const bool odd = n % 2 == 1;
  const int k = odd ? (n + 1) / 2 : n / 2;
  const Matrix s = regular_simplex(k);
  const int m = k - 1;  // dimension of each simplex
  Matrix x = Matrix::Zero(n, 2 * n + 2);
  const auto place = [&](int col, double cv, double cw, int i, double ct, double cz) {
    if (m > 0) {
      x.col(col).segment(0, m) = cv * s.col(i);
      x.col(col).segment(m, m) = cw * s.col(i);
    }
    x(2 * m, col) = ct;
    if (!odd) x(2 * m + 1, col) = cz;
  };

  if (odd) {
    if (!(p.alpha > 0.0 && p.alpha < 1.0) || !(p.beta >= 0.0 && p.beta <= 1.0)) {
      throw Error(ErrorKind::ParameterOutOfRange, "odd diplo-simplex needs 0 < alpha < 1, 0 <= beta <= 1");
    }
    const double a = p.alpha;
    const double c = std::sqrt(1.0 - a * a);
    const double b = p.beta;
    const double rb = std::sqrt(1.0 - b * b);
    for (int i = 0; i < k; ++i) {
      place(i, a, 0.0, i, c, 0.0);
      place(k + i, 0.0, a, i, c, 0.0);
      place(2 * k + i, -a * b, -a * rb, i, -c, 0.0);
      place(3 * k + i, -a * rb, a * b, i, -c, 0.0);
    }
  } else {
    const double a = p.alpha;
    const double b = p.beta;
    const double g = p.gamma;
    const bool alpha_ok = k == 1 ? a >= 0.0 : a > 0.0;
    if (!alpha_ok || !(b >= 0.0) || !(a * a + b * b <= 1.0) || !(g >= 0.0 && g <= 1.0)) {
      throw Error(ErrorKind::ParameterOutOfRange,
                  "even diplo-simplex needs alpha > 0, beta >= 0, alpha^2 + beta^2 <= 1, 0 <= gamma <= 1");
    }
    const double c = std::sqrt(std::max(0.0, 1.0 - a * a - b * b));
    const double rg = std::sqrt(1.0 - g * g);
    x(n - 1, 0) = 1.0;
    x(n - 1, 1) = -1.0;
    for (int i = 0; i < k; ++i) {
      place(2 + i, a, 0.0, i, c, b);
      place(2 + k + i, 0.0, a, i, c, -b);
      place(2 + 2 * k + i, -a * g, -a * rg, i, -c, b);
      place(2 + 3 * k + i, -a * rg, a * g, i, -c, -b);
    }
  }
  return PointConfig::normalized(std::move(x));
}

PointConfig build_40_in_10() {
  // Basis index of every pair {i, j} of Z/5.
  std::array<std::array<int, 5>, 5> index{};
  int next = 0;
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) index[i][j] = index[j][i] = next++;
  }
  const double unit = 1.0 / std::sqrt(6.0);
  std::vector<Vector> points;
  for (int type = 0; type < 5; ++type) {
    std::array<std::array<int, 2>, 6> pairs{};
    int count = 0;
    for (int i = 0; i < 5; ++i) {
      for (int j = i + 1; j < 5; ++j) {
        if (i != type && j != type) pairs[count++] = {i, j};
      }
    }
    for (int signs = 0; signs < 64; ++signs) {
      std::array<int, 5> degree{};
      const int edges = std::popcount(static_cast<unsigned>(signs));
      for (int e = 0; e < 6; ++e) {
        if ((signs >> e) & 1) {
          ++degree[pairs[e][0]];
          ++degree[pairs[e][1]];
        }
      }
      const auto d = [&](int offset) { return degree[(type + offset + 5) % 5] % 2; };
      const int parity_e = edges % 2;
      if (d(1) != parity_e || d(2) != parity_e || d(-1) == parity_e || d(-2) == parity_e) continue;
      Vector v = Vector::Zero(10);
      for (int e = 0; e < 6; ++e) v(index[pairs[e][0]][pairs[e][1]]) = ((signs >> e) & 1) ? -unit : unit;
      points.push_back(v);
    }
  }
  Matrix x(10, static_cast<Eigen::Index>(points.size()));
  for (std::size_t i = 0; i < points.size(); ++i) x.col(i) = points[i];
  return PointConfig::normalized(std::move(x));
}

double competitor_best_alpha() { return (std::sqrt(109.0) - 1.0) / 54.0; }

PointConfig build_40_in_10_competitor(double alpha) {
  if (!(alpha > 0.0 && 27.0 * alpha * alpha <= 1.0)) {
    throw Error(ErrorKind::ParameterOutOfRange, "competitor needs 0 < alpha <= 1/sqrt(27)");
  }
  const Matrix t = regular_simplex(4);
  std::array<std::array<Vector, 4>, 4> w;
  Matrix x = Matrix::Zero(10, 40);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      w[i][j] = Vector(9);
      for (int p = 0; p < 3; ++p) {
        for (int q = 0; q < 3; ++q) w[i][j](3 * p + q) = t(p, i) * t(q, j);
      }
      x.col(4 * i + j).head(9) = w[i][j];
    }
  }
  const double height = std::sqrt(std::max(0.0, 1.0 - 27.0 * alpha * alpha));
  std::array<int, 4> perm = {0, 1, 2, 3};
  int col = 16;
  do {
    Vector y = Vector::Zero(9);
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) y += (perm[i] == j ? -3.0 * alpha : alpha) * w[i][j];
    }
    x.col(col).head(9) = (9.0 / 16.0) * y;
    x(9, col) = parity(perm) == 0 ? height : -height;
    ++col;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return PointConfig::normalized(std::move(x));
}

GramMatrix gram_64_in_14() {
  Matrix g(64, 64);
  for (int p = 0; p < 64; ++p) {
    const int x1 = p >> 3, x2 = p & 7;
    for (int q = 0; q < 64; ++q) {
      const int y1 = q >> 3, y2 = q & 7;
      double v;
      if (p == q) {
        v = 1.0;
      } else if (x1 == y1) {
        v = -1.0 / 7.0;
      } else {
        const int s = x1 ^ y1;
        const int cube = f8_mul(f8_mul(s, s), s);
        const int other = f8_mul(f8_mul(x1, y1), s);
        const int sum2 = x2 ^ y2;
        v = (sum2 == cube || sum2 == other) ? -3.0 / 7.0 : 1.0 / 7.0;
      }
      g(p, q) = v;
    }
  }
  return GramMatrix(std::move(g));
}

PointConfig build_64_in_14_gram() { return realize_from_gram(gram_64_in_14(), 14); }

Matrix basic_tetrahedra_96() {
  const Matrix t = regular_simplex(4);
  Matrix v = Matrix::Zero(9, 12);
  for (int b = 0; b < 3; ++b) v.block(3 * b, 4 * b, 3, 4) = t;
  return v;
}

PointConfig build_96_in_9() {
  const Matrix v = basic_tetrahedra_96();
  static constexpr std::array<std::array<int, 4>, 3> patterns = {{
      {1, 1, -1, -1},  // label 0
      {1, -1, 1, -1},  // label 1
      {1, -1, -1, 1},  // label -1
  }};
  Matrix x(9, 96);
  int col = 0;
  for (int i = 0; i < 12; ++i) x.col(col++) = v.col(i);
  for (int i = 0; i < 12; ++i) x.col(col++) = -v.col(i);
  for (int l1 = 0; l1 < 3; ++l1) {
    for (int l2 = 0; l2 < 3; ++l2) {
      const int l3 = (6 - l1 - l2) % 3;
      const std::array<int, 3> labels = {l1, l2, l3};
      for (int signs = 0; signs < 8; ++signs) {
        Vector y = Vector::Zero(9);
        for (int b = 0; b < 3; ++b) {
          const double sign = ((signs >> b) & 1) ? -1.0 : 1.0;
          for (int i = 0; i < 4; ++i) y += (sign * patterns[labels[b]][i] / 3.0) * v.col(4 * b + i);
        }
        x.col(col++) = 0.75 * y;
      }
    }
  }
  return PointConfig::normalized(std::move(x));
}

Matrix e8_roots() {
  Matrix r(8, 240);
  int col = 0;
  for (int i = 0; i < 8; ++i) {
    for (int j = i + 1; j < 8; ++j) {
      for (int s = 0; s < 4; ++s) {
        Vector v = Vector::Zero(8);
        v(i) = (s & 1) ? -1.0 : 1.0;
        v(j) = (s & 2) ? -1.0 : 1.0;
        r.col(col++) = v;
      }
    }
  }
  for (int s = 0; s < 256; ++s) {
    if (std::popcount(static_cast<unsigned>(s)) % 2 != 0) continue;
    for (int i = 0; i < 8; ++i) r(i, col) = ((s >> i) & 1) ? -0.5 : 0.5;
    ++col;
  }
  return r;
}

Vector e8_reference_a() {
  Vector a = Vector::Zero(8);
  a(0) = 1.0;
  a(1) = 1.0;
  return a;
}

Vector e8_reference_b() {
  Vector b = Vector::Zero(8);
  b(0) = -1.0;
  b(2) = 1.0;
  return b;
}

Matrix e7_roots() { return select_roots(e8_roots(), e8_reference_a(), 0.0, nullptr, 0.0); }

Matrix e6_roots() {
  const Vector b = e8_reference_b();
  return select_roots(e8_roots(), e8_reference_a(), 0.0, &b, 0.0);
}

PointConfig build_schlafli() {
  const Vector b = e8_reference_b();
  const Matrix roots = select_roots(e8_roots(), e8_reference_a(), 1.0, &b, 0.0);
  return PointConfig::normalized(complement_basis(reference_pair()).transpose() * roots);
}

PointConfig build_equiangular_56() {
  const Matrix roots = select_roots(e8_roots(), e8_reference_a(), 1.0, nullptr, 0.0);
  return PointConfig::normalized(complement_basis(e8_reference_a()).transpose() * roots);
}

PointConfig build_e6_union() {
  const Matrix basis = complement_basis(reference_pair());
  const Matrix roots = basis.transpose() * e6_roots();
  const Matrix weights = build_schlafli().points();
  return PointConfig::normalized(join(roots, join(weights, -weights)));
}

PointConfig build_e7_union() {
  const Matrix basis = complement_basis(e8_reference_a());
  const Matrix roots = basis.transpose() * e7_roots();
  return PointConfig::normalized(join(roots, build_equiangular_56().points()));
}

std::vector<std::vector<int>> hoffman_singleton_graph() {
  std::vector<std::vector<int>> adj(50, std::vector<int>(50, 0));
  const auto p = [](int h, int j) { return 5 * h + ((j % 5) + 5) % 5; };
  const auto q = [](int i, int j) { return 25 + 5 * i + ((j % 5) + 5) % 5; };
  const auto link = [&](int a, int b) { adj[a][b] = adj[b][a] = 1; };
  for (int h = 0; h < 5; ++h) {
    for (int j = 0; j < 5; ++j) {
      link(p(h, j), p(h, j + 1));
      link(q(h, j), q(h, j + 2));
      for (int i = 0; i < 5; ++i) link(p(h, j), q(i, h * i + j));
    }
  }
  return adj;
}

PointConfig build_hs_subconstituent() {
  const auto adj = hoffman_singleton_graph();
  std::vector<int> h;
  for (int v = 1; v < 50; ++v) {
    if (!adj[0][v]) h.push_back(v);
  }
  const int count = static_cast<int>(h.size());
  Matrix g = Matrix::Identity(count, count);
  for (int a = 0; a < count; ++a) {
    for (int b = 0; b < count; ++b) {
      if (a == b) continue;
      if (adj[h[a]][h[b]]) {
        g(a, b) = -0.5;
        continue;
      }
      int common = 0;
      for (int c : h) common += adj[h[a]][c] && adj[h[b]][c];
      g(a, b) = common == 0 ? -0.2 : 0.1;
    }
  }
  return realize_from_gram(GramMatrix(std::move(g)), 14);
}

PointConfig build_layered_74() {
  Matrix x = Matrix::Zero(5, 74);
  int col = 0;
  // 24-cell as the normalized D4 roots.
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      for (int s = 0; s < 4; ++s) {
        x(i, col) = ((s & 1) ? -1.0 : 1.0) / std::sqrt(2.0);
        x(j, col) = ((s & 2) ? -1.0 : 1.0) / std::sqrt(2.0);
        ++col;
      }
    }
  }
  // Dual 24-cell: +-e_i and (+-1/2)^4.
  Matrix dual = Matrix::Zero(4, 24);
  for (int i = 0; i < 4; ++i) {
    dual(i, 2 * i) = 1.0;
    dual(i, 2 * i + 1) = -1.0;
  }
  for (int s = 0; s < 16; ++s) {
    for (int i = 0; i < 4; ++i) dual(i, 8 + s) = ((s >> i) & 1) ? -0.5 : 0.5;
  }
  const double height = std::sqrt(std::sqrt(5.0) - 2.0);
  const double radius = std::sqrt(1.0 - height * height);
  for (const double side : {1.0, -1.0}) {
    for (int c = 0; c < 24; ++c) {
      x.col(col).head(4) = radius * dual.col(c);
      x(4, col) = side * height;
      ++col;
    }
  }
  x(4, col++) = 1.0;
  x(4, col++) = -1.0;
  return PointConfig::normalized(std::move(x));
}

PointConfig build_fifteen_15_4() { return realize_from_gram(build_gram_16_in_5(0.0, 0.0).block(1, 15), 4); }

}  // namespace sphere
