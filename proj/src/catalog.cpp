#include "sphere/catalog.hpp"

#include "sphere/codes.hpp"
#include "sphere/constructions.hpp"
#include "sphere/error.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>

namespace sphere {

namespace {

using Complex = std::complex<double>;

const double kPhi = std::numbers::phi;

Matrix from_columns(const std::vector<Vector>& cols) {
  Matrix x(cols.front().size(), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t i = 0; i < cols.size(); ++i) x.col(i) = cols[i];
  return x;
}

Vector c2(Complex z, Complex w) {
  Vector v(4);
  v << z.real(), z.imag(), w.real(), w.imag();
  return v;
}

Matrix edge_midpoints(const Matrix& simplex) {
  std::vector<Vector> mids;
  for (Eigen::Index i = 0; i < simplex.cols(); ++i) {
    for (Eigen::Index j = i + 1; j < simplex.cols(); ++j) mids.push_back((simplex.col(i) + simplex.col(j)).normalized());
  }
  return from_columns(mids);
}

// Hemicube with even numbers of minus signs, rescaled to the unit sphere.
Matrix hemicube_points(int n) {
  std::vector<Vector> pts;
  const double unit = 1.0 / std::sqrt(static_cast<double>(n));
  for (unsigned s = 0; s < (1u << n); ++s) {
    if (std::popcount(s) % 2) continue;
    Vector v(n);
    for (int i = 0; i < n; ++i) v(i) = ((s >> i) & 1u) ? -unit : unit;
    pts.push_back(v);
  }
  return from_columns(pts);
}

Matrix join(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows(), a.cols() + b.cols());
  out << a, b;
  return out;
}

double log_torus_alpha() {
  const auto p = [](double a) {
    const double s = a * a;
    return (((5.0 * s - 36.0) * s + 51.0) * s - 4.0) * s - 7.0;
  };
  double lo = 0.0, hi = 1.0;  // p(0) = -7, p(1) = 9
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (p(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

PointConfig icosa_dodeca() {
  const PointConfig ico = build_icosahedron();
  const Matrix g = ico.gram();
  const double top = ico.max_inner_product();
  std::vector<Vector> centers;
  for (int i = 0; i < 12; ++i) {
    for (int j = i + 1; j < 12; ++j) {
      for (int k = j + 1; k < 12; ++k) {
        if (std::abs(g(i, j) - top) < 1e-9 && std::abs(g(i, k) - top) < 1e-9 && std::abs(g(j, k) - top) < 1e-9) {
          centers.push_back((ico.point(i) + ico.point(j) + ico.point(k)).normalized());
        }
      }
    }
  }
  return PointConfig::normalized(join(ico.points(), from_columns(centers)));
}

PointConfig signs_32_5() {
  const Matrix v = regular_simplex(6);
  std::vector<Vector> pts;
  for (int i = 0; i < 6; ++i) pts.push_back(v.col(i));
  for (int i = 0; i < 6; ++i) pts.push_back(-v.col(i));
  for (unsigned s = 0; s < 64; ++s) {
    if (std::popcount(s) != 3) continue;
    Vector y = Vector::Zero(5);
    for (int i = 0; i < 6; ++i) y += (((s >> i) & 1u) ? -1.0 : 1.0) / std::sqrt(5.0) * v.col(i);
    pts.push_back((5.0 / 6.0) * y);
  }
  return PointConfig::normalized(from_columns(pts));
}

PointConfig cross_hemicube(int n) {
  return PointConfig::normalized(join(build_cross_polytope(n).points(), hemicube_points(n)));
}

PointConfig perm_hemicube_148() {
  std::vector<Vector> pts;
  for (int i = 0; i < 7; ++i) {
    for (int j = i + 1; j < 7; ++j) {
      for (int s = 0; s < 4; ++s) {
        Vector v = Vector::Zero(7);
        v(i) = ((s & 1) ? -1.0 : 1.0) / std::sqrt(2.0);
        v(j) = ((s & 2) ? -1.0 : 1.0) / std::sqrt(2.0);
        pts.push_back(v);
      }
    }
  }
  return PointConfig::normalized(join(from_columns(pts), hemicube_points(7)));
}

PointConfig edge_mid_antipodes(int n) {
  const Matrix mids = edge_midpoints(regular_simplex(n + 1));
  return PointConfig::normalized(join(mids, -mids));
}

PointConfig torus(int count, int power, double alpha) {
  std::vector<Vector> pts;
  const double beta = std::sqrt(1.0 - alpha * alpha);
  for (int k = 0; k < count; ++k) {
    const Complex zeta = std::polar(1.0, 2.0 * std::numbers::pi * k / count);
    pts.push_back(c2(alpha * zeta, beta * std::pow(zeta, power)));
  }
  return PointConfig::normalized(from_columns(pts));
}

PointConfig pentagon_pair() {
  Matrix x = Matrix::Zero(4, 10);
  for (int k = 0; k < 5; ++k) {
    const double t = 2.0 * std::numbers::pi * k / 5.0;
    x(0, k) = std::cos(t);
    x(1, k) = std::sin(t);
    x(2, 5 + k) = std::cos(t);
    x(3, 5 + k) = std::sin(t);
  }
  return PointConfig::normalized(std::move(x));
}

PointConfig simplex_mid_face() {
  const Matrix v = regular_simplex(6);
  return PointConfig::normalized(join(edge_midpoints(v), -v));
}

PointConfig cell24() {
  std::vector<Vector> pts;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      for (int s = 0; s < 4; ++s) {
        Vector v = Vector::Zero(4);
        v(i) = (s & 1) ? -1.0 : 1.0;
        v(j) = (s & 2) ? -1.0 : 1.0;
        pts.push_back(v);
      }
    }
  }
  return PointConfig::normalized(from_columns(pts));
}

int param_int(const CatalogEntry& e, const std::string& key) {
  const double v = e.parameters.at(key);
  if (v != std::floor(v)) throw Error(ErrorKind::ParameterOutOfRange, key + " must be an integer");
  return static_cast<int>(v);
}

struct Rule {
  CatalogEntry entry;
  std::function<void(CatalogEntry&)> shape;  // fills n, N from parameters (parametric entries)
  std::function<PointConfig(const CatalogEntry&)> build;
};

CatalogEntry make(const std::string& name, int n, int N, const std::string& rule, bool balanced, double t,
                  std::map<std::string, double> params = {}) {
  CatalogEntry e;
  e.name = name;
  e.n = n;
  e.N = N;
  e.rule = rule;
  e.balanced = balanced;
  e.max_inner_product = t;
  e.parameters = std::move(params);
  return e;
}

const std::vector<Rule>& rules() {
  static const std::vector<Rule> table = [] {
    const double s5 = std::sqrt(5.0);
    std::vector<Rule> r;
    const auto fixed = [&r](CatalogEntry e, std::function<PointConfig()> f) {
      r.push_back({std::move(e), nullptr, [f](const CatalogEntry&) { return f(); }});
    };
    const auto none = 2.0;

    r.push_back({make("ngon", 2, 5, "regular N-gon", true, std::cos(2.0 * std::numbers::pi / 5.0), {{"N", 5}}),
                 [](CatalogEntry& e) {
                   e.N = param_int(e, "N");
                   if (e.N < 1) throw Error(ErrorKind::ParameterOutOfRange, "ngon needs N >= 1");
                   e.max_inner_product = e.N > 1 ? std::cos(2.0 * std::numbers::pi / e.N) : 2.0;
                 },
                 [](const CatalogEntry& e) { return build_ngon(e.N); }});
    r.push_back({make("simplex", 3, 4, "regular simplex", true, -1.0 / 3.0, {{"n", 3}}),
                 [](CatalogEntry& e) {
                   e.n = param_int(e, "n");
                   if (e.n < 2) throw Error(ErrorKind::ParameterOutOfRange, "simplex needs n >= 2");
                   e.N = e.n + 1;
                   e.max_inner_product = -1.0 / e.n;
                 },
                 [](const CatalogEntry& e) { return build_simplex(e.n); }});
    r.push_back({make("cross_polytope", 3, 6, "+-e_i", true, 0.0, {{"n", 3}}),
                 [](CatalogEntry& e) {
                   e.n = param_int(e, "n");
                   if (e.n < 2) throw Error(ErrorKind::ParameterOutOfRange, "cross_polytope needs n >= 2");
                   e.N = 2 * e.n;
                 },
                 [](const CatalogEntry& e) { return build_cross_polytope(e.n); }});
    fixed(make("icosahedron_12_3", 3, 12, "(0, +-1, +-phi) cyclic", true, 1.0 / s5), build_icosahedron);
    r.push_back({make("cell600_120_4", 4, 120, "unit icosians; hopf=1 rotates an order-10 axis to i", true,
                      (1.0 + s5) / 4.0, {{"hopf", 0}}),
                 [](CatalogEntry& e) {
                   const int h = param_int(e, "hopf");
                   if (h != 0 && h != 1) throw Error(ErrorKind::ParameterOutOfRange, "hopf must be 0 or 1");
                 },
                 [](const CatalogEntry& e) { return build_600_cell(param_int(e, "hopf") == 1); }});
    fixed(make("hemicube_16_5", 5, 16, "even-sign hemicube", true, 0.2), [] { return build_hemicube(5); });
    fixed(make("schlafli_27_6", 6, 27, "E8 roots with <r,a>=1, <r,b>=0, projected", true, 0.25), build_schlafli);
    fixed(make("equiangular_56_7", 7, 56, "E8 roots with <r,a>=1, projected", true, 1.0 / 3.0),
          build_equiangular_56);
    fixed(make("e8_240_8", 8, 240, "E8 roots", true, 0.5), [] { return PointConfig::normalized(e8_roots()); });
    fixed(make("forty_40_10", 10, 40, "degree-parity rule over pairs of Z/5", true, 1.0 / 6.0), build_40_in_10);
    fixed(make("sixty_four_64_14", 14, 64, "F8^2 Gram rule", true, 1.0 / 7.0), build_64_in_14_gram);
    fixed(make("icosa_dodeca_32_3", 3, 32, "icosahedron and dual dodecahedron", true,
               std::sqrt(75.0 + 30.0 * s5) / 15.0),
          icosa_dodeca);
    fixed(make("petersen_10_4", 4, 10, "edge midpoints of the 4-simplex", true, 1.0 / 6.0),
          [] { return PointConfig::normalized(edge_midpoints(regular_simplex(5))); });
    fixed(make("pentagon_pair_10_4", 4, 10, "two orthogonal pentagons", true, (s5 - 1.0) / 4.0), pentagon_pair);
    fixed(make("torus_13_4", 4, 13, "(z, z^5)/sqrt2 over 13th roots of unity", true,
               (std::cos(4.0 * std::numbers::pi / 13.0) + std::cos(6.0 * std::numbers::pi / 13.0)) / 2.0),
          [] { return torus(13, 5, 1.0 / std::sqrt(2.0)); });
    fixed(make("fifteen_15_4", 4, 15, "16-point Gram family at a=b=0 without the first point", true,
               1.0 / std::sqrt(8.0)),
          build_fifteen_15_4);
    fixed(make("cell24_24_4", 4, 24, "D4 roots", true, 0.5), cell24);
    fixed(make("hopf48_48_4", 4, 48, "six octagons over an octahedron", true, 1.0 / std::sqrt(2.0)), build_hopf48);
    fixed(make("simplex_mid_face_21_5", 5, 21, "edge midpoints and facet centers of the 5-simplex", true,
               1.0 / std::sqrt(10.0)),
          simplex_mid_face);
    fixed(make("signs_32_5", 5, 32, "+-simplex and 20 three-sign points", true, 1.0 / s5), signs_32_5);
    fixed(make("edge_mid_antipodes_42_6", 6, 42, "edge midpoints of the 6-simplex and antipodes", true, 0.4),
          [] { return edge_mid_antipodes(6); });
    fixed(make("cross_hemicube_44_6", 6, 44, "cross polytope and hemicube", true, 1.0 / std::sqrt(6.0)),
          [] { return cross_hemicube(6); });
    fixed(make("e6_union_126_6", 6, 126, "E6 and E6* minimal vectors", true, std::sqrt(3.0 / 8.0)),
          build_e6_union);
    fixed(make("cross_hemicube_78_7", 7, 78, "cross polytope and hemicube", true, 3.0 / 7.0),
          [] { return cross_hemicube(7); });
    fixed(make("perm_hemicube_148_7", 7, 148, "(+-1,+-1,0^5)/sqrt2 and hemicube", true, std::sqrt(2.0 / 7.0)),
          perm_hemicube_148);
    fixed(make("e7_union_182_7", 7, 182, "E7 and E7* minimal vectors", true, 1.0 / std::sqrt(3.0)),
          build_e7_union);
    fixed(make("edge_mid_antipodes_72_8", 8, 72, "edge midpoints of the 8-simplex and antipodes", true, 5.0 / 14.0),
          [] { return edge_mid_antipodes(8); });
    fixed(make("ninety_six_96_9", 9, 96, "three tetrahedra and 72 labelled points", true, 1.0 / 3.0),
          build_96_in_9);
    fixed(make("hs_subconstituent_42_14", 14, 42, "Hoffman-Singleton second subconstituent", true, 0.1),
          build_hs_subconstituent);
    fixed(make("nr_128_15", 15, 128, "once-shortened Nordstrom-Robinson code on the cube", true, 0.2),
          [] { return cube_embed(shorten(build_nordstrom_robinson(), 0, 0)); });
    fixed(make("nr_256_16", 16, 256, "Nordstrom-Robinson code on the cube", true, 0.25),
          [] { return cube_embed(build_nordstrom_robinson()); });
    fixed(make("layered_74_5", 5, 74, "24-cell, two dual 24-cells and poles", false, (s5 - 1.0) / 2.0),
          build_layered_74);
    fixed(make("log_torus_11_4", 4, 11, "(a z, sqrt(1-a^2) z^4) over 11th roots of unity", false, none),
          [] { return torus(11, 4, log_torus_alpha()); });
    r.push_back({make("c_n", 4, 9, "pole and two dual simplices", false, c_n_alpha(4), {{"n", 4}}),
                 [](CatalogEntry& e) {
                   e.n = param_int(e, "n");
                   if (e.n < 2) throw Error(ErrorKind::ParameterOutOfRange, "c_n needs n >= 2");
                   e.N = 2 * e.n + 1;
                   e.max_inner_product = c_n_alpha(e.n);
                 },
                 [](const CatalogEntry& e) { return build_c_n(e.n); }});
    r.push_back({make("diplo_simplex", 6, 14, "simplex and its antipode", true, 1.0 / 6.0, {{"n", 6}}),
                 [](CatalogEntry& e) {
                   e.n = param_int(e, "n");
                   if (e.n < 2) throw Error(ErrorKind::ParameterOutOfRange, "diplo_simplex needs n >= 2");
                   e.N = 2 * e.n + 2;
                   e.max_inner_product = 1.0 / e.n;
                   e.balanced = e.n >= 6;
                 },
                 [](const CatalogEntry& e) { return build_diplo_simplex(e.n); }});
    r.push_back({make("competitor_40_10", 10, 40, "tensor grid and 24 permutation points", false,
                      competitor_best_alpha(), {{"alpha", competitor_best_alpha()}}),
                 [](CatalogEntry& e) {
                   const double a = e.parameters.at("alpha");
                   if (!(a > 0.0 && 27.0 * a * a <= 1.0)) {
                     throw Error(ErrorKind::ParameterOutOfRange, "alpha must lie in (0, 1/sqrt(27)]");
                   }
                   e.max_inner_product = std::abs(a - competitor_best_alpha()) < 1e-15 ? a : 2.0;
                 },
                 [](const CatalogEntry& e) { return build_40_in_10_competitor(e.parameters.at("alpha")); }});
    return r;
  }();
  return table;
}

const Rule& rule_for(const std::string& name) {
  for (const Rule& r : rules()) {
    if (r.entry.name == name) return r;
  }
  throw Error(ErrorKind::UnknownEntry, "no catalog entry named '" + name + "'");
}

}  // namespace

PointConfig build_ngon(int N) {
  if (N < 1) throw Error(ErrorKind::InvalidArgument, "ngon needs N >= 1");
  Matrix x(2, N);
  for (int k = 0; k < N; ++k) {
    const double t = 2.0 * std::numbers::pi * k / N;
    x(0, k) = std::cos(t);
    x(1, k) = std::sin(t);
  }
  return PointConfig::normalized(std::move(x));
}

PointConfig build_simplex(int n) { return PointConfig::normalized(regular_simplex(n + 1)); }

PointConfig build_cross_polytope(int n) {
  Matrix x = Matrix::Zero(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    x(i, 2 * i) = 1.0;
    x(i, 2 * i + 1) = -1.0;
  }
  return PointConfig(std::move(x));
}

PointConfig build_icosahedron() {
  std::vector<Vector> pts;
  for (int axis = 0; axis < 3; ++axis) {
    for (int s = 0; s < 4; ++s) {
      Vector v = Vector::Zero(3);
      v((axis + 1) % 3) = (s & 1) ? -1.0 : 1.0;
      v((axis + 2) % 3) = (s & 2) ? -kPhi : kPhi;
      pts.push_back(v);
    }
  }
  return PointConfig::normalized(from_columns(pts));
}

PointConfig build_600_cell(bool hopf_oriented) {
  std::vector<Vector> pts;
  for (int i = 0; i < 4; ++i) {
    for (const double s : {1.0, -1.0}) {
      Vector v = Vector::Zero(4);
      v(i) = s;
      pts.push_back(v);
    }
  }
  for (int s = 0; s < 16; ++s) {
    Vector v(4);
    for (int i = 0; i < 4; ++i) v(i) = ((s >> i) & 1) ? -0.5 : 0.5;
    pts.push_back(v);
  }
  // Even permutations of (0, +-1, +-1/phi, +-phi)/2: the unit icosians.
  const std::array<double, 4> base = {0.0, 1.0, 1.0 / kPhi, kPhi};
  std::array<int, 4> perm = {0, 1, 2, 3};
  do {
    int inversions = 0;
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) inversions += perm[i] > perm[j];
    }
    if (inversions % 2) continue;
    for (int s = 0; s < 8; ++s) {
      Vector v(4);
      for (int i = 0; i < 4; ++i) {
        const int source = perm[i];
        double value = base[source] / 2.0;
        if (source > 0 && ((s >> (source - 1)) & 1)) value = -value;
        v(i) = value;
      }
      pts.push_back(v);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  Matrix x = from_columns(pts);

  if (hopf_oriented) {
    // (phi, 1/phi, 1, 0)/2 is an icosian of order 10. Conjugating by a
    // rotation of the imaginary part that sends its axis to i makes left
    // multiplication by that element a multiplication by e^{i pi/5} in the
    // coordinates z = x0 + i x1, w = x2 + i x3.
    Vector axis(3);
    axis << 1.0 / kPhi, 1.0, 0.0;
    axis.normalize();
    Vector v = axis;
    v(0) += 1.0;
    Matrix h = Matrix::Identity(3, 3) - (2.0 / v.squaredNorm()) * v * v.transpose();
    h = -h;  // det +1 and h * axis = e0
    Matrix q = Matrix::Identity(4, 4);
    q.bottomRightCorner(3, 3) = h;
    x = q * x;
  }
  return PointConfig::normalized(std::move(x));
}

PointConfig build_hemicube(int n) { return PointConfig::normalized(hemicube_points(n)); }

PointConfig build_hopf48() {
  const Complex i(0.0, 1.0);
  const Complex zeta = std::polar(1.0, std::numbers::pi / 12.0);
  const double r = 1.0 / std::sqrt(2.0);
  const std::array<std::array<Complex, 2>, 6> seeds = {{
      {Complex(1.0), Complex(0.0)},
      {Complex(0.0), Complex(1.0)},
      {r * zeta, r * zeta},
      {-r * zeta, r * zeta},
      {r * i * zeta * zeta, r * zeta * zeta},
      {-r * i * zeta * zeta, r * zeta * zeta},
  }};
  std::vector<Vector> pts;
  for (const auto& s : seeds) {
    for (int m = 0; m < 8; ++m) {
      const Complex u = std::polar(1.0, 2.0 * std::numbers::pi * m / 8.0);
      pts.push_back(c2(u * s[0], u * s[1]));
    }
  }
  return PointConfig::normalized(from_columns(pts));
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    for (const Rule& r : rules()) out.push_back(r.entry);
    return out;
  }();
  return entries;
}

CatalogEntry find_entry(const std::string& name, const std::map<std::string, double>& parameters) {
  const Rule& rule = rule_for(name);
  CatalogEntry e = rule.entry;
  for (const auto& [key, value] : parameters) {
    if (!e.parameters.count(key)) {
      throw Error(ErrorKind::ParameterOutOfRange, "entry '" + name + "' has no parameter '" + key + "'");
    }
    e.parameters[key] = value;
  }
  if (rule.shape) rule.shape(e);
  return e;
}

PointConfig build_catalog(const CatalogEntry& entry) {
  const Rule& rule = rule_for(entry.name);
  CatalogEntry e = entry;
  if (rule.shape) rule.shape(e);
  return rule.build(e);
}

PointConfig build_catalog(const std::string& name, const std::map<std::string, double>& parameters) {
  return build_catalog(find_entry(name, parameters));
}

}  // namespace sphere
