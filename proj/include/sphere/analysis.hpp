#pragma once

#include "sphere/point_config.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sphere {

struct DistanceClass {
  double squared_distance = 0.0;  // mean over the class
  int multiplicity = 0;
  std::vector<std::pair<int, int>> pairs;  // i < j

  double inner_product() const { return 1.0 - 0.5 * squared_distance; }
};

struct DistanceSpectrum {
  std::vector<DistanceClass> classes;  // ascending squared distance
  double tolerance = 0.0;
  bool ambiguous = false;  // two representatives within 10 x tolerance

  /// Class index of every pair, as an N x N table (-1 on the diagonal).
  std::vector<std::vector<int>> class_table(int count) const;
};

inline constexpr double kSpectrumTolerance = 1e-6;

/// Single-linkage clustering of the squared distances: sorted neighbours
/// closer than tol * max(1, d) join a class.
DistanceSpectrum distance_spectrum(const PointConfig& config, double tol = kSpectrumTolerance);

struct BalanceResult {
  bool balanced = true;
  int point = -1;        // witness on failure
  int distance_class = -1;
  double violation = 0.0;  // largest tangential norm seen
};

/// For every point x and distance class d, the part of the sum of the points
/// at distance d from x orthogonal to x must have norm at most tol.
BalanceResult is_balanced(const PointConfig& config, double tol = 1e-8,
                          double spectrum_tol = kSpectrumTolerance);

/// Rank of the tangential force vectors of the distance classes, counting
/// singular values above tol * max(1, largest).
int parameter_count(const PointConfig& config, double tol = 1e-8, double spectrum_tol = kSpectrumTolerance);

/// Normalized Gegenbauer polynomial G_k(t) for S^(n-1), G_k(1) = 1.
double gegenbauer(int n, int k, double t);

/// Largest t <= max_degree with |sum_{x,y} G_k(<x,y>)| <= 1e-8 N^2 for all k <= t.
int design_strength(const PointConfig& config, int max_degree);

/// sum_{x,y} G_k(<x,y>) for k = 1..max_degree (index 0 holds k = 1).
std::vector<double> gegenbauer_sums(const PointConfig& config, int max_degree);

struct HopfImage {
  PointConfig images;              // distinct image points on S^2
  std::vector<int> multiplicity;   // points over each image
  std::vector<int> fiber_of;       // image index of every input point
};

inline constexpr double kHopfMergeTolerance = 1e-9;

/// (z, w) -> z/w on the Riemann sphere, with z = x0 + i x1, w = x2 + i x3:
/// (2 Re(z conj w), 2 Im(z conj w), |z|^2 - |w|^2). Images within 1e-9 merge.
HopfImage hopf_map(const PointConfig& config);

struct OrthogonalRealization {
  Matrix q;
  double determinant = 1.0;
  double residual = 0.0;  // max_i |Q x_i - x_perm(i)|
};

/// Least-squares orthogonal Q with Q x_i close to x_perm(i). Throws
/// SpanDeficient if the points do not span R^n and NotAnAutomorphism if perm
/// does not preserve inner products within tol or Q misses by more than 1e-8.
OrthogonalRealization realize_automorphism(const PointConfig& config, const std::vector<int>& perm,
                                           double tol = 1e-9);

struct SymmetryReport {
  std::uint64_t order = 1;
  std::vector<std::vector<int>> generators;
  std::vector<int> base;
  std::vector<std::uint64_t> orbit_lengths;  // basic orbit length at each base point
  std::vector<int> orbit_of;                 // orbit index of every point
  int orbit_count = 0;
  bool spans = true;
  /// Every generator realized by a rotation; unset when the points do not
  /// span R^n (realizations are then not unique).
  std::optional<bool> chiral;
};

inline constexpr double kInnerProductTolerance = 1e-9;

/// Automorphisms of the complete graph whose edge colours are the inner
/// product classes (clustered at tol), found by individualization and
/// refinement with backtracking.
SymmetryReport automorphism_group(const PointConfig& config, double tol = kInnerProductTolerance);

/// Edge colours used by automorphism_group: class index of <x_i, x_j>, -1 on
/// the diagonal.
std::vector<std::vector<int>> inner_product_colors(const PointConfig& config, double tol, int* color_count = nullptr);

struct ExactValue {
  enum class Kind { Rational, Quadratic, Unrecognized };
  Kind kind = Kind::Unrecognized;
  long p = 0;  // rational p/q, or (p + q sqrt(d)) / r
  long q = 1;
  long d = 0;
  long r = 1;
  double residual = 0.0;

  double value() const;
  std::string to_string() const;
};

/// Rational by continued fractions (denominator <= max_den), else
/// (p + q sqrt(D))/r with squarefree D <= max_disc and |p|, |q|, r <= 1000,
/// accepting residuals up to 1e-10.
ExactValue recognize_value(double x, long max_den = 10000, long max_disc = 1000);

/// Orthogonal projection onto a random plane drawn from plane_seed, with the
/// unit circle, the points and segments joining minimal-distance pairs.
std::string project_svg(const PointConfig& config, std::uint64_t plane_seed);

}  // namespace sphere
