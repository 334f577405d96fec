#pragma once

#include "sphere/gram.hpp"
#include "sphere/point_config.hpp"

#include <vector>

namespace sphere {

/// The root of (n^3 - 4n^2 + 4n) x^3 - n^2 x^2 - n x + 1 in (0, 1/n).
double c_n_alpha(int n);

/// 2n+1 points: a pole, a simplex at inner product alpha with the pole and
/// a dual simplex below the equator whose points have pairwise inner product
/// alpha. Every cross inner product is alpha except for paired points.
PointConfig build_c_n(int n);

/// Free parameters of the diplo-simplex family. For odd n the points use
/// alpha and beta (the rotation of one face); for even n, alpha, beta and
/// gamma (the rotation).
struct DiploParameters {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
};

/// The unperturbed values: alpha = sqrt((2k-2)/(2k-1)), beta = 0 for
/// n = 2k-1; alpha = sqrt((2k+1)(2k-2))/(2k), beta = 1/(2k), gamma = 0 for
/// n = 2k.
DiploParameters diplo_parameters(int n);

/// Regular simplex together with its antipode, 2n+2 points in R^n.
PointConfig build_diplo_simplex(int n);

/// The perturbed 2n+2-point family. Odd n needs 0 < alpha < 1 and
/// 0 <= beta <= 1; even n needs alpha, beta >= 0, alpha^2 + beta^2 <= 1 and
/// 0 <= gamma <= 1 (alpha = 0 is allowed only for n = 2).
PointConfig perturb_diplo_simplex(int n, const DiploParameters& p);

/// 40 points in R^10 with coefficients +-1/sqrt(6) on the basis v_{i,j},
/// {i,j} a pair in Z/5, selected by the degree-parity rule.
PointConfig build_40_in_10();

/// Value of alpha giving the best minimal angle in the competitor family.
double competitor_best_alpha();

/// 16 tensor products of two tetrahedra in R^9 plus 24 points indexed by the
/// permutations of four letters, above or below R^9 by parity.
PointConfig build_40_in_10_competitor(double alpha);

/// Inner products over F8^2 (F8 = F2[x]/(x^3 + x + 1)): -1/7 when the first
/// coordinates agree, -3/7 when x2 + y2 is (x1 + y1)^3 or x1 y1 (x1 + y1),
/// 1/7 otherwise.
GramMatrix gram_64_in_14();
PointConfig build_64_in_14_gram();

/// Three orthogonal tetrahedra and their negatives, plus 72 points with
/// inner products +-1/3 to all twelve tetrahedron vertices.
PointConfig build_96_in_9();

/// Vertices of the three basic tetrahedra used by build_96_in_9, in the
/// same coordinates (12 columns).
Matrix basic_tetrahedra_96();

/// The 240 roots of E8 (norm^2 = 2), one per column.
Matrix e8_roots();

/// Fixed roots a, b of E8 with <a, b> = -1 used to cut out E7 and E6.
Vector e8_reference_a();
Vector e8_reference_b();

/// Roots orthogonal to a (126) and to both a and b (72), in E8 coordinates.
Matrix e7_roots();
Matrix e6_roots();

/// 27 points in R^6: roots r with <r, a> = 1 and <r, b> = 0, projected
/// onto the orthogonal complement of span(a, b) and normalized.
PointConfig build_schlafli();

/// 56 points in R^7: roots with <r, a> = 1 projected onto a's complement.
PointConfig build_equiangular_56();

/// Minimal vectors of E6 and E6* (126 in R^6), and of E7 and E7* (182 in
/// R^7), rescaled to the unit sphere.
PointConfig build_e6_union();
PointConfig build_e7_union();

/// Adjacency matrix of the Hoffman-Singleton graph on 50 vertices built from
/// five pentagons and five pentagrams.
std::vector<std::vector<int>> hoffman_singleton_graph();

/// The second subconstituent of the Hoffman-Singleton graph realized in
/// R^14 with inner products -1/2, -1/5, 1/10.
PointConfig build_hs_subconstituent();

/// 24-cell on the equator of S^4, two scaled dual 24-cells at heights
/// +-sqrt(sqrt(5) - 2) and the two poles.
PointConfig build_layered_74();

/// Rows 2..16 of the 16-point Gram family at a = b = 0, realized in R^4.
PointConfig build_fifteen_15_4();

}  // namespace sphere
