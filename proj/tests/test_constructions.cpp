#include "helpers.hpp"

#include "sphere/analysis.hpp"
#include "sphere/catalog.hpp"
#include "sphere/constructions.hpp"
#include "sphere/energy.hpp"
#include "sphere/error.hpp"
#include "sphere/search.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace sphere;
using sphere::testing::sorted_inner_products;
using sphere::testing::value_counts;

namespace {

std::vector<double> distinct_inner_products(const PointConfig& c) {
  std::vector<double> out;
  for (auto [v, count] : value_counts(sorted_inner_products(c))) out.push_back(v);
  return out;
}

void expect_values(const PointConfig& c, std::vector<double> expected) {
  std::sort(expected.begin(), expected.end());
  const auto got = distinct_inner_products(c);
  ASSERT_EQ(got.size(), expected.size());
  for (std::size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], expected[i], 1e-12);
}

}  // namespace

TEST(CubicRootCode, Alpha) {
  EXPECT_NEAR(c_n_alpha(2), (std::sqrt(5.0) - 1) / 4, 1e-12);
  const double n = 50;
  EXPECT_LE(std::abs(c_n_alpha(50) - (1 / n - std::sqrt(2.0) / std::pow(n, 1.5))), 10 / (n * n));
  for (int k : {3, 4, 7}) {
    const double a = c_n_alpha(k);
    const double kk = k;
    EXPECT_NEAR((kk * kk * kk - 4 * kk * kk + 4 * kk) * a * a * a - kk * kk * a * a - kk * a + 1, 0.0, 1e-13);
    EXPECT_GT(a, 0.0);
    EXPECT_LT(a, 1.0 / k);
  }
  EXPECT_THROW(c_n_alpha(1), Error);
}

TEST(CubicRootCode, MinimalAngle) {
  for (int n : {2, 4, 6}) {
    const PointConfig c = build_c_n(n);
    EXPECT_EQ(c.size(), 2 * n + 1);
    EXPECT_EQ(c.dimension(), n);
    EXPECT_NEAR(c.max_inner_product(), c_n_alpha(n), 1e-12);
  }
}

TEST(DiploSimplex, SmallCases) {
  const PointConfig hexagon = build_diplo_simplex(2);
  EXPECT_EQ(hexagon.size(), 6);
  EXPECT_NEAR(hexagon.max_inner_product(), 0.5, 1e-12);
  const PointConfig cube = build_diplo_simplex(3);
  expect_values(cube, {-1.0, -1.0 / 3, 1.0 / 3});
  for (int n : {4, 5, 6}) {
    const PointConfig d = build_diplo_simplex(n);
    EXPECT_EQ(d.size(), 2 * n + 2);
    expect_values(d, {-1.0, -1.0 / n, 1.0 / n});
  }
}

TEST(DiploSimplex, ZeroPerturbationReproduces) {
  for (int n : {3, 4, 5, 6, 7}) {
    const PointConfig a = build_diplo_simplex(n);
    const PointConfig b = perturb_diplo_simplex(n, diplo_parameters(n));
    EXPECT_NEAR(b.min_squared_distance(), a.min_squared_distance(), 1e-12) << n;
    EXPECT_EQ(sorted_inner_products(a).size(), sorted_inner_products(b).size());
    const auto sa = sorted_inner_products(a), sb = sorted_inner_products(b);
    for (std::size_t i = 0; i < sa.size(); ++i) EXPECT_NEAR(sa[i], sb[i], 1e-12);
  }
}

TEST(DiploSimplex, OddPerturbationsImprove) {
  // (n, alpha, beta) improving the minimal distance.
  const std::tuple<int, double, double> cases[] = {{3, 0.8225, 0.295}, {5, 0.8984, 0.30}, {7, 0.9278, 0.25}};
  for (auto [n, a, b] : cases) {
    const double base = build_diplo_simplex(n).min_squared_distance();
    const double moved = perturb_diplo_simplex(n, {a, b, 0.0}).min_squared_distance();
    EXPECT_GT(moved - base, 1e-6) << n;
  }
}

TEST(DiploSimplex, ParameterRanges) {
  try {
    perturb_diplo_simplex(3, {1.2, 0.0, 0.0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParameterOutOfRange);
  }
  EXPECT_THROW(perturb_diplo_simplex(4, {0.9, 0.9, 0.0}), Error);
  EXPECT_THROW(perturb_diplo_simplex(4, {0.5, 0.1, 1.5}), Error);
}

TEST(Forty, InnerProductCounts) {
  const PointConfig c = build_40_in_10();
  ASSERT_EQ(c.size(), 40);
  const Matrix g = c.gram();
  const double values[] = {1.0, -0.5, -1.0 / 3, 0.0, 1.0 / 6};
  const int counts[] = {1, 8, 3, 4, 24};
  for (int i = 0; i < 40; ++i) {
    for (int v = 0; v < 5; ++v) {
      int seen = 0;
      for (int j = 0; j < 40; ++j) seen += std::abs(g(i, j) - values[v]) < 1e-12;
      EXPECT_EQ(seen, counts[v]) << i << " " << values[v];
    }
  }
}

TEST(Forty, CompetitorAlpha) {
  const double a = competitor_best_alpha();
  EXPECT_NEAR(a, (std::sqrt(109.0) - 1) / 54, 1e-15);
  const PointConfig c = build_40_in_10_competitor(a);
  EXPECT_EQ(c.size(), 40);
  EXPECT_EQ(c.dimension(), 10);
  EXPECT_NEAR(c.max_inner_product(), a, 1e-12);
  EXPECT_THROW(build_40_in_10_competitor(0.2), Error);
  EXPECT_THROW(build_40_in_10_competitor(0.0), Error);
}

TEST(Forty, BeatsCompetitorGrid) {
  std::vector<PointConfig> configs{build_40_in_10()};
  for (double a = 0.01; a < 0.1925; a += 0.01) configs.push_back(build_40_in_10_competitor(a));
  const auto ranked = compare_candidates(configs, PotentialSpec::harmonic());
  EXPECT_EQ(ranked.front().index, 0);
}

TEST(SixtyFour, GramSpectrum) {
  const GramMatrix g = gram_64_in_14();
  const Vector ev = g.eigenvalues();
  for (int i = 0; i < 50; ++i) EXPECT_NEAR(ev[i], 0.0, 1e-10);
  for (int i = 50; i < 64; ++i) EXPECT_NEAR(ev[i], 32.0 / 7, 1e-10);
  const PointConfig c = build_64_in_14_gram();
  EXPECT_EQ(c.dimension(), 14);
  expect_values(c, {-3.0 / 7, -1.0 / 7, 1.0 / 7});
  EXPECT_NEAR(c.max_inner_product(), 1.0 / 7, 1e-12);
}

TEST(NinetySix, InnerProductsAndReconstruction) {
  const PointConfig c = build_96_in_9();
  ASSERT_EQ(c.size(), 96);
  EXPECT_EQ(c.dimension(), 9);
  expect_values(c, {-1.0, -1.0 / 3, 0.0, 1.0 / 3});
  EXPECT_NEAR(c.max_inner_product(), 1.0 / 3, 1e-12);
  const Matrix v = basic_tetrahedra_96();
  ASSERT_EQ(v.cols(), 12);
  for (int i = 0; i < 96; ++i) {
    const Vector x = c.point(i);
    const Vector back = 0.75 * v * (v.transpose() * x);
    EXPECT_LE((back - x).cwiseAbs().maxCoeff(), 1e-12) << i;
  }
}

TEST(RootSystems, Sizes) {
  const Matrix e8 = e8_roots();
  ASSERT_EQ(e8.cols(), 240);
  for (int i = 0; i < 240; ++i) EXPECT_NEAR(e8.col(i).squaredNorm(), 2.0, 1e-14);
  const auto counts = value_counts(sorted_inner_products(PointConfig::normalized(e8)));
  // Pairs at inner product -1, -1/2, 0, 1/2: 120, 240*56/2, 240*126/2, 240*56/2.
  ASSERT_EQ(counts.size(), 4u);
  EXPECT_EQ(counts[0].second, 120);
  EXPECT_EQ(counts[1].second, 6720);
  EXPECT_EQ(counts[2].second, 15120);
  EXPECT_EQ(counts[3].second, 6720);
  EXPECT_NEAR(e8_reference_a().dot(e8_reference_b()), -1.0, 1e-14);
  EXPECT_EQ(e7_roots().cols(), 126);
  EXPECT_EQ(e6_roots().cols(), 72);
}

TEST(RootSystems, DerivedCodes) {
  const PointConfig s = build_schlafli();
  EXPECT_EQ(s.size(), 27);
  expect_values(s, {-0.5, 0.25});
  const PointConfig eq = build_equiangular_56();
  EXPECT_EQ(eq.size(), 56);
  expect_values(eq, {-1.0, -1.0 / 3, 1.0 / 3});
  EXPECT_EQ(build_e6_union().size(), 126);
  EXPECT_NEAR(build_e6_union().max_inner_product(), std::sqrt(3.0 / 8), 1e-12);
  EXPECT_EQ(build_e7_union().size(), 182);
}

TEST(HoffmanSingleton, StronglyRegular) {
  const auto adj = hoffman_singleton_graph();
  ASSERT_EQ(adj.size(), 50u);
  for (int i = 0; i < 50; ++i) {
    int degree = 0;
    for (int j = 0; j < 50; ++j) degree += adj[i][j];
    EXPECT_EQ(degree, 7);
    EXPECT_EQ(adj[i][i], 0);
    for (int j = i + 1; j < 50; ++j) {
      int common = 0;
      for (int k = 0; k < 50; ++k) common += adj[i][k] && adj[j][k];
      EXPECT_EQ(common, adj[i][j] ? 0 : 1);
    }
  }
  const PointConfig h = build_hs_subconstituent();
  EXPECT_EQ(h.size(), 42);
  EXPECT_EQ(h.dimension(), 14);
  expect_values(h, {-0.5, -0.2, 0.1});
}

TEST(Layered, PoleInnerProducts) {
  const PointConfig c = build_layered_74();
  EXPECT_EQ(c.size(), 74);
  EXPECT_NEAR(c.max_inner_product(), (std::sqrt(5.0) - 1) / 2, 1e-12);
  EXPECT_EQ(build_fifteen_15_4().size(), 15);
}
