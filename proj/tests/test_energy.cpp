#include "helpers.hpp"

#include "sphere/catalog.hpp"
#include "sphere/energy.hpp"
#include "sphere/error.hpp"
#include "sphere/kernels.hpp"
#include "sphere/optimize.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace sphere;
using sphere::testing::random_orthogonal;

namespace {

PointConfig retract(const PointConfig& c, const Matrix& v, double h) {
  return PointConfig::normalized(c.points() + h * v);
}

// Relative error between <grad, v> and a central difference of E along v.
double directional_error(const PointConfig& c, const PotentialSpec& f, std::uint64_t seed) {
  const TangentVector g = riemannian_gradient(c, f);
  const PointConfig noise = random_config(c.dimension(), c.size(), seed);
  Matrix v = noise.points();
  for (int i = 0; i < c.size(); ++i) v.col(i) -= v.col(i).dot(c.point(i)) * c.point(i);
  const double h = 1e-5;
  const double fd = (energy(retract(c, v, h), f) - energy(retract(c, v, -h), f)) / (2 * h);
  const double exact = (g.components.array() * v.array()).sum();
  return std::abs(fd - exact) / std::max(1.0, std::abs(exact));
}

const PotentialSpec kAll[] = {PotentialSpec::harmonic(), PotentialSpec::inverse_power(1.0),
                              PotentialSpec::inverse_power(3.5), PotentialSpec::truncated_power(1),
                              PotentialSpec::truncated_power(6), PotentialSpec::logarithmic()};

}  // namespace

TEST(Energy, KnownValues) {
  EXPECT_NEAR(energy(build_catalog("schlafli_27_6"), PotentialSpec::harmonic()), 111.0, 1e-9);
  EXPECT_NEAR(energy(build_catalog("cell600_120_4"), PotentialSpec::harmonic()), 5395.0, 1e-8);
  // Simplex: every pair at r = 2(1 + 1/n).
  EXPECT_NEAR(energy(build_simplex(4), PotentialSpec::inverse_power(1.0)), 10 / 2.5, 1e-13);
}

TEST(Energy, GradientMatchesFiniteDifferences) {
  for (const auto& f : kAll) {
    for (int trial = 0; trial < 3; ++trial) {
      const PointConfig c = random_config(4, 11, 100 + trial);
      EXPECT_LT(directional_error(c, f, 900 + trial), 1e-6) << f.name();
    }
  }
  EXPECT_LT(directional_error(random_config(2, 7, 3), PotentialSpec::harmonic(), 4), 1e-6);
}

TEST(Energy, GradientIsTangent) {
  const PointConfig c = random_config(5, 20, 8);
  const TangentVector g = riemannian_gradient(c, PotentialSpec::harmonic());
  for (int i = 0; i < c.size(); ++i) EXPECT_NEAR(g.components.col(i).dot(c.point(i)), 0.0, 1e-12);
}

TEST(Energy, OrthogonalInvariance) {
  for (const auto& f : kAll) {
    const PointConfig c = random_config(6, 30, 21);
    const double e = energy(c, f);
    for (std::uint64_t s = 0; s < 3; ++s) {
      const double moved = energy(c.transformed(random_orthogonal(6, s)), f);
      EXPECT_LE(std::abs(moved - e), 1e-12 * std::max(1.0, std::abs(e))) << f.name();
    }
  }
}

TEST(Energy, SymmetricConfigurationsAreCritical) {
  EXPECT_LT(riemannian_gradient(build_cross_polytope(5), PotentialSpec::harmonic()).sup_norm(), 1e-12);
  EXPECT_LT(riemannian_gradient(build_catalog("schlafli_27_6"), PotentialSpec::truncated_power(2)).sup_norm(),
            1e-10);
  EXPECT_LT(riemannian_gradient(build_catalog("e8_240_8"), PotentialSpec::logarithmic()).sup_norm(), 1e-10);
}

TEST(Energy, CoincidentPointsThrow) {
  Matrix p(3, 3);
  p << 1, 1, 0, 0, 0, 1, 0, 0, 0;
  const PointConfig c(p);
  try {
    energy(c, PotentialSpec::harmonic());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CoincidentPoints);
  }
  EXPECT_THROW(riemannian_gradient(c, PotentialSpec::logarithmic()), Error);
  // Truncated powers are finite at r = 0.
  EXPECT_NEAR(energy(c, PotentialSpec::truncated_power(2)), 16.0 + 2 * 4.0, 1e-12);
}

TEST(Energy, ParallelKernelsMatchReference) {
  const PointConfig c = random_config(4, 300, 77);
  for (const auto& spec : kAll) {
    const BoundPotential f = spec.bind(4);
    const Matrix& x = c.points();
    const double e = kernels::energy(x, f);
    EXPECT_NEAR(kernels::reference::energy_rows(x, f), e, 1e-12 * std::abs(e));
    EXPECT_LE((kernels::ambient_gradient(x, f) - kernels::reference::ambient_gradient(x, f)).cwiseAbs().maxCoeff(),
              1e-10 * std::max(1.0, kernels::ambient_gradient(x, f).cwiseAbs().maxCoeff()));
    EXPECT_LE((kernels::gram(x) - kernels::reference::gram(x)).cwiseAbs().maxCoeff(), 1e-14);
  }
}

TEST(Energy, ParallelHessianMatchesReference) {
  const PointConfig c = random_config(3, 200, 5);
  const BoundPotential f = PotentialSpec::harmonic().bind(3);
  const Matrix a = kernels::tangent_hessian(c.points(), f, nullptr);
  const Matrix b = kernels::reference::tangent_hessian(c.points(), f);
  EXPECT_LE((a - b).cwiseAbs().maxCoeff(), 1e-9 * a.cwiseAbs().maxCoeff());
}

TEST(Energy, StepEnergyChangeMatchesDisplacementForm) {
  const PointConfig c = random_config(4, 40, 12);
  const BoundPotential f = PotentialSpec::harmonic().bind(4);
  const Matrix d = riemannian_gradient(c, PotentialSpec::harmonic()).components;
  for (double t : {1e-4, 1e-2}) {
    const Matrix moved = PointConfig::normalized(c.points() - t * d).points();
    const double ref = kernels::reference::energy_change(c.points(), moved, f);
    const double fast = kernels::step_energy_change(c.points(), d, t, f);
    EXPECT_NEAR(fast, ref, 1e-9 * std::abs(ref));
  }
}

TEST(Hessian, NineInFourSpectrum) {
  const HessianSpectrum s = riemannian_hessian_spectrum(sphere::testing::nine_in_four(), PotentialSpec::harmonic());
  std::vector<double> expected(10, 0.0);
  const double r209 = std::sqrt(209.0) / 8, r161 = std::sqrt(161.0) / 8;
  for (double v : {4.0, 1.75, 1.75, 4.5, 4.5, 4.5, 4.5, 9.0, 9.0, 25.0 / 8 - r209, 25.0 / 8 - r209,
                   25.0 / 8 + r209, 25.0 / 8 + r209, 31.0 / 8 - r161, 31.0 / 8 - r161, 31.0 / 8 + r161,
                   31.0 / 8 + r161}) {
    expected.push_back(v);
  }
  std::sort(expected.begin(), expected.end());
  ASSERT_EQ(s.eigenvalues.size(), 27u);
  for (int i = 0; i < 27; ++i) EXPECT_NEAR(s.eigenvalues[i], expected[i], 1e-8) << i;
  EXPECT_EQ(s.zero_count, 10);
  EXPECT_FALSE(s.non_critical);
}

TEST(Hessian, SchlafliHasOnlyRotationalZeros) {
  const HessianSpectrum s = riemannian_hessian_spectrum(build_catalog("schlafli_27_6"), PotentialSpec::harmonic());
  EXPECT_EQ(s.zero_count, 15);  // dim SO(6)
  EXPECT_GT(s.eigenvalues[15], 1e-3);
  EXPECT_LT(s.asymmetry, 1e-10);
}

TEST(Hessian, AntipodalPairInPlane) {
  const HessianSpectrum s = riemannian_hessian_spectrum(build_ngon(2), PotentialSpec::harmonic());
  ASSERT_EQ(s.eigenvalues.size(), 2u);
  EXPECT_NEAR(s.eigenvalues[0], 0.0, 1e-12);
  EXPECT_GT(s.eigenvalues[1], 0.0);
  EXPECT_EQ(s.zero_count, 1);
}

TEST(Hessian, FlagsNonCriticalInput) {
  EXPECT_TRUE(riemannian_hessian_spectrum(random_config(3, 6, 2), PotentialSpec::harmonic()).non_critical);
}
