#include "helpers.hpp"

#include "sphere/codes.hpp"
#include "sphere/constructions.hpp"
#include "sphere/error.hpp"
#include "sphere/gram.hpp"
#include "sphere/optimize.hpp"

#include <gtest/gtest.h>

using namespace sphere;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error";
  return ErrorKind::InvalidArgument;
}

void expect_spectrum(const GramMatrix& g, std::vector<double> expected) {
  std::sort(expected.begin(), expected.end());
  const Vector ev = g.eigenvalues();
  ASSERT_EQ(ev.size(), static_cast<Eigen::Index>(expected.size()));
  for (int i = 0; i < ev.size(); ++i) EXPECT_NEAR(ev[i], expected[i], 1e-10) << i;
}

}  // namespace

TEST(Gram, RealizationRoundTrip) {
  for (int n : {2, 3, 7}) {
    const PointConfig c = random_config(n, 3 * n + 1, n);
    const GramMatrix g = GramMatrix::of(c);
    const PointConfig back = realize_from_gram(g, n);
    EXPECT_LE((back.gram() - g.entries()).cwiseAbs().maxCoeff(), 1e-9);
    // More room than needed is fine.
    EXPECT_LE((realize_from_gram(g, n + 2).gram() - g.entries()).cwiseAbs().maxCoeff(), 1e-9);
  }
}

TEST(Gram, Errors) {
  Matrix m = Matrix::Identity(3, 3);
  m(0, 1) = 0.5;
  EXPECT_EQ(kind_of([&] { GramMatrix g(m); }), ErrorKind::InvalidArgument);
  Matrix d = Matrix::Identity(2, 2);
  d(1, 1) = 0.9;
  EXPECT_EQ(kind_of([&] { GramMatrix g(d); }), ErrorKind::InvalidArgument);
  Matrix neg = Matrix::Constant(3, 3, -0.9);
  neg.diagonal().setOnes();
  EXPECT_EQ(kind_of([&] { realize_from_gram(GramMatrix(neg), 3); }), ErrorKind::NotPSD);
  EXPECT_EQ(kind_of([&] { realize_from_gram(GramMatrix(Matrix::Identity(4, 4)), 3); }), ErrorKind::RankTooHigh);
}

TEST(Gram, BlockIsPrincipalSubmatrix) {
  const GramMatrix g = GramMatrix::of(random_config(3, 8, 1));
  const GramMatrix b = g.block(2, 4);
  EXPECT_EQ(b.size(), 4);
  EXPECT_EQ(b(1, 3), g(3, 5));
}

TEST(Gram, SixteenInFiveSpectrum) {
  for (auto [a, b] : {std::pair{0.0, 0.0}, std::pair{-0.3, 0.1}, std::pair{-0.499890010934, 0.201039702365}}) {
    const double s = 6 * a * a + 9 * b * b;
    std::vector<double> expected(11, 0.0);
    expected.push_back(1 + s);
    for (int i = 0; i < 4; ++i) expected.push_back((15 - s) / 4);
    expect_spectrum(build_gram_16_in_5(a, b), expected);
    EXPECT_NO_THROW(realize_from_gram(build_gram_16_in_5(a, b), 5));
  }
}

TEST(Gram, TwelveInFourFamilies) {
  for (double a : {0.1, 0.25, 0.4}) {
    std::vector<double> e1(8, 0.0);
    for (double v : {12 * a, 12 * a, 6 - 12 * a, 6 - 12 * a}) e1.push_back(v);
    expect_spectrum(build_gram_12_in_4_family1(a), e1);
  }
  for (double a : {0.05, 0.2, 0.3}) {
    std::vector<double> e2(8, 0.0);
    for (int i = 0; i < 3; ++i) e2.push_back(4.0 / 3 + 24 * a * a);
    e2.push_back(8 - 72 * a * a);
    expect_spectrum(build_gram_12_in_4_family2(a), e2);
  }
  EXPECT_EQ(kind_of([] { build_gram_12_in_4_family1(0.6); }), ErrorKind::ParameterOutOfRange);
  EXPECT_EQ(kind_of([] { build_gram_12_in_4_family2(0.4); }), ErrorKind::ParameterOutOfRange);
  EXPECT_EQ(kind_of([] { build_gram_16_in_5(1.0, 0.0); }), ErrorKind::ParameterOutOfRange);
}

TEST(Codes, NordstromRobinson) {
  const BinaryCode nr = build_nordstrom_robinson();
  EXPECT_EQ(nr.length(), 16);
  EXPECT_EQ(nr.size(), 256);
  EXPECT_EQ(nr.min_distance(), 6);
  const std::vector<long> dist = nr.distance_distribution();
  std::vector<long> expected(17, 0);
  expected[6] = 14336;
  expected[8] = 3840;
  expected[10] = 14336;
  expected[16] = 128;
  EXPECT_EQ(dist, expected);
}

TEST(Codes, Shortening) {
  const BinaryCode once = shorten(build_nordstrom_robinson(), 0, 0);
  EXPECT_EQ(once.length(), 15);
  EXPECT_EQ(once.size(), 128);
  EXPECT_EQ(once.min_distance(), 6);
  const BinaryCode twice = shorten(once, 0, 0);
  EXPECT_EQ(twice.length(), 14);
  EXPECT_EQ(twice.size(), 64);
  EXPECT_EQ(twice.min_distance(), 6);
  const BinaryCode tiny(3, {0b000, 0b011});
  EXPECT_EQ(kind_of([&] { shorten(tiny, 2, 1); }), ErrorKind::EmptyShortening);
}

TEST(Codes, Validation) {
  EXPECT_EQ(kind_of([] { BinaryCode c(3, {1, 1}); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([] { BinaryCode c(3, {8}); }), ErrorKind::InvalidArgument);
}

TEST(Codes, CubeEmbedding) {
  const BinaryCode c(4, {0b0000, 0b0011, 0b1111});
  const PointConfig p = cube_embed(c);
  EXPECT_EQ(p.dimension(), 4);
  EXPECT_NEAR(p.gram()(0, 1), 0.0, 1e-15);
  EXPECT_NEAR(p.gram()(0, 2), -1.0, 1e-15);
}

TEST(Codes, DoublyShortenedMatchesGramRule) {
  const PointConfig code = cube_embed(shorten(shorten(build_nordstrom_robinson(), 0, 0), 0, 0));
  const PointConfig gram = build_64_in_14_gram();
  const auto a = sphere::testing::value_counts(sphere::testing::sorted_inner_products(code));
  const auto b = sphere::testing::value_counts(sphere::testing::sorted_inner_products(gram));
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_NEAR(a[i].first, b[i].first, 1e-12);
    EXPECT_EQ(a[i].second, b[i].second);
  }
}
