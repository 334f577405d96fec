#include "sphere/gram.hpp"

#include "sphere/error.hpp"
#include "sphere/kernels.hpp"
#include "sphere/linalg.hpp"

#include <Eigen/Eigenvalues>

#include <array>
#include <cmath>
#include <map>
#include <string>

namespace sphere {

namespace {

// Fills a Gram matrix from a table of symbols, one string per row.
template <std::size_t N>
Matrix from_pattern(const std::array<const char*, N>& rows, const std::map<char, double>& values) {
  Matrix g(N, N);
  for (std::size_t i = 0; i < N; ++i) {
    const std::string row = rows[i];
    if (row.size() != N) throw Error(ErrorKind::InvalidArgument, "malformed Gram pattern");
    for (std::size_t j = 0; j < N; ++j) g(i, j) = row[j] == '1' ? 1.0 : values.at(row[j]);
  }
  return g;
}

// Table with a = inner product to the first point; A stands for a^2.
constexpr std::array<const char*, 16> kPattern16 = {
    "1aaaaaabbbbbbbbb",
    "a1eeAAAdccccdcdc",
    "ae1eAAAcdcdccccd",
    "aee1AAAccdcdcdcc",
    "aAAA1eedcccdcccd",
    "aAAAe1ecdcccddcc",
    "aAAAee1ccddcccdc",
    "bdccdcc1fffggfgg",
    "bcdccdcf1fgfggfg",
    "bccdccdff1ggfggf",
    "bcdcccdfgg1fffgg",
    "bccddccgfgf1fgfg",
    "bdcccdcggfff1ggf",
    "bccdcdcfggfgg1ff",
    "bdccccdgfggfgf1f",
    "bcdcdccggfggfff1",
};

// m = -2a.
constexpr std::array<const char*, 12> kPattern12a = {
    "1ccdbbmaamaa",
    "c1cbdbamaama",
    "cc1bbdaamaam",
    "dbb1ccmaamaa",
    "bdbc1camaama",
    "bbdcc1aamaam",
    "maamaa1ccdbb",
    "amaamac1cbdb",
    "aamaamcc1bbd",
    "maamaadbb1cc",
    "amaamabdbc1c",
    "aamaambbdcc1",
};

// t = -1/3, m = -3a.
constexpr std::array<const char*, 12> kPattern12b = {
    "1tttmaaamaaa",
    "t1ttamaaamaa",
    "tt1taamaaama",
    "ttt1aaamaaam",
    "maaa1bbbdccc",
    "amaab1bbcdcc",
    "aamabb1bccdc",
    "aaambbb1cccd",
    "maaadccc1bbb",
    "amaacdccb1bb",
    "aamaccdcbb1b",
    "aaamcccdbbb1",
};

}  // namespace

GramMatrix::GramMatrix(Matrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() < 1) {
    throw Error(ErrorKind::InvalidArgument, "Gram matrix must be square and nonempty");
  }
  if (!entries_.allFinite()) throw Error(ErrorKind::InvalidArgument, "Gram matrix has non-finite entries");
  if ((entries_ - entries_.transpose()).cwiseAbs().maxCoeff() > kSymmetryTolerance) {
    throw Error(ErrorKind::InvalidArgument, "Gram matrix is not symmetric");
  }
  for (Eigen::Index i = 0; i < entries_.rows(); ++i) {
    if (entries_(i, i) != 1.0) throw Error(ErrorKind::InvalidArgument, "Gram diagonal must be 1");
  }
}

GramMatrix GramMatrix::of(const PointConfig& config) {
  Matrix g = kernels::gram(config.points());
  g = 0.5 * (g + g.transpose());
  g.diagonal().setOnes();
  return GramMatrix(std::move(g));
}

GramMatrix GramMatrix::block(int first, int count) const {
  if (first < 0 || count < 1 || first + count > size()) {
    throw Error(ErrorKind::InvalidArgument, "Gram block out of range");
  }
  return GramMatrix(entries_.block(first, first, count, count));
}

Vector GramMatrix::eigenvalues() const {
  return symmetric_eigen(entries_, false).values;
}

PointConfig realize_from_gram(const GramMatrix& g, int n) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "dimension must be at least 2");
  const SymmetricEigen eig = symmetric_eigen(g.entries());
  const Vector& values = eig.values;
  const Matrix& vectors = eig.vectors;
  const int count = g.size();
  if (values(0) < -kRealizeTolerance) {
    throw Error(ErrorKind::NotPSD, "Gram matrix has eigenvalue " + std::to_string(values(0)));
  }
  int rank = 0;
  for (int k = 0; k < count; ++k) rank += values(k) > kRealizeTolerance;
  if (rank > n) {
    throw Error(ErrorKind::RankTooHigh,
                "Gram matrix has rank " + std::to_string(rank) + " > " + std::to_string(n));
  }
  Matrix x = Matrix::Zero(n, count);
  for (int k = 0; k < rank; ++k) {
    const int source = count - 1 - k;
    x.row(k) = std::sqrt(values(source)) * vectors.col(source).transpose();
  }
  return PointConfig::normalized(std::move(x));
}

GramMatrix build_gram_16_in_5(double a, double b) {
  if (!(std::abs(a) < 1.0 && std::abs(b) < 1.0)) {
    throw Error(ErrorKind::ParameterOutOfRange, "16-point family needs |a| < 1 and |b| < 1");
  }
  const double root = std::sqrt((1.0 - a * a) * (1.0 - b * b) / 2.0);
  const std::map<char, double> values = {
      {'a', a},
      {'b', b},
      {'A', a * a},
      {'c', a * b + 0.5 * root},
      {'d', a * b - root},
      {'e', (3.0 * a * a - 1.0) / 2.0},
      {'f', (3.0 * b * b - 1.0) / 2.0},
      {'g', (3.0 * b * b + 1.0) / 4.0},
  };
  return GramMatrix(from_pattern(kPattern16, values));
}

GramMatrix build_gram_12_in_4_family1(double a) {
  if (!(a > 0.0 && a < 0.5)) throw Error(ErrorKind::ParameterOutOfRange, "family 1 needs 0 < a < 1/2");
  const std::map<char, double> values = {
      {'a', a}, {'b', a - 1.0}, {'c', 1.0 - 3.0 * a}, {'d', 4.0 * a - 1.0}, {'m', -2.0 * a}};
  return GramMatrix(from_pattern(kPattern12a, values));
}

GramMatrix build_gram_12_in_4_family2(double a) {
  if (!(a > 0.0 && a < 1.0 / 3.0)) throw Error(ErrorKind::ParameterOutOfRange, "family 2 needs 0 < a < 1/3");
  const std::map<char, double> values = {{'a', a},
                                         {'b', 1.0 - 12.0 * a * a},
                                         {'c', 6.0 * a * a - 1.0},
                                         {'d', 18.0 * a * a - 1.0},
                                         {'m', -3.0 * a},
                                         {'t', -1.0 / 3.0}};
  return GramMatrix(from_pattern(kPattern12b, values));
}

}  // namespace sphere
