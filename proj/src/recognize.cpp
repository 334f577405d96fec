#include "sphere/analysis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <string>

namespace sphere {

namespace {

constexpr double kRecognizeTolerance = 1e-10;
constexpr long kQuadraticBound = 1000;

using Row = std::array<long double, 4>;

long double dot(const Row& a, const Row& b) {
  long double s = 0;
  for (int k = 0; k < 4; ++k) s += a[k] * b[k];
  return s;
}

// LLL on three vectors in R^4, delta = 0.99.
void lll(std::array<Row, 3>& b) {
  auto gram_schmidt = [&](std::array<Row, 3>& star, long double mu[3][3], long double norm[3]) {
    for (int i = 0; i < 3; ++i) {
      star[i] = b[i];
      for (int j = 0; j < i; ++j) {
        mu[i][j] = dot(b[i], star[j]) / norm[j];
        for (int k = 0; k < 4; ++k) star[i][k] -= mu[i][j] * star[j][k];
      }
      norm[i] = dot(star[i], star[i]);
    }
  };
  std::array<Row, 3> star;
  long double mu[3][3] = {};
  long double norm[3] = {};
  gram_schmidt(star, mu, norm);
  int i = 1;
  for (int guard = 0; i < 3 && guard < 10000; ++guard) {
    for (int j = i - 1; j >= 0; --j) {
      const long double m = std::round(mu[i][j]);
      if (m != 0) {
        for (int k = 0; k < 4; ++k) b[i][k] -= m * b[j][k];
        gram_schmidt(star, mu, norm);
      }
    }
    if (norm[i] >= (0.99L - mu[i][i - 1] * mu[i][i - 1]) * norm[i - 1]) {
      ++i;
    } else {
      std::swap(b[i], b[i - 1]);
      gram_schmidt(star, mu, norm);
      i = std::max(i - 1, 1);
    }
  }
}

bool squarefree(long d) {
  for (long p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

}  // namespace

double ExactValue::value() const {
  if (kind == Kind::Quadratic) return (static_cast<double>(p) + static_cast<double>(q) * std::sqrt(static_cast<double>(d))) / static_cast<double>(r);
  return static_cast<double>(p) / static_cast<double>(q);
}

std::string ExactValue::to_string() const {
  char buf[128];
  switch (kind) {
    case Kind::Rational:
      if (q == 1) std::snprintf(buf, sizeof buf, "%ld", p);
      else std::snprintf(buf, sizeof buf, "%ld/%ld", p, q);
      return buf;
    case Kind::Quadratic: {
      char root[64];
      if (q == 1) std::snprintf(root, sizeof root, "sqrt(%ld)", d);
      else if (q == -1) std::snprintf(root, sizeof root, "-sqrt(%ld)", d);
      else std::snprintf(root, sizeof root, "%ld*sqrt(%ld)", q, d);
      std::string s;
      if (p == 0) {
        s = root;
      } else {
        std::snprintf(buf, sizeof buf, "%ld%s%s", p, q > 0 ? "+" : "", root);
        s = r == 1 ? buf : "(" + std::string(buf) + ")";
      }
      if (r != 1) s += "/" + std::to_string(r);
      return s;
    }
    default:
      return "?";
  }
}

ExactValue recognize_value(double x, long max_den, long max_disc) {
  ExactValue out;
  if (!std::isfinite(x)) return out;

  // Continued fraction convergents.
  long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double rest = x;
  for (int step = 0; step < 64; ++step) {
    const double a = std::floor(rest);
    if (std::abs(a) > 1e12) break;
    const long ai = static_cast<long>(a);
    const long h2 = ai * h1 + h0;
    const long k2 = ai * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    const double err = std::abs(x - static_cast<double>(h1) / static_cast<double>(k1));
    if (err <= kRecognizeTolerance * std::max(1.0, std::abs(x))) {
      out.kind = ExactValue::Kind::Rational;
      out.p = h1;
      out.q = k1;
      out.residual = err;
      return out;
    }
    const double frac = rest - a;
    if (frac == 0.0) break;
    rest = 1.0 / frac;
  }

  const long double scale = 1e13L;
  long best_height = 0;
  for (long d = 2; d <= max_disc; ++d) {
    if (!squarefree(d)) continue;
    const long double root = std::sqrt(static_cast<long double>(d));
    std::array<Row, 3> b = {Row{1, 0, 0, scale * x}, Row{0, 1, 0, scale}, Row{0, 0, 1, scale * root}};
    lll(b);
    for (const Row& v : b) {
      long r = std::lround(static_cast<double>(v[0]));
      long p = -std::lround(static_cast<double>(v[1]));
      long q = -std::lround(static_cast<double>(v[2]));
      if (r == 0 || q == 0) continue;
      if (r < 0) {
        r = -r;
        p = -p;
        q = -q;
      }
      const long g = std::gcd(std::gcd(std::abs(p), std::abs(q)), r);
      p /= g;
      q /= g;
      r /= g;
      if (std::abs(p) > kQuadraticBound || std::abs(q) > kQuadraticBound || r > kQuadraticBound) continue;
      const double value = (static_cast<double>(p) + static_cast<double>(q) * std::sqrt(static_cast<double>(d))) / static_cast<double>(r);
      const double err = std::abs(value - x);
      if (err > kRecognizeTolerance * std::max(1.0, std::abs(x))) continue;
      const long height = std::max({std::abs(p), std::abs(q), r});
      if (out.kind == ExactValue::Kind::Unrecognized || height < best_height) {
        out.kind = ExactValue::Kind::Quadratic;
        out.p = p;
        out.q = q;
        out.d = d;
        out.r = r;
        out.residual = err;
        best_height = height;
      }
    }
  }
  return out;
}

}  // namespace sphere
