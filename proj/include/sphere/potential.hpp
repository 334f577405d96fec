#pragma once

#include <cmath>
#include <string>

namespace sphere {

enum class PotentialKind { InversePower, Harmonic, TruncatedPower, Logarithmic };

/// Value and first two derivatives of f at a squared distance r.
struct RadialTerms {
  double f;
  double df;
  double d2f;
};

/// A potential after the dimension-dependent harmonic case has been
/// resolved. Only InversePower, TruncatedPower and Logarithmic occur here.
class BoundPotential {
 public:
  BoundPotential(PotentialKind kind, double exponent) : kind_(kind), exponent_(exponent) {
    const double twice = 2.0 * exponent;
    half_integer_ = kind == PotentialKind::InversePower && twice == std::floor(twice) && twice <= 64.0;
    whole_ = static_cast<int>(std::floor(exponent));
  }

  PotentialKind kind() const { return kind_; }
  double exponent() const { return exponent_; }

  /// True if f is finite at r = 0 (coincident points are allowed).
  bool regular_at_zero() const { return kind_ == PotentialKind::TruncatedPower; }

  double value(double r) const {
    switch (kind_) {
      case PotentialKind::InversePower: return inverse_power(r);
      case PotentialKind::TruncatedPower: return int_pow(std::max(0.0, 4.0 - r), whole_);
      default: return -std::log(r);
    }
  }

  /// f'(r) only; the gradient kernels need nothing else.
  double derivative(double r) const {
    switch (kind_) {
      case PotentialKind::InversePower: return -exponent_ * inverse_power(r) / r;
      case PotentialKind::TruncatedPower:
        return -static_cast<double>(whole_) * int_pow(std::max(0.0, 4.0 - r), whole_ - 1);
      default: return -1.0 / r;
    }
  }

  /// f(r + delta) - f(r), evaluated without cancellation against f(r).
  double difference(double r, double delta) const {
    const double r2 = r + delta;
    switch (kind_) {
      case PotentialKind::InversePower:
        if (half_integer_ && exponent_ == static_cast<double>(whole_)) {
          // a^-s - b^-s = -(a^s - b^s) / (a^s b^s), a^s - b^s = delta * sum a^m b^(s-1-m)
          double sum = 0.0;
          double pa = 1.0;
          for (int m = 0; m < whole_; ++m) {
            sum += pa * int_pow(r, whole_ - 1 - m);
            pa *= r2;
          }
          return -delta * sum / (int_pow(r, whole_) * int_pow(r2, whole_));
        }
        return inverse_power(r) * std::expm1(-exponent_ * std::log1p(delta / r));
      case PotentialKind::TruncatedPower: {
        const double u = 4.0 - r;
        const double u2 = 4.0 - r2;
        if (u <= 0.0 || u2 <= 0.0) return value(r2) - value(r);
        double sum = 0.0;
        double pa = 1.0;
        for (int m = 0; m < whole_; ++m) {
          sum += pa * int_pow(u, whole_ - 1 - m);
          pa *= u2;
        }
        return -delta * sum;
      }
      default:
        return -std::log1p(delta / r);
    }
  }

  RadialTerms terms(double r) const {
    switch (kind_) {
      case PotentialKind::InversePower: {
        const double f = inverse_power(r);
        return {f, -exponent_ * f / r, exponent_ * (exponent_ + 1.0) * f / (r * r)};
      }
      case PotentialKind::TruncatedPower: {
        const double u = std::max(0.0, 4.0 - r);
        const int k = whole_;
        const double km1 = k >= 1 ? int_pow(u, k - 1) : 0.0;
        const double km2 = k >= 2 ? int_pow(u, k - 2) : 0.0;
        return {int_pow(u, k), -k * km1, static_cast<double>(k) * (k - 1) * km2};
      }
      default:
        return {-std::log(r), -1.0 / r, 1.0 / (r * r)};
    }
  }

 private:
  static double int_pow(double base, int e) {
    double result = 1.0;
    while (e > 0) {
      if (e & 1) result *= base;
      base *= base;
      e >>= 1;
    }
    return result;
  }

  double inverse_power(double r) const {
    if (half_integer_) {
      const double inv = 1.0 / r;
      double v = int_pow(inv, whole_);
      if (exponent_ != static_cast<double>(whole_)) v *= std::sqrt(inv);
      return v;
    }
    return std::pow(r, -exponent_);
  }

  PotentialKind kind_;
  double exponent_;
  bool half_integer_ = false;
  int whole_ = 0;
};

/// A potential function f on squared distance r in (0, 4].
class PotentialSpec {
 public:
  static PotentialSpec inverse_power(double s);
  static PotentialSpec harmonic();
  static PotentialSpec truncated_power(int k);
  static PotentialSpec logarithmic();

  /// Accepts "harmonic", "log", "power:<s>" and "trunc:<k>" (also "(4-r)^k").
  static PotentialSpec parse(const std::string& text);

  PotentialKind kind() const { return kind_; }
  double exponent() const { return exponent_; }
  int truncated_exponent() const { return static_cast<int>(exponent_); }

  /// Resolves the harmonic potential for ambient dimension n: 1/r^(n/2-1)
  /// for n >= 3 and -log r in the plane, where n/2 - 1 vanishes.
  BoundPotential bind(int dimension) const;

  std::string name() const;

  friend bool operator==(const PotentialSpec&, const PotentialSpec&) = default;

 private:
  PotentialSpec(PotentialKind kind, double exponent) : kind_(kind), exponent_(exponent) {}

  PotentialKind kind_ = PotentialKind::Harmonic;
  double exponent_ = 0.0;
};

}  // namespace sphere
