#include "sphere/potential.hpp"

#include "sphere/error.hpp"

#include <charconv>
#include <cstdio>

namespace sphere {

PotentialSpec PotentialSpec::inverse_power(double s) {
  if (!(s > 0.0) || !std::isfinite(s)) {
    throw Error(ErrorKind::InvalidArgument, "inverse power exponent must be positive");
  }
  return {PotentialKind::InversePower, s};
}

PotentialSpec PotentialSpec::harmonic() { return {PotentialKind::Harmonic, 0.0}; }

PotentialSpec PotentialSpec::truncated_power(int k) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "truncated power exponent must be >= 1");
  return {PotentialKind::TruncatedPower, static_cast<double>(k)};
}

PotentialSpec PotentialSpec::logarithmic() { return {PotentialKind::Logarithmic, 0.0}; }

namespace {

double parse_number(const std::string& text, const std::string& whole) {
  double value = 0.0;
  const auto* begin = text.data();
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    throw Error(ErrorKind::InvalidArgument, "bad potential '" + whole + "'");
  }
  return value;
}

}  // namespace

PotentialSpec PotentialSpec::parse(const std::string& text) {
  if (text == "harmonic") return harmonic();
  if (text == "log" || text == "logarithmic") return logarithmic();
  if (text.rfind("power:", 0) == 0) return inverse_power(parse_number(text.substr(6), text));
  if (text.rfind("trunc:", 0) == 0) {
    const double k = parse_number(text.substr(6), text);
    if (k != std::floor(k)) throw Error(ErrorKind::InvalidArgument, "truncated exponent must be an integer");
    return truncated_power(static_cast<int>(k));
  }
  if (text.rfind("(4-r)^", 0) == 0) return parse("trunc:" + text.substr(6));
  throw Error(ErrorKind::InvalidArgument, "unknown potential '" + text + "'");
}

BoundPotential PotentialSpec::bind(int dimension) const {
  switch (kind_) {
    case PotentialKind::Harmonic:
      if (dimension <= 2) return {PotentialKind::Logarithmic, 0.0};
      return {PotentialKind::InversePower, dimension / 2.0 - 1.0};
    default:
      return {kind_, exponent_};
  }
}

std::string PotentialSpec::name() const {
  char buf[64];
  switch (kind_) {
    case PotentialKind::Harmonic: return "harmonic";
    case PotentialKind::Logarithmic: return "log";
    case PotentialKind::TruncatedPower:
      std::snprintf(buf, sizeof buf, "trunc:%d", truncated_exponent());
      return buf;
    case PotentialKind::InversePower:
      std::snprintf(buf, sizeof buf, "power:%.17g", exponent_);
      return buf;
  }
  return "?";
}

}  // namespace sphere
