#include "sphere/codes.hpp"

#include "sphere/error.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <climits>
#include <cmath>
#include <string>

namespace sphere {

BinaryCode::BinaryCode(int length, std::vector<std::uint32_t> words) : length_(length), words_(std::move(words)) {
  if (length < 1 || length > 32) throw Error(ErrorKind::InvalidArgument, "code length must be in 1..32");
  std::sort(words_.begin(), words_.end());
  if (std::adjacent_find(words_.begin(), words_.end()) != words_.end()) {
    throw Error(ErrorKind::InvalidArgument, "code has repeated words");
  }
  const std::uint32_t mask = length == 32 ? ~0u : ((1u << length) - 1u);
  for (std::uint32_t w : words_) {
    if (w & ~mask) throw Error(ErrorKind::InvalidArgument, "word longer than the code length");
  }
  min_distance_ = words_.size() < 2 ? 0 : INT_MAX;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    for (std::size_t j = i + 1; j < words_.size(); ++j) {
      min_distance_ = std::min(min_distance_, std::popcount(words_[i] ^ words_[j]));
    }
  }
}

std::vector<long> BinaryCode::distance_distribution() const {
  std::vector<long> counts(length_ + 1, 0);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    for (std::size_t j = i + 1; j < words_.size(); ++j) ++counts[std::popcount(words_[i] ^ words_[j])];
  }
  return counts;
}

BinaryCode build_nordstrom_robinson() {
  constexpr std::array<int, 4> generator = {3, 1, 2, 1};  // 3 + x + 2x^2 + x^3
  constexpr std::array<std::uint32_t, 4> gray = {0b00, 0b10, 0b11, 0b01};  // 0->00 1->01 2->11 3->10
  std::vector<std::uint32_t> words;
  words.reserve(256);
  for (int message = 0; message < 256; ++message) {
    std::array<int, 8> c{};
    for (int i = 0; i < 4; ++i) {
      const int m = (message >> (2 * i)) & 3;
      for (int j = 0; j < 4; ++j) c[(i + j) % 7] += m * generator[j];
    }
    int sum = 0;
    for (int i = 0; i < 7; ++i) {
      c[i] &= 3;
      sum += c[i];
    }
    c[7] = (4 - sum % 4) % 4;
    std::uint32_t word = 0;
    for (int i = 0; i < 8; ++i) word |= gray[c[i]] << (2 * i);
    words.push_back(word);
  }
  return BinaryCode(16, std::move(words));
}

BinaryCode shorten(const BinaryCode& code, int coordinate, int value) {
  if (coordinate < 0 || coordinate >= code.length()) {
    throw Error(ErrorKind::InvalidArgument, "coordinate " + std::to_string(coordinate) + " out of range");
  }
  if (value != 0 && value != 1) throw Error(ErrorKind::InvalidArgument, "bit value must be 0 or 1");
  if (code.length() == 1) throw Error(ErrorKind::EmptyShortening, "cannot shorten a length-1 code");
  const std::uint32_t low = (1u << coordinate) - 1u;
  std::vector<std::uint32_t> kept;
  for (std::uint32_t w : code.words()) {
    if (static_cast<int>((w >> coordinate) & 1u) != value) continue;
    kept.push_back((w & low) | ((w >> (coordinate + 1)) << coordinate));
  }
  if (kept.empty()) throw Error(ErrorKind::EmptyShortening, "no word has that bit value");
  return BinaryCode(code.length() - 1, std::move(kept));
}

PointConfig cube_embed(const BinaryCode& code) {
  if (code.size() == 0) throw Error(ErrorKind::InvalidArgument, "cannot embed an empty code");
  const int length = code.length();
  if (length < 2) throw Error(ErrorKind::InvalidArgument, "cube embedding needs length at least 2");
  const double unit = 1.0 / std::sqrt(static_cast<double>(length));
  Matrix x(length, code.size());
  for (int i = 0; i < code.size(); ++i) {
    for (int k = 0; k < length; ++k) x(k, i) = ((code.words()[i] >> k) & 1u) ? -unit : unit;
  }
  return PointConfig(std::move(x));
}

}  // namespace sphere
