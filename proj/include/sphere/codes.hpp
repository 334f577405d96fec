#pragma once

#include "sphere/point_config.hpp"

#include <cstdint>
#include <vector>

namespace sphere {

/// A binary code of length at most 32. Bit k of a word is coordinate k.
class BinaryCode {
 public:
  /// Words are sorted; duplicates or bits beyond `length` throw InvalidArgument.
  BinaryCode(int length, std::vector<std::uint32_t> words);

  int length() const { return length_; }
  int size() const { return static_cast<int>(words_.size()); }
  const std::vector<std::uint32_t>& words() const { return words_; }
  int min_distance() const { return min_distance_; }

  /// Number of codeword pairs at each Hamming distance 0..length (unordered, distinct).
  std::vector<long> distance_distribution() const;

 private:
  int length_;
  std::vector<std::uint32_t> words_;
  int min_distance_;
};

/// The (16, 256, 6) Nordstrom-Robinson code as the Gray image of the
/// octacode: the extended cyclic code over Z4 generated by x^3 + 2x^2 + x + 3.
BinaryCode build_nordstrom_robinson();

/// Words with `value` at `coordinate`, with that coordinate deleted.
/// Throws EmptyShortening if no word matches.
BinaryCode shorten(const BinaryCode& code, int coordinate, int value);

/// Maps each word to R^L with bit 0 -> +1/sqrt(L) and bit 1 -> -1/sqrt(L).
PointConfig cube_embed(const BinaryCode& code);

}  // namespace sphere
