#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "qkle/types.hpp"

namespace qkle {

// A bijection on n-bit blocks (1 <= n <= 16), stored with its inverse table.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(int n);
  // Throws std::invalid_argument unless `table` is a bijection on {0, ..., 2^n - 1}.
  static Permutation from_table(int n, std::vector<std::uint16_t> table);

  int bits() const noexcept { return bits_; }
  std::size_t size() const noexcept { return forward_.size(); }

  Word operator()(Word x) const { return forward_[x]; }
  Word inverse(Word y) const { return inverse_[y]; }

  std::span<const std::uint16_t> table() const noexcept { return forward_; }
  std::span<const std::uint16_t> inverse_table() const noexcept { return inverse_; }

  Permutation inverted() const;
  // (*this) after `first`: x -> this(first(x)).
  Permutation after(const Permutation& first) const;

  // Debug dump: 2^n little-endian 16-bit entries of the forward table.
  void write_binary(std::ostream& out) const;
  static Permutation read_binary(std::istream& in, int n);

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.bits_ == b.bits_ && a.forward_ == b.forward_;
  }

 private:
  Permutation(int bits, std::vector<std::uint16_t> forward);

  int bits_ = 0;
  std::vector<std::uint16_t> forward_;
  std::vector<std::uint16_t> inverse_;
};

// Uniform permutation drawn by Fisher-Yates from a stream seeded with `seed`.
Permutation make_permutation(int n, std::uint64_t seed);

}  // namespace qkle
