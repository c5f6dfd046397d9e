#include "qkle/permutation.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace qkle {

namespace {
void check_bits(int n) {
  if (n < 1 || n > kMaxBlockBits) {
    throw std::invalid_argument("permutation block size out of range [1, 16]: " + std::to_string(n));
  }
}
}  // namespace

Permutation::Permutation(int bits, std::vector<std::uint16_t> forward)
    : bits_(bits), forward_(std::move(forward)), inverse_(forward_.size()) {
  for (std::size_t x = 0; x < forward_.size(); ++x) inverse_[forward_[x]] = static_cast<std::uint16_t>(x);
}

Permutation Permutation::identity(int n) {
  check_bits(n);
  std::vector<std::uint16_t> table(std::size_t{1} << n);
  std::iota(table.begin(), table.end(), std::uint16_t{0});
  return Permutation(n, std::move(table));
}

Permutation Permutation::from_table(int n, std::vector<std::uint16_t> table) {
  check_bits(n);
  const std::size_t size = std::size_t{1} << n;
  if (table.size() != size) throw std::invalid_argument("permutation table has wrong length");
  std::vector<bool> seen(size, false);
  for (auto v : table) {
    if (v >= size || seen[v]) throw std::invalid_argument("permutation table is not a bijection");
    seen[v] = true;
  }
  return Permutation(n, std::move(table));
}

Permutation Permutation::inverted() const { return Permutation(bits_, inverse_); }

Permutation Permutation::after(const Permutation& first) const {
  if (first.bits_ != bits_) throw std::invalid_argument("composing permutations of different widths");
  std::vector<std::uint16_t> table(forward_.size());
  for (std::size_t x = 0; x < table.size(); ++x) table[x] = forward_[first.forward_[x]];
  return Permutation(bits_, std::move(table));
}

void Permutation::write_binary(std::ostream& out) const {
  for (auto v : forward_) {
    const char bytes[2] = {static_cast<char>(v & 0xff), static_cast<char>(v >> 8)};
    out.write(bytes, 2);
  }
}

Permutation Permutation::read_binary(std::istream& in, int n) {
  check_bits(n);
  std::vector<std::uint16_t> table(std::size_t{1} << n);
  for (auto& v : table) {
    unsigned char bytes[2];
    if (!in.read(reinterpret_cast<char*>(bytes), 2)) throw std::runtime_error("truncated permutation dump");
    v = static_cast<std::uint16_t>(bytes[0] | (bytes[1] << 8));
  }
  return from_table(n, std::move(table));
}

Permutation make_permutation(int n, std::uint64_t seed) {
  check_bits(n);
  std::vector<std::uint16_t> table(std::size_t{1} << n);
  std::iota(table.begin(), table.end(), std::uint16_t{0});
  Rng rng(seed);
  std::shuffle(table.begin(), table.end(), rng);
  return Permutation::from_table(n, std::move(table));
}

}  // namespace qkle
