#pragma once

#include <cstdint>
#include <random>

namespace qkle {

// n-bit block values and kappa-bit cipher keys. Both are capped at 16 bits.
using Word = std::uint32_t;
using Key = std::uint32_t;

using Rng = std::mt19937_64;

inline constexpr int kMaxBlockBits = 16;
inline constexpr int kMaxKeyBits = 16;

constexpr std::uint64_t low_mask(int bits) {
  return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

// Independent substream seed for (seed, stream); splitmix64 finalizer over both.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace qkle
