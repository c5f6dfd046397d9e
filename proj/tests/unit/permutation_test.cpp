#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "oracles.hpp"
#include "qkle/permutation.hpp"

using qkle::Permutation;

TEST(Permutation, InverseRoundTrip) {
  for (int n = 1; n <= 10; ++n) {
    const auto p = qkle::make_permutation(n, 7 + n);
    for (qkle::Word x = 0; x < (1u << n); ++x) {
      EXPECT_EQ(p.inverse(p(x)), x);
      EXPECT_EQ(p(p.inverse(x)), x);
    }
  }
}

TEST(Permutation, IsBijection) {
  const auto p = qkle::make_permutation(8, 3);
  std::set<qkle::Word> seen;
  for (qkle::Word x = 0; x < 256; ++x) seen.insert(p(x));
  EXPECT_EQ(seen.size(), 256u);
}

TEST(Permutation, SeedDeterminesTable) {
  EXPECT_EQ(qkle::make_permutation(6, 11), qkle::make_permutation(6, 11));
  EXPECT_FALSE(qkle::make_permutation(6, 11) == qkle::make_permutation(6, 12));
}

TEST(Permutation, ComposeMatchesTableComposition) {
  std::mt19937_64 rng(5);
  const auto a = oracle::random_perm(5, rng);
  const auto b = oracle::random_perm(5, rng);
  auto pa = Permutation::from_table(5, {a.begin(), a.end()});
  auto pb = Permutation::from_table(5, {b.begin(), b.end()});
  const auto expected = oracle::compose(a, b);
  const auto composed = pa.after(pb);
  for (qkle::Word x = 0; x < 32; ++x) EXPECT_EQ(composed(x), expected[x]);
  const auto inv = oracle::invert(a);
  for (qkle::Word x = 0; x < 32; ++x) EXPECT_EQ(pa.inverted()(x), inv[x]);
}

TEST(Permutation, RejectsNonBijection) {
  EXPECT_THROW(Permutation::from_table(2, {0, 1, 1, 3}), std::invalid_argument);
  EXPECT_THROW(Permutation::from_table(2, {0, 1, 2}), std::invalid_argument);
  EXPECT_THROW(Permutation::from_table(2, {0, 1, 2, 4}), std::invalid_argument);
}

TEST(Permutation, BinaryRoundTrip) {
  const auto p = qkle::make_permutation(9, 2);
  std::stringstream buf;
  p.write_binary(buf);
  EXPECT_EQ(buf.str().size(), 2u * 512);
  EXPECT_EQ(Permutation::read_binary(buf, 9), p);
}

TEST(Permutation, IdentityFixesEverything) {
  const auto id = Permutation::identity(4);
  for (qkle::Word x = 0; x < 16; ++x) EXPECT_EQ(id(x), x);
}

TEST(DeriveSeed, StreamsDiffer) {
  std::set<std::uint64_t> seeds;
  for (std::uint64_t s = 0; s < 100; ++s) seeds.insert(qkle::derive_seed(42, s));
  EXPECT_EQ(seeds.size(), 100u);
  EXPECT_EQ(qkle::derive_seed(1, 2), qkle::derive_seed(1, 2));
}
