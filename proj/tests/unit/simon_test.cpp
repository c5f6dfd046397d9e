#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qkle/gf2.hpp"
#include "qkle/simon.hpp"

using namespace qkle;
using namespace qkle::qsim;

namespace {

std::vector<Word> to_words(const oracle::Table& t) { return {t.begin(), t.end()}; }

}  // namespace

TEST(Simon, ClosedFormDistributionMatchesDenseSimulation) {
  std::mt19937_64 rng(1);
  for (int n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 6; ++trial) {
      const auto s = static_cast<std::uint32_t>(rng() % (1u << n));
      auto f = oracle::random_periodic(n, s, rng);
      if (trial % 3 == 2) {
        for (auto& v : f) v %= 3;  // collapse outputs: aperiodic, non-injective
      }
      const auto dense = oracle::dense_simon_distribution(f, n);
      const auto closed = simon_sample_distribution(to_words(f), n);
      ASSERT_EQ(closed.size(), dense.size());
      for (std::size_t y = 0; y < dense.size(); ++y) EXPECT_NEAR(closed[y], dense[y], 1e-12);
    }
  }
}

TEST(Simon, SubroutineSamplesAreOrthogonalToPeriod) {
  std::mt19937_64 gen(2);
  Rng rng(3);
  const int n = 6;
  const std::uint32_t s = 0b101101;
  const auto f = to_words(oracle::random_periodic(n, s, gen));
  for (int i = 0; i < 200; ++i) EXPECT_EQ(gf2::dot(simon_subroutine(f, n, rng), s), 0);
}

TEST(Simon, SubroutineFrequenciesPassChiSquare) {
  std::mt19937_64 gen(5);
  Rng rng(6);
  const int n = 3;
  auto table = oracle::random_periodic(n, 0, gen);
  for (auto& v : table) v %= 5;
  const auto f = to_words(table);
  const auto expected_p = oracle::dense_simon_distribution(table, n);
  const int shots = 4000;
  std::vector<double> observed(8, 0), expected(8, 0);
  for (int i = 0; i < shots; ++i) observed[simon_subroutine(f, n, rng)] += 1;
  int dof = -1;
  for (int y = 0; y < 8; ++y) {
    expected[y] = expected_p[y] * shots;
    if (expected[y] > 0) ++dof;
  }
  EXPECT_LT(oracle::chi_square(observed, expected), oracle::chi_square_critical(dof));
}

TEST(Simon, FullRecoversPeriodAndInjectivity) {
  std::mt19937_64 gen(7);
  Rng rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 5;
    const auto s = static_cast<std::uint32_t>(1 + gen() % ((1u << n) - 1));
    const auto periodic = to_words(oracle::random_periodic(n, s, gen));
    auto r = simon_full(periodic, n, {}, rng);
    EXPECT_EQ(r.result.outcome, gf2::PeriodOutcome::Period);
    EXPECT_EQ(r.result.period, s);
    EXPECT_EQ(r.quantum_queries, static_cast<std::uint64_t>(n + 4));
    for (auto y : r.samples) EXPECT_EQ(gf2::dot(y, s), 0);

    const auto injective = to_words(oracle::random_periodic(n, 0, gen));
    EXPECT_EQ(simon_full(injective, n, {}, rng).result.outcome, gf2::PeriodOutcome::Injective);
  }
}

TEST(Simon, SampleCountOption) {
  std::mt19937_64 gen(9);
  Rng rng(10);
  const auto f = to_words(oracle::random_periodic(4, 3, gen));
  SimonOptions opts;
  opts.samples = 9;
  opts.classical_check = false;
  const auto r = simon_full(f, 4, opts, rng);
  EXPECT_EQ(r.samples.size(), 9u);
  EXPECT_EQ(r.quantum_queries, 9u);
  EXPECT_EQ(r.classical_queries, 0u);
}
