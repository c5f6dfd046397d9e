#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "qkle/harness/experiment.hpp"
#include "qkle/key_test.hpp"
#include "qkle/offline_simon.hpp"
#include "qkle/query_database.hpp"
#include "qkle/simon.hpp"

using namespace qkle;
using namespace qkle::attack;

TEST(QueryDatabase, CpaHoldsReducedCodebook) {
  auto inst = harness::random_instance(ConstructionKind::EFX, 5, 3, 2);
  const auto db = build_database_cpa(inst, 3, 4);
  EXPECT_EQ(inst.online_forward(), 8u);
  EXPECT_EQ(db.registers(), 4);
  for (int i = 0; i < 4; ++i) {
    for (Word x = 0; x < 8; ++x) EXPECT_EQ(db.reg(i).payload[x], inst.evaluate(x << 2));
  }
  const auto pairs = db.known_pairs();
  ASSERT_EQ(pairs.size(), 8u);
  EXPECT_EQ(pairs[3].first, 12u);
}

TEST(QueryDatabase, KpaPlaceholdersAndOverlap) {
  auto inst = harness::random_instance(ConstructionKind::EFX, 4, 4, 3);
  std::vector<Word> known;
  for (Word x = 0; x < 16; ++x) {
    if (x != 3 && x != 9) known.push_back(x);
  }
  const auto full = build_database_cpa(inst, 4, 3);
  const auto partial = build_database_kpa(inst, known, 3);
  EXPECT_EQ(inst.online_forward(), 16u + 14u);
  EXPECT_TRUE(partial.reg(1).missing[9]);
  EXPECT_EQ(partial.reg(1).payload[9], 0u);
  EXPECT_DOUBLE_EQ(partial.missing_fraction(2), 2.0 / 16);
  EXPECT_EQ(partial.known_pairs().size(), 14u);

  // A placeholder equal to the real ciphertext does not count as a mismatch.
  double expected = 1;
  for (int i = 0; i < 3; ++i) {
    int differ = 0;
    for (Word x = 0; x < 16; ++x) differ += full.reg(i).payload[x] != partial.reg(i).payload[x];
    expected *= 1 - differ / 16.0;
  }
  EXPECT_NEAR(database_overlap(full, partial), expected, 1e-12);
}

TEST(QueryDatabase, FidelityBound) {
  EXPECT_DOUBLE_EQ(fidelity_bound(6, 0.0), 1.0);
  EXPECT_NEAR(fidelity_bound(6, 1.0 / 64), std::pow(1 - std::sqrt(12.0 / 64), 2), 1e-15);
  EXPECT_DOUBLE_EQ(fidelity_bound(6, 0.5), 0.0);
}

TEST(KeyTest, PlantedGuessGivesPeriodicFunction) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto inst = harness::random_instance(ConstructionKind::EFX, 5, 3, seed);
    const int u = 3;
    const auto db = build_database_cpa(inst, u, 1);
    const LayeredView view(inst);
    const auto family = layered_guess_family(view, u);
    const auto key = inst.full_key();
    const KeyGuess planted{static_cast<Word>(key.k1 & low_mask(5 - u)), key.k};
    const auto h = transformed_function(db.reg(0), family(pack_guess(planted, 5, u)));
    const oracle::Table table(h.begin(), h.end());
    const auto periods = oracle::periods_of(table, u);
    const std::uint32_t s = key.k1 >> (5 - u);
    if (s != 0) {
      ASSERT_EQ(periods.size(), 1u);
      EXPECT_EQ(periods[0], s);
    }
  }
}

TEST(KeyTest, RankDeficiencyMatchesEnumeration) {
  std::mt19937_64 gen(1);
  Rng rng(2);
  for (int u = 1; u <= 3; ++u) {
    for (int trial = 0; trial < 4; ++trial) {
      auto table = oracle::random_periodic(u, static_cast<std::uint32_t>(gen() % (1u << u)), gen);
      if (trial % 2) {
        for (auto& v : table) v %= 2;
      }
      const std::vector<Word> f(table.begin(), table.end());
      const auto d = qsim::simon_sample_distribution(f, u);
      const int c = u + 1;
      const std::vector<std::vector<double>> dists(c, d);
      EXPECT_NEAR(rank_deficiency_probability(dists, u, rng), oracle::enumerate_rank_deficiency(dists, u), 1e-12);
    }
  }
}

TEST(KeyTest, PackRoundTrip) {
  const KeyGuess g{0b101, 0b11};
  const auto packed = pack_guess(g, 6, 3);
  EXPECT_EQ(packed, 0b11101u);
  EXPECT_EQ(unpack_guess(packed, 6, 3).y1, g.y1);
  EXPECT_EQ(unpack_guess(packed, 6, 3).y2, g.y2);
}

TEST(OfflineSimon, RecoversEfxKey) {
  int wins = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto inst = harness::random_instance(ConstructionKind::EFX, 4, 4, seed);
    Rng rng(derive_seed(seed, 1));
    AttackOptions opts;
    opts.u = 2;
    opts.c = 6;
    const auto r = offline_simon_attack(inst, opts, rng);
    EXPECT_EQ(r.online_queries, 4u);
    EXPECT_EQ(r.iterations, 6);
    if (r.verified) {
      const LayeredView view(inst);
      for (Word x = 0; x < 4; ++x) EXPECT_EQ(view.encrypt(r.recovered, x << 2), inst.evaluate(x << 2));
    }
    wins += r.success;
  }
  EXPECT_GE(wins, 15);
}

TEST(OfflineSimon, ExactModeOnSmallInstance) {
  int verified = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto inst = harness::random_instance(ConstructionKind::FX, 2, 2, seed);
    Rng rng(seed);
    AttackOptions opts;
    opts.u = 1;
    opts.c = 3;
    opts.mode = Mode::EXACT;
    const auto r = offline_simon_attack(inst, opts, rng);
    EXPECT_EQ(r.mode, Mode::EXACT);
    EXPECT_EQ(r.online_queries, 2u);
    verified += r.verified;
  }
  EXPECT_GE(verified, 10);
}

TEST(OfflineSimon, ExactEmReducesToSimon) {
  int equivalent = 0, unique = 0, unique_wins = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto inst = harness::random_instance(ConstructionKind::EM, 3, 0, seed);
    Rng rng(seed);
    AttackOptions opts;
    opts.u = 3;
    opts.c = 7;
    opts.mode = Mode::EXACT;
    const auto r = offline_simon_attack(inst, opts, rng);
    const LayeredView view(inst);
    bool same = r.verified;
    for (Word x = 0; x < 8 && same; ++x) same = view.encrypt(r.recovered, x) == inst.evaluate(x);
    equivalent += same;
    // Keys are unique unless Pi(x ^ t) ^ Pi(x) is constant for some t.
    const auto& pi = inst.components().permutations[0];
    const oracle::Table table(pi.table().begin(), pi.table().end());
    bool structured = false;
    for (Word t = 1; t < 8; ++t) {
      bool constant = true;
      for (Word x = 0; x < 8; ++x) constant = constant && (table[x] ^ table[x ^ t]) == (table[0] ^ table[t]);
      structured = structured || constant;
    }
    if (!structured) {
      ++unique;
      unique_wins += r.success;
    }
  }
  EXPECT_GE(equivalent, 190);
  EXPECT_GE(unique_wins, unique * 95 / 100);
}

TEST(OfflineSimon, ExactModeRespectsQubitCap) {
  auto inst = harness::random_instance(ConstructionKind::EFX, 4, 4, 1);
  Rng rng(1);
  AttackOptions opts;
  opts.u = 2;
  opts.c = 6;
  opts.mode = Mode::EXACT;
  EXPECT_THROW(offline_simon_attack(inst, opts, rng), std::length_error);
}

TEST(OfflineSimon, EmQ2UsesCQueries) {
  int wins = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto inst = harness::random_instance(ConstructionKind::EM, 6, 0, seed);
    Rng rng(seed);
    const auto r = em_q2_attack(inst, 10, rng);
    EXPECT_EQ(r.quantum_queries, 10u);
    wins += r.success;
  }
  EXPECT_GE(wins, 18);
}

TEST(OfflineSimon, GroverMeetsSimon) {
  int wins = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto inst = harness::random_instance(ConstructionKind::FX, 4, 3, seed);
    Rng rng(seed);
    const auto r = grover_meets_simon_attack(inst, 8, rng);
    EXPECT_EQ(r.online_queries, 0u);
    EXPECT_EQ(r.quantum_queries % 16, 0u);
    wins += r.success;
  }
  EXPECT_GE(wins, 8);
}

TEST(OfflineSimon, OtherConstructions) {
  for (auto kind : {ConstructionKind::FX, ConstructionKind::TWO_XOR, ConstructionKind::DEFX,
                    ConstructionKind::ITERATED_EM, ConstructionKind::ECBC3}) {
    int wins = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      auto inst = harness::random_instance(kind, 4, 3, seed);
      Rng rng(seed);
      AttackOptions opts;
      opts.u = LayeredView(inst).has_inner() ? 4 : 2;
      opts.c = 8;
      wins += offline_simon_attack(inst, opts, rng).success;
    }
    EXPECT_GE(wins, 7) << to_string(kind);
  }
}
