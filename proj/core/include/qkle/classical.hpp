#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qkle/ciphers.hpp"

namespace qkle::classical {

enum class PeriodFindOutcome { Period, Injective, Exhausted };

struct PeriodFindResult {
  PeriodFindOutcome outcome = PeriodFindOutcome::Exhausted;
  Word period = 0;
  Word x = 0;  // the colliding inputs, for Period
  Word y = 0;
  std::uint64_t queries = 0;
};

// Queries f on distinct points in random order until two outputs collide.
PeriodFindResult classical_period_find(std::span<const Word> f, std::uint64_t budget, Rng& rng);

struct ClassicalReport {
  std::string attack;
  bool success = false;   // verified and equal to the planted key
  bool verified = false;  // consistent with every recorded pair
  FullKey recovered;
  FullKey planted;
  std::uint64_t online_queries = 0;
  std::uint64_t offline_evals = 0;
  std::uint64_t time_units = 0;
  std::uint64_t memory_cells = 0;
  std::uint64_t guesses_tried = 0;
};

// First (k, k1, k2) in lexicographic order consistent with every pair.
ClassicalReport exhaustive_search(const LayeredView& view, std::span<const std::pair<Word, Word>> pairs);

// Even-Mansour sub-attack for one guess of k, on pairs (x, outer_k^-1(C(x))) where the
// plaintexts x = 0..D-1 were queried. Returns every whitening pair consistent with all of them.
struct GuessOutcome {
  std::vector<FullKey> consistent;
  std::uint64_t evals = 0;
  std::uint64_t memory_cells = 0;
};
GuessOutcome attack_guess(const LayeredView& view, Key k, std::span<const Word> ciphertexts);

// Guess k, peel the outer cipher and break the residual Even-Mansour layer with
// a difference-collision search. Needs a layered form without an inner layer.
ClassicalReport guess_and_em_attack(ConstructionInstance& instance, std::uint64_t D);

}  // namespace qkle::classical
