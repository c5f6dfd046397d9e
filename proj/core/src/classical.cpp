#include "qkle/classical.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace qkle::classical {

PeriodFindResult classical_period_find(std::span<const Word> f, std::uint64_t budget, Rng& rng) {
  std::vector<Word> order(f.size());
  std::iota(order.begin(), order.end(), Word{0});
  std::shuffle(order.begin(), order.end(), rng);

  PeriodFindResult result;
  std::unordered_map<Word, Word> seen;
  for (Word x : order) {
    if (result.queries >= budget) return result;
    ++result.queries;
    const auto [it, fresh] = seen.emplace(f[x], x);
    if (!fresh) {
      result.outcome = PeriodFindOutcome::Period;
      result.x = it->second;
      result.y = x;
      result.period = it->second ^ x;
      return result;
    }
  }
  result.outcome = PeriodFindOutcome::Injective;
  return result;
}

ClassicalReport exhaustive_search(const LayeredView& view, std::span<const std::pair<Word, Word>> pairs) {
  if (pairs.size() < 2) throw std::invalid_argument("exhaustive search needs at least two known pairs");
  const int n = view.block_bits();
  const std::uint64_t keys = std::uint64_t{1} << view.key_bits();
  const std::uint64_t blocks = std::uint64_t{1} << n;
  const auto layers = static_cast<std::uint64_t>(view.layers());

  ClassicalReport report;
  report.attack = "exhaustive_search";
  report.memory_cells = pairs.size();
  for (std::uint64_t k = 0; k < keys; ++k) {
    for (std::uint64_t k1 = 0; k1 < blocks; ++k1) {
      for (std::uint64_t k2 = 0; k2 < blocks; ++k2) {
        const FullKey key{static_cast<Key>(k), static_cast<Word>(k1), static_cast<Word>(k2)};
        ++report.guesses_tried;
        bool ok = true;
        for (const auto& [x, y] : pairs) {
          report.offline_evals += layers;
          if (view.encrypt(key, x) != y) {
            ok = false;
            break;
          }
        }
        if (ok) {
          report.verified = true;
          report.recovered = key;
          report.time_units = report.offline_evals;
          return report;
        }
      }
    }
  }
  report.time_units = report.offline_evals;
  return report;
}

GuessOutcome attack_guess(const LayeredView& view, Key k, std::span<const Word> ciphertexts) {
  const int n = view.block_bits();
  const std::uint64_t blocks = std::uint64_t{1} << n;
  const std::uint64_t D = ciphertexts.size();
  if (D < 2) throw std::invalid_argument("the Even-Mansour step needs at least two queries");
  if (view.has_inner()) throw std::invalid_argument("guess-and-EM needs a construction without an inner layer");

  const Permutation& outer = view.outer(k);
  const Permutation& P = view.middle(k);
  GuessOutcome out;

  // Residual layer v(x) = k2 ^ P(x ^ k1), peeled on the first `used` plaintexts,
  // a power of two no larger than 2^ceil(n/2). They form the subspace Q of low bits.
  std::uint64_t used = 2;
  while (used * 2 <= std::min<std::uint64_t>(D, std::uint64_t{1} << ((n + 1) / 2))) used *= 2;
  std::vector<Word> v(used);
  for (std::uint64_t x = 0; x < used; ++x) v[x] = outer.inverse(ciphertexts[x]);
  out.evals += used;

  // Pairs (x, x ^ 1): v(x) ^ v(x ^ 1) = P(w) ^ P(w ^ 1) when w = x ^ k1 or x ^ k1 ^ 1.
  std::unordered_multimap<Word, Word> table;
  for (Word x = 0; x < used; x += 2) table.emplace(v[x] ^ v[x + 1], x);
  out.memory_cells = table.size();

  // w ^ k1 lies in Q for exactly one coset representative w of Q.
  for (Word w = 0; w < blocks; w += static_cast<Word>(used)) {
    const Word delta = P(w) ^ P(w ^ 1);
    out.evals += 2;
    const auto range = table.equal_range(delta);
    for (auto it = range.first; it != range.second; ++it) {
      const Word x = it->second;
      for (Word flip : {Word{0}, Word{1}}) {
        FullKey key{k, x ^ w ^ flip, 0};
        key.k2 = v[x] ^ P(x ^ key.k1);
        out.evals += 1;
        bool ok = true;
        for (Word z = 0; z < D; ++z) {
          out.evals += static_cast<std::uint64_t>(view.layers());
          if (view.encrypt(key, z) != ciphertexts[z]) {
            ok = false;
            break;
          }
        }
        if (ok && std::find(out.consistent.begin(), out.consistent.end(), key) == out.consistent.end()) {
          out.consistent.push_back(key);
        }
      }
    }
  }
  return out;
}

ClassicalReport guess_and_em_attack(ConstructionInstance& instance, std::uint64_t D) {
  const int n = instance.block_bits();
  if (D < 2) throw std::invalid_argument("guess-and-EM needs D >= 2");
  if (D > (std::uint64_t{1} << n)) throw std::invalid_argument("D exceeds the codebook");
  const LayeredView view(instance);

  ClassicalReport report;
  report.attack = "guess_and_em";
  report.planted = instance.full_key();

  const auto before = instance.online_forward();
  std::vector<Word> ciphertexts(D);
  for (Word x = 0; x < D; ++x) ciphertexts[x] = instance.encrypt(x);
  report.online_queries = instance.online_forward() - before;
  report.memory_cells = D;

  const std::uint64_t keys = std::uint64_t{1} << view.key_bits();
  for (std::uint64_t k = 0; k < keys; ++k) {
    ++report.guesses_tried;
    const auto outcome = attack_guess(view, static_cast<Key>(k), ciphertexts);
    report.offline_evals += outcome.evals;
    report.memory_cells = std::max(report.memory_cells, D + outcome.memory_cells);
    if (!outcome.consistent.empty()) {
      report.verified = true;
      report.recovered = outcome.consistent.front();
      report.success = report.recovered == report.planted;
      break;
    }
  }
  report.time_units = report.offline_evals;
  return report;
}

}  // namespace qkle::classical
