#include "qkle/key_test.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include "qkle/gf2.hpp"
#include "qkle/simon.hpp"

namespace qkle::attack {

namespace {

constexpr int kExactRankBits = 6;

std::uint64_t pack_basis(const std::vector<gf2::Row>& basis) {
  std::uint64_t key = 0;
  for (auto r : basis) key = (key << 7) | (r | 0x40);
  return key;
}

}  // namespace

GuessFamily layered_guess_family(const LayeredView& view, int u) {
  const int n = view.block_bits();
  if (u < 0 || u > n) throw std::invalid_argument("input width u out of range");
  if (view.has_inner() && u != n) throw std::invalid_argument("constructions with an inner layer need u = n");
  return [view, n, u](std::uint64_t g) {
    const KeyGuess guess = unpack_guess(g, n, u);
    if (guess.y2 >> view.key_bits()) throw std::out_of_range("key guess out of range");
    GuessMap map;
    const std::size_t size = std::size_t{1} << u;
    if (view.has_inner()) {
      const auto t = view.inner(guess.y2).table();
      map.relabel.assign(t.begin(), t.end());
    }
    const auto inv = view.outer(guess.y2).inverse_table();
    map.payload.assign(inv.begin(), inv.end());
    const Permutation& mid = view.middle(guess.y2);
    map.xor_table.resize(size);
    for (Word z = 0; z < size; ++z) map.xor_table[z] = mid((z << (n - u)) | guess.y1);
    return map;
  };
}

std::vector<Word> transformed_function(const DatabaseRegister& reg, const GuessMap& map) {
  const std::size_t size = reg.payload.size();
  if (!map.relabel.empty() && map.relabel.size() != size) throw std::invalid_argument("relabel table size mismatch");
  if (!map.xor_table.empty() && map.xor_table.size() != size) throw std::invalid_argument("xor table size mismatch");
  std::vector<Word> h(size);
  for (Word x = 0; x < size; ++x) {
    const Word z = map.relabel.empty() ? x : map.relabel[x];
    const Word p = map.payload.empty() ? reg.payload[x] : map.payload.at(reg.payload[x]);
    h[z] = p ^ (map.xor_table.empty() ? 0 : map.xor_table[z]);
  }
  return h;
}

double rank_deficiency_probability(const std::vector<std::vector<double>>& dists, int u, Rng& rng, int mc_samples) {
  if (u == 0) return 0.0;
  const std::size_t size = std::size_t{1} << u;
  for (const auto& d : dists) {
    if (d.size() != size) throw std::invalid_argument("distribution size does not match u");
  }

  if (u <= kExactRankBits) {
    // Markov chain over spanned subspaces, keyed by canonical basis.
    std::unordered_map<std::uint64_t, std::pair<std::vector<gf2::Row>, double>> states;
    states.emplace(pack_basis({}), std::make_pair(std::vector<gf2::Row>{}, 1.0));
    for (const auto& d : dists) {
      std::unordered_map<std::uint64_t, std::pair<std::vector<gf2::Row>, double>> next;
      for (const auto& [key, entry] : states) {
        const auto& [basis, prob] = entry;
        for (gf2::Row y = 0; y < size; ++y) {
          if (d[y] == 0.0) continue;
          std::vector<gf2::Row> rows = basis;
          rows.push_back(y);
          auto grown = gf2::canonical_basis(rows, u);
          const double w = prob * d[y];
          if (static_cast<int>(grown.size()) == u) continue;
          auto& slot = next[pack_basis(grown)];
          if (slot.first.empty() && !grown.empty()) slot.first = std::move(grown);
          slot.second += w;
        }
      }
      states = std::move(next);
    }
    double deficient = 0.0;
    for (const auto& [key, entry] : states) deficient += entry.second;
    return std::clamp(deficient, 0.0, 1.0);
  }

  std::vector<std::discrete_distribution<gf2::Row>> pickers;
  for (const auto& d : dists) pickers.emplace_back(d.begin(), d.end());
  int hits = 0;
  std::vector<gf2::Row> rows(dists.size());
  for (int s = 0; s < mc_samples; ++s) {
    for (std::size_t i = 0; i < pickers.size(); ++i) rows[i] = pickers[i](rng);
    hits += gf2::rank(rows, u) < u;
  }
  return static_cast<double>(hits) / mc_samples;
}

TestOutcome test_key_guess(const QueryDatabase& db, const GuessMap& map, PassRule rule, Rng& rng) {
  const int u = db.input_bits();
  std::vector<std::vector<double>> dists;
  dists.reserve(db.registers());
  for (int i = 0; i < db.registers(); ++i) {
    dists.push_back(qsim::simon_sample_distribution(transformed_function(db.reg(i), map), u));
  }

  TestOutcome out;
  out.pass_probability = rank_deficiency_probability(dists, u, rng);
  if (rule == PassRule::Majority) {
    out.passes = out.pass_probability > 0.5;
  } else {
    std::vector<gf2::Row> rows;
    for (const auto& d : dists) rows.push_back(std::discrete_distribution<gf2::Row>(d.begin(), d.end())(rng));
    out.passes = u > 0 && gf2::rank(rows, u) < u;
  }
  return out;
}

TestOutcome test_key_guess(const QueryDatabase& db, const KeyGuess& guess, const LayeredView& view, PassRule rule,
                           Rng& rng) {
  const int u = db.input_bits();
  const int n = view.block_bits();
  if (db.payload_bits() != n) throw std::invalid_argument("database payload width differs from the construction");
  if ((guess.y1 >> (n - u)) || (guess.y2 >> view.key_bits())) throw std::invalid_argument("key guess out of range");
  return test_key_guess(db, layered_guess_family(view, u)(pack_guess(guess, n, u)), rule, rng);
}

}  // namespace qkle::attack
