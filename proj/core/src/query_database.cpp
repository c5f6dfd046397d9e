#include "qkle/query_database.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qkle::attack {

std::size_t DatabaseRegister::missing_count() const {
  return static_cast<std::size_t>(std::count(missing.begin(), missing.end(), true));
}

QueryDatabase::QueryDatabase(int u, int n, int c) : u_(u), n_(n) {
  if (n < 1 || n > kMaxBlockBits) throw std::invalid_argument("payload width out of range");
  if (u < 0 || u > n) throw std::invalid_argument("input width u must satisfy 0 <= u <= n, got " + std::to_string(u));
  if (c < 1) throw std::invalid_argument("register count must be positive");
  const std::size_t size = std::size_t{1} << u;
  regs_.assign(c, DatabaseRegister{std::vector<Word>(size, 0), std::vector<bool>(size, false)});
}

double QueryDatabase::missing_fraction(int i) const {
  const auto& r = reg(i);
  return static_cast<double>(r.missing_count()) / static_cast<double>(r.payload.size());
}

void QueryDatabase::mask_register(int i, std::span<const Word> inputs) {
  auto& r = reg(i);
  for (Word x : inputs) {
    if (x >= r.payload.size()) throw std::out_of_range("masked input out of range");
    r.payload[x] = 0;
    r.missing[x] = true;
  }
}

std::vector<std::pair<Word, Word>> QueryDatabase::known_pairs() const {
  std::vector<std::pair<Word, Word>> out;
  const auto& r = regs_.front();
  for (Word x = 0; x < r.payload.size(); ++x) {
    if (!r.missing[x]) out.emplace_back(plaintext(x), r.payload[x]);
  }
  return out;
}

QueryDatabase build_database_cpa(ConstructionInstance& instance, int u, int c) {
  const int n = instance.block_bits();
  QueryDatabase db(u, n, c);
  const std::size_t size = std::size_t{1} << u;
  std::vector<Word> payload(size);
  for (Word x = 0; x < size; ++x) payload[x] = instance.encrypt(db.plaintext(x));
  for (int i = 0; i < c; ++i) db.reg(i).payload = payload;
  return db;
}

QueryDatabase build_database_kpa(ConstructionInstance& instance, std::span<const Word> known_inputs, int c) {
  const int n = instance.block_bits();
  QueryDatabase db(n, n, c);
  const std::size_t size = std::size_t{1} << n;
  std::vector<Word> payload(size, 0);
  std::vector<bool> missing(size, true);
  for (Word x : known_inputs) {
    if (x >= size) throw std::out_of_range("known input wider than the block");
    if (!missing[x]) continue;
    payload[x] = instance.encrypt(x);
    missing[x] = false;
  }
  for (int i = 0; i < c; ++i) db.reg(i) = DatabaseRegister{payload, missing};
  return db;
}

double database_overlap(const QueryDatabase& full, const QueryDatabase& partial) {
  if (full.input_bits() != partial.input_bits() || full.payload_bits() != partial.payload_bits() ||
      full.registers() != partial.registers()) {
    throw std::invalid_argument("databases differ in shape");
  }
  double overlap = 1.0;
  for (int i = 0; i < full.registers(); ++i) {
    const auto& a = full.reg(i).payload;
    const auto& b = partial.reg(i).payload;
    std::size_t mismatches = 0;
    for (std::size_t x = 0; x < a.size(); ++x) mismatches += a[x] != b[x];
    overlap *= 1.0 - static_cast<double>(mismatches) / static_cast<double>(a.size());
  }
  return overlap;
}

double fidelity_bound(int c, double alpha) {
  if (c < 0 || alpha < 0.0) throw std::invalid_argument("fidelity bound needs nonnegative c and alpha");
  const double x = 2.0 * c * alpha;
  if (x > 1.0) return 0.0;
  const double r = 1.0 - std::sqrt(x);
  return std::clamp(r * r, 0.0, 1.0);
}

}  // namespace qkle::attack
