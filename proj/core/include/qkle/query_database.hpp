#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "qkle/ciphers.hpp"

namespace qkle::attack {

// One register of the query database: sum_x |x>|payload[x]>, with missing
// inputs carrying the placeholder payload 0.
struct DatabaseRegister {
  std::vector<Word> payload;
  std::vector<bool> missing;

  std::size_t missing_count() const;
};

// c-register query state, stored register by register. Input x (u bits) stands
// for the plaintext x || 0^(n-u).
class QueryDatabase {
 public:
  QueryDatabase(int u, int n, int c);

  int input_bits() const noexcept { return u_; }
  int payload_bits() const noexcept { return n_; }
  int registers() const noexcept { return static_cast<int>(regs_.size()); }

  const DatabaseRegister& reg(int i) const { return regs_.at(i); }
  DatabaseRegister& reg(int i) { return regs_.at(i); }

  Word plaintext(Word x) const { return x << (n_ - u_); }

  // Fraction of placeholder inputs in register i.
  double missing_fraction(int i) const;
  // Replaces the listed inputs of register i by placeholders.
  void mask_register(int i, std::span<const Word> inputs);

  // (plaintext, ciphertext) pairs recorded in register 0.
  std::vector<std::pair<Word, Word>> known_pairs() const;

 private:
  int u_;
  int n_;
  std::vector<DatabaseRegister> regs_;
};

// 2^u chosen-plaintext queries on x || 0^(n-u); every register holds the same data.
QueryDatabase build_database_cpa(ConstructionInstance& instance, int u, int c);

// One query per known input (u = n); other inputs become placeholders.
QueryDatabase build_database_kpa(ConstructionInstance& instance, std::span<const Word> known_inputs, int c);

// <psi|psi'> = prod_i (1 - alpha_i), alpha_i the fraction of inputs whose payload differs in register i.
double database_overlap(const QueryDatabase& full, const QueryDatabase& partial);

// (1 - sqrt(2 c alpha))^2, or 0 once 2 c alpha exceeds 1.
double fidelity_bound(int c, double alpha);

}  // namespace qkle::attack
