#pragma once

#include <span>
#include <vector>

#include "qkle/gf2.hpp"
#include "qkle/types.hpp"

namespace qkle::qsim {

inline constexpr int kSimonMaxBits = 12;

// One run of Simon's subroutine on a fresh 2n-qubit state: H on the input
// register, query f, measure the output register, H again, measure the input.
// f has 2^n entries with values below 2^n.
gf2::Row simon_subroutine(std::span<const Word> f, int n, Rng& rng);

struct SimonOptions {
  int samples = 0;  // 0 means n + 4
  // Resolve rank-deficient outcomes by checking f(x) == f(x ^ s) on every x for
  // each nonzero candidate s in the null space.
  bool classical_check = true;
};

struct SimonResult {
  gf2::PeriodResult result;
  std::vector<gf2::Row> samples;
  std::uint64_t quantum_queries = 0;
  std::uint64_t classical_queries = 0;
};

SimonResult simon_full(std::span<const Word> f, int n, const SimonOptions& options, Rng& rng);

// Exact distribution of the measured input register of Simon's subroutine:
// P(y) = sum over output values v of |2^-u sum_{f(x)=v} (-1)^{x.y}|^2.
std::vector<double> simon_sample_distribution(std::span<const Word> f, int u);

}  // namespace qkle::qsim
