#include "qkle/simon.hpp"

#include <stdexcept>
#include <string>
#include <unordered_map>

#include "qkle/state_vector.hpp"

namespace qkle::qsim {

gf2::Row simon_subroutine(std::span<const Word> f, int n, Rng& rng) {
  if (n < 1 || n > kSimonMaxBits) throw std::invalid_argument("Simon subroutine supports 1 <= n <= 12, got " + std::to_string(n));
  if (f.size() != (std::size_t{1} << n)) throw std::invalid_argument("function table does not have 2^n entries");
  StateVector sv({{"x", n}, {"y", n}});
  sv.hadamard("x");
  sv.apply_xor_oracle(f, "x", "y");
  sv.measure("y", rng);
  sv.hadamard("x");
  return sv.measure("x", rng).value;
}

SimonResult simon_full(std::span<const Word> f, int n, const SimonOptions& options, Rng& rng) {
  const int c = options.samples > 0 ? options.samples : n + 4;
  SimonResult out;
  out.samples.reserve(c);
  for (int i = 0; i < c; ++i) out.samples.push_back(simon_subroutine(f, n, rng));
  out.quantum_queries = static_cast<std::uint64_t>(c);
  out.result = gf2::recover_period(out.samples, n);

  if (options.classical_check && out.result.outcome != gf2::PeriodOutcome::Injective) {
    const auto basis = gf2::nullspace_basis(gf2::Matrix(n, out.samples));
    const auto candidates = gf2::span_of(basis);
    std::vector<gf2::Row> passing;
    for (auto s : candidates) {
      if (s == 0) continue;
      bool period = true;
      for (Word x = 0; x < f.size() && period; ++x) {
        out.classical_queries += 2;
        period = f[x] == f[x ^ s];
      }
      if (period) passing.push_back(s);
    }
    if (passing.empty()) {
      out.result.outcome = gf2::PeriodOutcome::Injective;
      out.result.period = 0;
    } else if (passing.size() == 1) {
      out.result.outcome = gf2::PeriodOutcome::Period;
      out.result.period = passing.front();
    } else {
      out.result.outcome = gf2::PeriodOutcome::Undetermined;
      out.result.period = 0;
    }
  }
  return out;
}

std::vector<double> simon_sample_distribution(std::span<const Word> f, int u) {
  const std::size_t size = std::size_t{1} << u;
  if (f.size() != size) throw std::invalid_argument("function table does not have 2^u entries");

  std::unordered_map<Word, std::vector<Word>> fibers;
  for (Word x = 0; x < size; ++x) fibers[f[x]].push_back(x);

  std::vector<double> dist(size, 0.0);
  const double norm = 1.0 / static_cast<double>(size * size);
  std::size_t singletons = 0;
  for (const auto& [value, xs] : fibers) {
    if (xs.size() == 1) {
      ++singletons;
      continue;
    }
    for (Word y = 0; y < size; ++y) {
      long long sum = 0;
      for (Word x : xs) sum += gf2::dot(x, y) ? -1 : 1;
      dist[y] += static_cast<double>(sum * sum) * norm;
    }
  }
  for (auto& p : dist) p += static_cast<double>(singletons) * norm;
  return dist;
}

}  // namespace qkle::qsim
