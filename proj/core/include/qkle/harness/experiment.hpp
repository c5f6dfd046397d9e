#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qkle/ciphers.hpp"
#include "qkle/harness/config.hpp"

namespace qkle::harness {

// Fresh ideal components and uniformly drawn keys, all derived from `seed`.
// ITERATED_EM uses five permutations with schedule k0,k0,k1,k0,k1,k0.
ConstructionInstance random_instance(ConstructionKind kind, int n, int kappa, std::uint64_t seed);

// Inputs known to a known-plaintext attacker: all but floor(alpha 2^n) inputs,
// one more missing with probability equal to the fractional part.
std::vector<Word> known_inputs_for(int n, double alpha, Rng& rng);

struct TrialRecord {
  std::uint64_t seed = 0;
  bool success = false;
  std::uint64_t online_queries = 0;
  std::uint64_t offline_evals = 0;
  std::uint64_t iterations = 0;
  std::uint64_t searches = 0;
  std::uint64_t tests = 0;
  std::uint64_t sim_time_units = 0;
  double alpha = 0.0;  // realized missing fraction
  nlohmann::json report;
};

struct ExperimentResult {
  ExperimentConfig config;
  std::vector<TrialRecord> trials;

  std::uint64_t successes() const;
  double success_rate() const;
  nlohmann::json to_json() const;
};

// Runs config.trials independent trials on config.workers threads. Trial i uses
// seed derive_seed(config.seed, i); the result does not depend on the worker count.
ExperimentResult run_attack(const ExperimentConfig& config);

// Runs and writes the JSON report to config.output when set.
ExperimentResult run_and_write(const ExperimentConfig& config);

enum class SweepAxis { U, Alpha, D, N };
std::string to_string(SweepAxis axis);
SweepAxis parse_sweep_axis(const std::string& name);

struct SweepTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void write_csv(std::ostream& out) const;
  std::string csv() const;
  std::size_t column(const std::string& name) const;
};

// One row per value. Throws ConfigError naming the index of the first invalid point.
SweepTable sweep(const ExperimentConfig& config, SweepAxis axis, const std::vector<double>& values);

}  // namespace qkle::harness
