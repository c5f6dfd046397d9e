#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "qkle/ciphers.hpp"
#include "qkle/offline_simon.hpp"

namespace qkle::harness {

enum class AttackKind { OfflineSimon, OfflineSimonKpa, GroverMeetsSimon, EmQ2, GuessAndEm, Exhaustive };

std::string to_string(AttackKind kind);
AttackKind parse_attack_kind(const std::string& name);

struct ExperimentConfig {
  AttackKind attack = AttackKind::OfflineSimon;
  ConstructionKind construction = ConstructionKind::EFX;
  int n = 4;
  int kappa = 4;
  int u = 2;
  int c = 0;  // 0 means n + 4
  attack::Mode mode = attack::Mode::TENSOR;
  double alpha = 0.0;      // missing fraction for known-plaintext databases
  std::uint64_t D = 0;     // data for the classical attacks, 0 means 2^n
  int trials = 1;
  std::uint64_t seed = 1;
  int max_searches = 8;
  int workers = 1;
  int qubit_cap = qsim::kDefaultQubitCap;
  std::string output;      // JSON report path
  std::string csv_output;  // sweep table path

  int samples() const { return c > 0 ? c : n + 4; }
};

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(std::vector<std::string> problems);
  const std::vector<std::string>& problems() const noexcept { return problems_; }

 private:
  std::vector<std::string> problems_;
};

// Sets one field from its text form; throws ConfigError naming the field.
void set_field(ExperimentConfig& config, const std::string& key, const std::string& value);

// Flat `key = value` lines; `#` starts a comment. Throws ConfigError listing every bad line.
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig load_config(const std::string& path);

// Field-level problems; empty when the config can run.
std::vector<std::string> validate(const ExperimentConfig& config);
void require_valid(const ExperimentConfig& config);

std::string to_text(const ExperimentConfig& config);

}  // namespace qkle::harness
