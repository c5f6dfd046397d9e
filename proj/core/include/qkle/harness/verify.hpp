#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qkle/state_vector.hpp"

namespace qkle::harness {

struct VerifyOptions {
  std::vector<std::string> suites;  // empty runs every suite
  std::uint64_t seed = 1;
  // Hadamard constant used by the unitarity suite; anything but 1/sqrt(2) should fail it.
  double hadamard_coefficient = qsim::StateVector::kInvSqrt2;
};

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::string first_failure;
};

struct VerifySummary {
  std::vector<SuiteResult> suites;

  bool passed() const;
  nlohmann::json to_json() const;
};

// unitarity, orthogonality, oracle-equivalence, bounds-grid
const std::vector<std::string>& verify_suite_names();

// Throws std::invalid_argument on an unknown suite name.
VerifySummary verify(const VerifyOptions& options);

}  // namespace qkle::harness
