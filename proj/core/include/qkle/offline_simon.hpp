#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qkle/ciphers.hpp"
#include "qkle/key_test.hpp"
#include "qkle/query_database.hpp"
#include "qkle/state_vector.hpp"

namespace qkle::attack {

// EXACT simulates the joint key/database state; TENSOR works from per-register
// distributions and the closed-form amplification curve.
enum class Mode { EXACT, TENSOR };

std::string to_string(Mode mode);
Mode parse_mode(const std::string& name);

struct AttackReport {
  std::string attack;
  std::string query_model = "Q1";
  Mode mode = Mode::TENSOR;
  std::uint64_t seed = 0;

  bool success = false;    // verified and equal to the planted key
  bool verified = false;   // recovered key reproduces every recorded pair
  bool ambiguous = false;  // more than one key passed the test or the check
  FullKey recovered;
  FullKey planted;

  std::uint64_t online_queries = 0;        // classical construction queries building the database
  std::uint64_t quantum_queries = 0;       // superposition construction queries during the search
  std::uint64_t verification_queries = 0;  // construction queries made after the search
  std::uint64_t offline_evals = 0;         // E evaluations, forward and backward
  int iterations = 0;                      // amplification iterations per search
  int searches = 0;
  std::uint64_t tests = 0;
  std::uint64_t passing_keys = 0;
  std::uint64_t sim_time_units = 0;
};

struct EngineOptions {
  Mode mode = Mode::TENSOR;
  PassRule rule = PassRule::Majority;
  int max_searches = 8;
  int qubit_cap = qsim::kDefaultQubitCap;
};

struct EngineResult {
  std::optional<std::uint64_t> guess;
  int iterations = 0;
  int searches = 0;
  std::uint64_t tests = 0;
  std::uint64_t passing = 0;
  bool ambiguous = false;
};

// Returns true when the measured guess checks out; rejected guesses are excluded
// from later searches.
using GuessAcceptor = std::function<bool(std::uint64_t guess)>;

// Searches guesses g in [0, 2^guess_bits) for one whose mapped database is
// periodic. Without an acceptor a measured guess is accepted if it passes a
// fresh test.
EngineResult generalized_offline_simon(const QueryDatabase& db, int guess_bits, const GuessFamily& family,
                                       const EngineOptions& options, Rng& rng, const GuessAcceptor& accept = {});

// Qubits of the joint state in EXACT mode.
int exact_qubits(int guess_bits, int u, int n, int c);

struct AttackOptions {
  int u = 0;
  int c = 0;  // 0 means n + 4
  Mode mode = Mode::TENSOR;
  PassRule rule = PassRule::Majority;
  int max_searches = 8;
  int qubit_cap = qsim::kDefaultQubitCap;
  // Known-plaintext database over these inputs instead of chosen plaintexts (needs u = n).
  std::optional<std::vector<Word>> known_inputs;
};

// Offline-Simon key recovery on any construction with a layered form.
AttackReport offline_simon_attack(ConstructionInstance& instance, const AttackOptions& options, Rng& rng);

// Quantum search over k with a Simon test that queries the construction in
// superposition inside every iteration.
AttackReport grover_meets_simon_attack(ConstructionInstance& instance, int c, Rng& rng,
                                       Mode mode = Mode::TENSOR);

// Simon on f(x) = EM(x) ^ Pi(x) with superposition queries.
AttackReport em_q2_attack(ConstructionInstance& instance, int c, Rng& rng);

}  // namespace qkle::attack
