#include "qkle/offline_simon.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "qkle/amplify.hpp"
#include "qkle/gf2.hpp"
#include "qkle/simon.hpp"

namespace qkle::attack {

std::string to_string(Mode mode) { return mode == Mode::EXACT ? "EXACT" : "TENSOR"; }

Mode parse_mode(const std::string& name) {
  if (name == "EXACT" || name == "exact") return Mode::EXACT;
  if (name == "TENSOR" || name == "tensor") return Mode::TENSOR;
  throw std::invalid_argument("unknown mode: " + name);
}

int exact_qubits(int guess_bits, int u, int n, int c) { return guess_bits + c * (u + n); }

namespace {

std::uint64_t pick_uniform(const std::vector<std::uint64_t>& items, Rng& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, items.size() - 1);
  return items[pick(rng)];
}

// Success follows the single-marked curve at the full search size; a hit is
// uniform over the passing guesses still in play, a miss over the rest.
std::uint64_t tensor_search(const std::vector<char>& passes, const std::vector<char>& excluded, int iterations,
                            Rng& rng) {
  std::vector<std::uint64_t> marked;
  std::vector<std::uint64_t> unmarked;
  for (std::uint64_t g = 0; g < passes.size(); ++g) {
    if (!excluded[g]) (passes[g] ? marked : unmarked).push_back(g);
  }
  if (marked.empty() && unmarked.empty()) return 0;
  const double p = 1.0 / static_cast<double>(passes.size());
  const double success = marked.empty() ? 0.0 : qsim::amplification_success(p, iterations);
  const bool hit = std::bernoulli_distribution(success)(rng);
  if (unmarked.empty() || (hit && !marked.empty())) return pick_uniform(marked, rng);
  return pick_uniform(unmarked, rng);
}

// Per guess, the register map |x>|p> -> |z>|q> and its inverse as tables over (x << n) | p.
struct RegisterMaps {
  std::vector<std::uint32_t> forward;
  std::vector<std::uint32_t> inverse;
};

RegisterMaps register_maps(const GuessMap& map, int u, int n) {
  const std::size_t size = std::size_t{1} << (u + n);
  RegisterMaps out{std::vector<std::uint32_t>(size), std::vector<std::uint32_t>(size, UINT32_MAX)};
  for (std::uint32_t x = 0; x < (1u << u); ++x) {
    const std::uint32_t z = map.relabel.empty() ? x : map.relabel.at(x);
    for (std::uint32_t p = 0; p < (1u << n); ++p) {
      const std::uint32_t q = (map.payload.empty() ? p : map.payload.at(p)) ^ (map.xor_table.empty() ? 0 : map.xor_table.at(z));
      const std::uint32_t from = (x << n) | p;
      const std::uint32_t to = (z << n) | q;
      if (to >= size || out.inverse[to] != UINT32_MAX) throw std::invalid_argument("guess map is not a bijection");
      out.forward[from] = to;
      out.inverse[to] = from;
    }
  }
  return out;
}

std::uint64_t exact_search(const QueryDatabase& db, int guess_bits, const std::vector<RegisterMaps>& maps,
                           const std::vector<char>& excluded, int iterations, int qubit_cap, Rng& rng) {
  const int u = db.input_bits();
  const int n = db.payload_bits();
  const int c = db.registers();
  using qsim::Index;

  qsim::SearchCircuit circuit;
  circuit.layout.emplace_back("key", guess_bits);
  std::vector<std::string> xs;
  for (int i = 0; i < c; ++i) {
    xs.push_back("x" + std::to_string(i));
    circuit.layout.emplace_back(xs.back(), u);
    circuit.layout.emplace_back("p" + std::to_string(i), n);
  }
  const Index key_mask = low_mask(guess_bits);
  const int reg_bits = u + n;
  auto reg_field = [=](Index idx, int i) { return (idx >> (guess_bits + i * reg_bits)) & low_mask(reg_bits); };

  circuit.load = [&db, c, u, n, guess_bits, reg_bits](qsim::StateVector& sv) {
    auto amps = sv.amplitudes();
    std::fill(amps.begin(), amps.end(), qsim::Amplitude{0.0, 0.0});
    const Index tuples = Index{1} << (c * u);
    const double a = 1.0 / std::sqrt(static_cast<double>(tuples));
    for (Index t = 0; t < tuples; ++t) {
      Index idx = 0;
      for (int i = 0; i < c; ++i) {
        const Word x = static_cast<Word>((t >> (i * u)) & low_mask(u));
        const Index field = (Index{x} << n) | db.reg(i).payload[x];
        idx |= field << (guess_bits + i * reg_bits);
      }
      amps[idx] = a;
    }
  };
  circuit.prepare = [](qsim::StateVector& sv) { sv.hadamard("key"); };
  circuit.unprepare = circuit.prepare;

  auto apply_maps = [&, c](qsim::StateVector& sv, bool inverse) {
    sv.apply_basis_map([&](Index idx) {
      const auto& m = maps[idx & key_mask];
      Index out = idx & key_mask;
      for (int i = 0; i < c; ++i) {
        const auto f = reg_field(idx, i);
        out |= Index{inverse ? m.inverse[f] : m.forward[f]} << (guess_bits + i * reg_bits);
      }
      return out;
    });
  };
  circuit.oracle = [&](qsim::StateVector& sv) {
    apply_maps(sv, false);
    for (const auto& x : xs) sv.hadamard(x);
    sv.phase_flip([&](Index idx) {
      if (excluded[idx & key_mask]) return false;
      std::vector<gf2::Row> rows(c);
      for (int i = 0; i < c; ++i) rows[i] = reg_field(idx, i) >> n;
      return gf2::rank(rows, u) < u;
    });
    for (const auto& x : xs) sv.hadamard(x);
    apply_maps(sv, true);
  };
  circuit.reflect_register = "key";
  circuit.measure_register = "key";
  return qsim::amplitude_amplify(circuit, iterations, rng, qubit_cap).value;
}

}  // namespace

EngineResult generalized_offline_simon(const QueryDatabase& db, int guess_bits, const GuessFamily& family,
                                       const EngineOptions& options, Rng& rng, const GuessAcceptor& accept) {
  if (guess_bits < 0 || guess_bits > 24) throw std::invalid_argument("guess space out of range");
  if (!family) throw std::invalid_argument("empty guess family");
  if (options.max_searches < 1) throw std::invalid_argument("max_searches must be positive");
  const int u = db.input_bits();
  const int n = db.payload_bits();
  const std::uint64_t count = std::uint64_t{1} << guess_bits;

  if (options.mode == Mode::EXACT && exact_qubits(guess_bits, u, n, db.registers()) > options.qubit_cap &&
      guess_bits > 0) {
    throw std::length_error("EXACT mode needs " + std::to_string(exact_qubits(guess_bits, u, n, db.registers())) +
                            " qubits, cap is " + std::to_string(options.qubit_cap));
  }

  EngineResult result;
  result.iterations = qsim::grover_iterations(1.0 / static_cast<double>(count));

  std::vector<GuessMap> maps;
  maps.reserve(count);
  std::vector<char> passes(count, 0);
  for (std::uint64_t g = 0; g < count; ++g) {
    maps.push_back(family(g));
    passes[g] = test_key_guess(db, maps.back(), options.rule, rng).passes;
  }
  result.passing = static_cast<std::uint64_t>(std::count(passes.begin(), passes.end(), 1));
  result.ambiguous = result.passing > 1;

  std::vector<RegisterMaps> register_tables;
  if (options.mode == Mode::EXACT && guess_bits > 0) {
    for (const auto& m : maps) register_tables.push_back(register_maps(m, u, n));
  }

  const GuessAcceptor retest = [&](std::uint64_t g) { return test_key_guess(db, maps[g], PassRule::Sampled, rng).passes; };
  const GuessAcceptor& check = accept ? accept : retest;

  std::vector<char> excluded(count, 0);
  std::uint64_t remaining = count;
  for (int s = 0; s < options.max_searches && remaining > 0; ++s) {
    ++result.searches;
    result.tests += static_cast<std::uint64_t>(result.iterations);
    std::uint64_t g = 0;
    if (guess_bits > 0) {
      g = options.mode == Mode::TENSOR
              ? tensor_search(passes, excluded, result.iterations, rng)
              : exact_search(db, guess_bits, register_tables, excluded, result.iterations, options.qubit_cap, rng);
    }
    if (check(g)) {
      result.guess = g;
      return result;
    }
    if (!excluded[g]) {
      excluded[g] = 1;
      --remaining;
    }
  }
  return result;
}

namespace {

struct Completion {
  std::optional<FullKey> key;
  bool ambiguous = false;
  std::uint64_t evals = 0;
  std::uint64_t tests = 0;
};

// From an accepted guess (y2, y1): k1 high bits from fresh Simon samples, k2 from
// the first pair, then a check against every pair.
Completion complete_layered(const LayeredView& view, const QueryDatabase& db, const GuessFamily& family,
                            const std::vector<std::pair<Word, Word>>& pairs, std::uint64_t g, int c, Rng& rng) {
  Completion out;
  if (pairs.empty()) return out;
  const int n = view.block_bits();
  const int u = db.input_bits();
  const KeyGuess guess = unpack_guess(g, n, u);
  const int layers = view.layers();

  const auto h = transformed_function(db.reg(0), family(g));
  const auto dist = qsim::simon_sample_distribution(h, u);
  std::discrete_distribution<gf2::Row> sample(dist.begin(), dist.end());
  gf2::Matrix samples(u);
  for (int i = 0; i < c; ++i) samples.push_back(sample(rng));
  out.evals += 2 * static_cast<std::uint64_t>(c);
  out.tests += 1;

  const auto candidates = gf2::span_of(gf2::nullspace_basis(samples));
  const Permutation& outer = view.outer(guess.y2);
  const Permutation& middle = view.middle(guess.y2);
  const auto [x0, y0] = pairs.front();
  const Word a0 = view.has_inner() ? view.inner(guess.y2)(x0) : x0;

  std::vector<FullKey> consistent;
  for (auto s : candidates) {
    FullKey key{guess.y2, static_cast<Word>((s << (n - u)) | guess.y1), 0};
    key.k2 = outer.inverse(y0) ^ middle(key.k1 ^ a0);
    out.evals += static_cast<std::uint64_t>(layers);
    bool ok = true;
    for (const auto& [x, y] : pairs) {
      out.evals += static_cast<std::uint64_t>(layers);
      if (view.encrypt(key, x) != y) {
        ok = false;
        break;
      }
    }
    if (ok) consistent.push_back(key);
  }
  if (!consistent.empty()) out.key = consistent.front();
  out.ambiguous = consistent.size() > 1;
  return out;
}

std::uint64_t cube(int n) { return static_cast<std::uint64_t>(n) * n * n; }

}  // namespace

AttackReport offline_simon_attack(ConstructionInstance& instance, const AttackOptions& options, Rng& rng) {
  const int n = instance.block_bits();
  const int c = options.c > 0 ? options.c : n + 4;
  const LayeredView view(instance);
  const int u = options.known_inputs ? n : options.u;
  if (u < 0 || u > n) throw std::invalid_argument("u must satisfy 0 <= u <= n");
  if (options.known_inputs && options.u != n && options.u != 0) {
    throw std::invalid_argument("known-plaintext databases need u = n");
  }
  const int guess_bits = view.key_bits() + (n - u);
  if (options.mode == Mode::EXACT && guess_bits > 0 && exact_qubits(guess_bits, u, n, c) > options.qubit_cap) {
    throw std::length_error("EXACT mode needs " + std::to_string(exact_qubits(guess_bits, u, n, c)) +
                            " qubits, cap is " + std::to_string(options.qubit_cap));
  }
  const GuessFamily family = layered_guess_family(view, u);

  AttackReport report;
  report.attack = options.known_inputs ? "offline_simon_kpa" : "offline_simon";
  report.mode = options.mode;
  report.planted = instance.full_key();

  const auto before = instance.online_forward();
  const QueryDatabase db = options.known_inputs ? build_database_kpa(instance, *options.known_inputs, c)
                                                : build_database_cpa(instance, u, c);
  report.online_queries = instance.online_forward() - before;
  const auto pairs = db.known_pairs();

  Completion done;
  EngineOptions engine{options.mode, options.rule, options.max_searches, options.qubit_cap};
  const auto result = generalized_offline_simon(db, guess_bits, family, engine, rng, [&](std::uint64_t g) {
    done = complete_layered(view, db, family, pairs, g, c, rng);
    report.offline_evals += done.evals;
    report.tests += done.tests;
    return done.key.has_value();
  });

  report.iterations = result.iterations;
  report.searches = result.searches;
  report.passing_keys = result.passing;
  report.tests += result.tests;
  report.offline_evals += result.tests * 2 * static_cast<std::uint64_t>(c);
  report.ambiguous = result.ambiguous || done.ambiguous;
  if (result.guess && done.key) {
    report.verified = true;
    report.recovered = *done.key;
    report.success = report.recovered == report.planted;
  }
  report.sim_time_units = static_cast<std::uint64_t>(n) * (std::uint64_t{1} << u) + report.offline_evals +
                          cube(n) * report.tests;
  return report;
}

AttackReport grover_meets_simon_attack(ConstructionInstance& instance, int c, Rng& rng, Mode mode) {
  const int n = instance.block_bits();
  if (c <= 0) c = n + 4;
  const LayeredView view(instance);
  const GuessFamily family = layered_guess_family(view, n);

  AttackReport report;
  report.attack = "grover_meets_simon";
  report.query_model = "Q2";
  report.mode = mode;
  report.planted = instance.full_key();

  // The superposition queries rebuild this state inside each test; its contents
  // are the full codebook.
  QueryDatabase db(n, n, c);
  std::vector<Word> codebook(std::size_t{1} << n);
  for (Word x = 0; x < codebook.size(); ++x) codebook[x] = instance.evaluate(x);
  for (int i = 0; i < c; ++i) db.reg(i).payload = codebook;

  const auto before = instance.online_forward();
  std::vector<std::pair<Word, Word>> pairs;
  const Word check_points = static_cast<Word>(std::min<std::uint64_t>(codebook.size(), n + 4));
  for (Word x = 0; x < check_points; ++x) pairs.emplace_back(x, instance.encrypt(x));
  const auto classical = instance.online_forward() - before;

  Completion done;
  EngineOptions engine{mode, PassRule::Majority, 8, qsim::kDefaultQubitCap};
  const auto result = generalized_offline_simon(db, view.key_bits(), family, engine, rng, [&](std::uint64_t g) {
    done = complete_layered(view, db, family, pairs, g, c, rng);
    report.offline_evals += done.evals;
    report.tests += done.tests;
    return done.key.has_value();
  });

  report.iterations = result.iterations;
  report.searches = result.searches;
  report.passing_keys = result.passing;
  report.tests += result.tests;
  report.quantum_queries = 2 * static_cast<std::uint64_t>(c) * result.tests;
  report.verification_queries = classical + static_cast<std::uint64_t>(c) * (report.tests - result.tests);
  report.offline_evals += result.tests * 2 * static_cast<std::uint64_t>(c);
  report.ambiguous = result.ambiguous || done.ambiguous;
  if (result.guess && done.key) {
    report.verified = true;
    report.recovered = *done.key;
    report.success = report.recovered == report.planted;
  }
  report.sim_time_units = report.quantum_queries + report.offline_evals + cube(n) * report.tests;
  return report;
}

AttackReport em_q2_attack(ConstructionInstance& instance, int c, Rng& rng) {
  if (instance.kind() != ConstructionKind::EM) throw std::invalid_argument("em_q2_attack needs an EM instance");
  const int n = instance.block_bits();
  if (c <= 0) c = n + 4;
  const Permutation& pi = instance.components().permutations[0];

  AttackReport report;
  report.attack = "em_q2";
  report.query_model = "Q2";
  report.planted = instance.full_key();

  std::vector<Word> f(std::size_t{1} << n);
  for (Word x = 0; x < f.size(); ++x) f[x] = instance.evaluate(x) ^ pi(x);
  qsim::SimonOptions simon;
  simon.samples = c;
  simon.classical_check = false;
  const auto run = qsim::simon_full(f, n, simon, rng);
  report.quantum_queries = run.quantum_queries;
  report.offline_evals = 2 * static_cast<std::uint64_t>(c);
  report.tests = 1;

  const auto before = instance.online_forward();
  std::vector<std::pair<Word, Word>> pairs;
  const Word check_points = static_cast<Word>(std::min<std::uint64_t>(f.size(), n + 1));
  for (Word x = 0; x < check_points; ++x) pairs.emplace_back(x, instance.encrypt(x));
  report.verification_queries = instance.online_forward() - before;

  std::vector<FullKey> consistent;
  for (auto s : gf2::span_of(gf2::nullspace_basis(gf2::Matrix(n, run.samples)))) {
    const FullKey key{0, static_cast<Word>(s), pairs.front().second ^ pi(static_cast<Word>(s))};
    bool ok = true;
    for (const auto& [x, y] : pairs) {
      ++report.offline_evals;
      if ((pi(x ^ key.k1) ^ key.k2) != y) {
        ok = false;
        break;
      }
    }
    if (ok) consistent.push_back(key);
  }
  report.passing_keys = consistent.size();
  report.ambiguous = consistent.size() > 1;
  if (consistent.size() == 1) {
    report.verified = true;
    report.recovered = consistent.front();
    report.success = report.recovered == report.planted;
  }
  report.sim_time_units = report.quantum_queries + report.offline_evals + cube(n) * report.tests;
  return report;
}

}  // namespace qkle::attack
