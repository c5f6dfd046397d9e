#include "qkle/harness/config.hpp"

#include <fstream>
#include <sstream>

#include "qkle/simon.hpp"

namespace qkle::harness {

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : "; ") + s;
  return out;
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(const std::string& key, const std::string& value) {
  std::istringstream in(value);
  T out{};
  in >> out;
  if (!in || !in.eof()) throw ConfigError({key + ": expected a number, got '" + value + "'"});
  return out;
}

}  // namespace

std::string to_string(AttackKind kind) {
  switch (kind) {
    case AttackKind::OfflineSimon: return "offline_simon";
    case AttackKind::OfflineSimonKpa: return "offline_simon_kpa";
    case AttackKind::GroverMeetsSimon: return "grover_meets_simon";
    case AttackKind::EmQ2: return "em_q2";
    case AttackKind::GuessAndEm: return "guess_and_em";
    case AttackKind::Exhaustive: return "exhaustive";
  }
  return "?";
}

AttackKind parse_attack_kind(const std::string& name) {
  for (auto kind : {AttackKind::OfflineSimon, AttackKind::OfflineSimonKpa, AttackKind::GroverMeetsSimon,
                    AttackKind::EmQ2, AttackKind::GuessAndEm, AttackKind::Exhaustive}) {
    if (to_string(kind) == name) return kind;
  }
  throw std::invalid_argument("unknown attack: " + name);
}

ConfigError::ConfigError(std::vector<std::string> problems)
    : std::runtime_error("invalid config: " + join(problems)), problems_(std::move(problems)) {}

void set_field(ExperimentConfig& config, const std::string& key, const std::string& value) {
  try {
    if (key == "attack") config.attack = parse_attack_kind(value);
    else if (key == "construction") config.construction = parse_construction_kind(value);
    else if (key == "n") config.n = parse_number<int>(key, value);
    else if (key == "kappa") config.kappa = parse_number<int>(key, value);
    else if (key == "u") config.u = parse_number<int>(key, value);
    else if (key == "c") config.c = parse_number<int>(key, value);
    else if (key == "mode") config.mode = attack::parse_mode(value);
    else if (key == "alpha") config.alpha = parse_number<double>(key, value);
    else if (key == "D") config.D = parse_number<std::uint64_t>(key, value);
    else if (key == "trials") config.trials = parse_number<int>(key, value);
    else if (key == "seed") config.seed = parse_number<std::uint64_t>(key, value);
    else if (key == "max_searches") config.max_searches = parse_number<int>(key, value);
    else if (key == "workers") config.workers = parse_number<int>(key, value);
    else if (key == "qubit_cap") config.qubit_cap = parse_number<int>(key, value);
    else if (key == "output") config.output = value;
    else if (key == "csv_output") config.csv_output = value;
    else throw ConfigError({key + ": unknown field"});
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError({key + ": " + e.what()});
  }
}

ExperimentConfig parse_config(std::istream& in) {
  ExperimentConfig config;
  std::vector<std::string> problems;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      problems.push_back("line " + std::to_string(number) + ": expected key = value");
      continue;
    }
    try {
      set_field(config, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    } catch (const ConfigError& e) {
      for (const auto& p : e.problems()) problems.push_back("line " + std::to_string(number) + ": " + p);
    }
  }
  if (!problems.empty()) throw ConfigError(problems);
  return config;
}

ExperimentConfig parse_config_text(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError({"cannot read config file '" + path + "'"});
  return parse_config(in);
}

std::vector<std::string> validate(const ExperimentConfig& cfg) {
  std::vector<std::string> p;
  const bool layered_inner = cfg.construction == ConstructionKind::DEFX ||
                             cfg.construction == ConstructionKind::ECBC3 ||
                             cfg.construction == ConstructionKind::ITERATED_EM;
  if (cfg.n < 1 || cfg.n > kMaxBlockBits) p.push_back("n: must lie in [1, 16]");
  const bool keyed = cfg.construction != ConstructionKind::EM && cfg.construction != ConstructionKind::ITERATED_EM;
  if (keyed && (cfg.kappa < 1 || cfg.kappa > kMaxKeyBits)) p.push_back("kappa: must lie in [1, 16]");
  if (cfg.c < 0) p.push_back("c: must be nonnegative");
  if (cfg.trials < 0) p.push_back("trials: must be nonnegative");
  if (cfg.max_searches < 1) p.push_back("max_searches: must be positive");
  if (cfg.workers < 1) p.push_back("workers: must be positive");
  if (cfg.qubit_cap < 1 || cfg.qubit_cap > 30) p.push_back("qubit_cap: must lie in [1, 30]");
  if (cfg.alpha < 0.0 || cfg.alpha > 1.0) p.push_back("alpha: must lie in [0, 1]");
  if (!p.empty()) return p;

  const int key_bits = cfg.construction == ConstructionKind::EM ? 0
                       : cfg.construction == ConstructionKind::ITERATED_EM ? cfg.n
                                                                           : cfg.kappa;
  switch (cfg.attack) {
    case AttackKind::OfflineSimon:
    case AttackKind::OfflineSimonKpa: {
      const int u = cfg.attack == AttackKind::OfflineSimonKpa ? cfg.n : cfg.u;
      if (cfg.attack == AttackKind::OfflineSimon && (cfg.u < 0 || cfg.u > cfg.n)) p.push_back("u: must lie in [0, n]");
      if (layered_inner && u != cfg.n) p.push_back("u: " + qkle::to_string(cfg.construction) + " needs u = n");
      if (cfg.attack == AttackKind::OfflineSimon && cfg.alpha != 0.0) {
        p.push_back("alpha: only the known-plaintext attack takes a missing fraction");
      }
      const int guess_bits = key_bits + (cfg.n - u);
      if (guess_bits > 20) p.push_back("kappa: guess space of 2^" + std::to_string(guess_bits) + " is too large");
      if (cfg.mode == attack::Mode::EXACT && guess_bits > 0) {
        const int q = attack::exact_qubits(guess_bits, u, cfg.n, cfg.samples());
        if (q > cfg.qubit_cap) {
          p.push_back("mode: EXACT needs " + std::to_string(q) + " qubits, cap is " + std::to_string(cfg.qubit_cap));
        }
      }
      break;
    }
    case AttackKind::GroverMeetsSimon:
      if (layered_inner) p.push_back("construction: Grover-meets-Simon needs a construction without an inner layer");
      if (cfg.mode == attack::Mode::EXACT && key_bits > 0 &&
          attack::exact_qubits(key_bits, cfg.n, cfg.n, cfg.samples()) > cfg.qubit_cap) {
        p.push_back("mode: EXACT exceeds the qubit cap");
      }
      break;
    case AttackKind::EmQ2:
      if (cfg.construction != ConstructionKind::EM) p.push_back("construction: em_q2 needs EM");
      if (cfg.n > qsim::kSimonMaxBits) p.push_back("n: em_q2 simulates at most 12 bits");
      break;
    case AttackKind::GuessAndEm:
      if (layered_inner) p.push_back("construction: guess-and-EM needs a construction without an inner layer");
      if (cfg.D == 1 || cfg.D > (std::uint64_t{1} << cfg.n)) p.push_back("D: must lie in [2, 2^n]");
      break;
    case AttackKind::Exhaustive:
      if (cfg.D == 1 || cfg.D > (std::uint64_t{1} << cfg.n)) p.push_back("D: must lie in [2, 2^n]");
      if (key_bits + 2 * cfg.n > 24) p.push_back("n: exhaustive search over 2^(kappa+2n) keys is too large");
      break;
  }
  return p;
}

void require_valid(const ExperimentConfig& config) {
  auto problems = validate(config);
  if (!problems.empty()) throw ConfigError(std::move(problems));
}

std::string to_text(const ExperimentConfig& c) {
  std::ostringstream out;
  out << "attack = " << to_string(c.attack) << '\n'
      << "construction = " << qkle::to_string(c.construction) << '\n'
      << "n = " << c.n << '\n'
      << "kappa = " << c.kappa << '\n'
      << "u = " << c.u << '\n'
      << "c = " << c.c << '\n'
      << "mode = " << attack::to_string(c.mode) << '\n'
      << "alpha = " << c.alpha << '\n'
      << "D = " << c.D << '\n'
      << "trials = " << c.trials << '\n'
      << "seed = " << c.seed << '\n'
      << "max_searches = " << c.max_searches << '\n'
      << "workers = " << c.workers << '\n'
      << "qubit_cap = " << c.qubit_cap << '\n';
  if (!c.output.empty()) out << "output = " << c.output << '\n';
  if (!c.csv_output.empty()) out << "csv_output = " << c.csv_output << '\n';
  return out.str();
}

}  // namespace qkle::harness
