#include "qkle/harness/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "qkle/amplify.hpp"
#include "qkle/classical.hpp"
#include "qkle/harness/report.hpp"
#include "qkle/offline_simon.hpp"

namespace qkle::harness {

ConstructionInstance random_instance(ConstructionKind kind, int n, int kappa, std::uint64_t seed) {
  Rng rng(derive_seed(seed, 0));
  auto block = [&] { return static_cast<Word>(rng() & low_mask(n)); };
  auto cipher = [&](std::uint64_t stream) -> CipherPtr { return make_ideal_cipher(n, kappa, derive_seed(seed, stream)); };

  Components comp;
  KeyMaterial keys;
  switch (kind) {
    case ConstructionKind::EM:
      comp.permutations.push_back(make_permutation(n, derive_seed(seed, 100)));
      break;
    case ConstructionKind::ITERATED_EM:
      for (std::uint64_t i = 0; i < 5; ++i) comp.permutations.push_back(make_permutation(n, derive_seed(seed, 100 + i)));
      break;
    case ConstructionKind::FX:
    case ConstructionKind::TWO_XOR:
    case ConstructionKind::ECBC3:
      comp.ciphers = {cipher(1)};
      break;
    case ConstructionKind::EFX:
      comp.ciphers = {cipher(1), cipher(2)};
      break;
    case ConstructionKind::DEFX:
      comp.ciphers = {cipher(1), cipher(2), cipher(3)};
      break;
  }
  const bool keyed = kind != ConstructionKind::EM && kind != ConstructionKind::ITERATED_EM;
  if (keyed) keys.k = static_cast<Key>(rng() & low_mask(kappa));
  keys.k1 = block();
  keys.k2 = block();
  if (kind == ConstructionKind::ITERATED_EM) {
    keys.round_keys = {block(), block()};
    keys.schedule = {0, 0, 1, 0, 1, 0};
  }
  if (kind == ConstructionKind::ECBC3) {
    keys.m1 = block();
    keys.m2 = block();
    keys.k1 = keys.k2 = 0;
  }
  return make_construction(kind, std::move(comp), std::move(keys));
}

std::vector<Word> known_inputs_for(int n, double alpha, Rng& rng) {
  const std::size_t size = std::size_t{1} << n;
  const double expected = alpha * static_cast<double>(size);
  std::size_t missing = static_cast<std::size_t>(std::floor(expected));
  if (std::bernoulli_distribution(expected - std::floor(expected))(rng)) ++missing;
  missing = std::min(missing, size);
  std::vector<Word> inputs(size);
  std::iota(inputs.begin(), inputs.end(), Word{0});
  std::shuffle(inputs.begin(), inputs.end(), rng);
  inputs.resize(size - missing);
  std::sort(inputs.begin(), inputs.end());
  return inputs;
}

namespace {

TrialRecord run_trial(const ExperimentConfig& cfg, std::uint64_t trial_seed) {
  TrialRecord rec;
  rec.seed = trial_seed;
  auto instance = random_instance(cfg.construction, cfg.n, cfg.kappa, trial_seed);
  Rng rng(derive_seed(trial_seed, 1));
  const std::uint64_t D = cfg.D ? cfg.D : (std::uint64_t{1} << cfg.n);

  auto take = [&](const attack::AttackReport& r) {
    rec.success = r.success;
    rec.online_queries = r.online_queries;
    rec.offline_evals = r.offline_evals;
    rec.iterations = static_cast<std::uint64_t>(r.iterations);
    rec.searches = static_cast<std::uint64_t>(r.searches);
    rec.tests = r.tests;
    rec.sim_time_units = r.sim_time_units;
    rec.report = to_json(r);
  };
  auto take_classical = [&](const classical::ClassicalReport& r) {
    rec.success = r.success;
    rec.online_queries = r.online_queries;
    rec.offline_evals = r.offline_evals;
    rec.sim_time_units = r.time_units;
    rec.report = to_json(r);
  };

  switch (cfg.attack) {
    case AttackKind::OfflineSimon:
    case AttackKind::OfflineSimonKpa: {
      attack::AttackOptions opts;
      opts.u = cfg.attack == AttackKind::OfflineSimonKpa ? cfg.n : cfg.u;
      opts.c = cfg.samples();
      opts.mode = cfg.mode;
      opts.max_searches = cfg.max_searches;
      opts.qubit_cap = cfg.qubit_cap;
      if (cfg.attack == AttackKind::OfflineSimonKpa) {
        Rng known_rng(derive_seed(trial_seed, 2));
        opts.known_inputs = known_inputs_for(cfg.n, cfg.alpha, known_rng);
        rec.alpha = 1.0 - static_cast<double>(opts.known_inputs->size()) / static_cast<double>(std::size_t{1} << cfg.n);
      }
      take(attack::offline_simon_attack(instance, opts, rng));
      rec.report["alpha"] = rec.alpha;
      break;
    }
    case AttackKind::GroverMeetsSimon:
      take(attack::grover_meets_simon_attack(instance, cfg.samples(), rng, cfg.mode));
      break;
    case AttackKind::EmQ2:
      take(attack::em_q2_attack(instance, cfg.samples(), rng));
      break;
    case AttackKind::GuessAndEm:
      take_classical(classical::guess_and_em_attack(instance, D));
      break;
    case AttackKind::Exhaustive: {
      std::vector<std::pair<Word, Word>> pairs;
      for (Word x = 0; x < D; ++x) pairs.emplace_back(x, instance.encrypt(x));
      auto r = classical::exhaustive_search(LayeredView(instance), pairs);
      r.planted = instance.full_key();
      r.online_queries = D;
      r.success = r.verified && r.recovered == r.planted;
      take_classical(r);
      break;
    }
  }
  rec.report["seed"] = trial_seed;
  return rec;
}

}  // namespace

std::uint64_t ExperimentResult::successes() const {
  return static_cast<std::uint64_t>(
      std::count_if(trials.begin(), trials.end(), [](const TrialRecord& t) { return t.success; }));
}

double ExperimentResult::success_rate() const {
  return trials.empty() ? 0.0 : static_cast<double>(successes()) / static_cast<double>(trials.size());
}

nlohmann::json ExperimentResult::to_json() const {
  std::uint64_t online = 0, evals = 0, iterations = 0, searches = 0, tests = 0, time = 0;
  nlohmann::json records = nlohmann::json::array();
  for (const auto& t : trials) {
    online += t.online_queries;
    evals += t.offline_evals;
    iterations += t.iterations;
    searches += t.searches;
    tests += t.tests;
    time += t.sim_time_units;
    records.push_back(t.report);
  }
  return {
      {"config", harness::to_json(config)},
      {"summary",
       {{"trials", trials.size()},
        {"successes", successes()},
        {"success_rate", success_rate()},
        {"total_online_queries", online},
        {"total_offline_evals", evals},
        {"total_iterations", iterations},
        {"total_searches", searches},
        {"total_tests", tests},
        {"total_sim_time_units", time}}},
      {"trials", records},
  };
}

ExperimentResult run_attack(const ExperimentConfig& config) {
  require_valid(config);
  ExperimentResult result;
  result.config = config;
  result.trials.resize(static_cast<std::size_t>(config.trials));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < result.trials.size(); i = next++) {
      try {
        result.trials[i] = run_trial(config, derive_seed(config.seed, i));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const int threads = std::min<int>(config.workers, std::max<int>(1, config.trials));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  return result;
}

ExperimentResult run_and_write(const ExperimentConfig& config) {
  auto result = run_attack(config);
  if (!config.output.empty()) {
    std::ofstream out(config.output);
    if (!out) throw std::runtime_error("cannot write report to '" + config.output + "'");
    out << dump(result.to_json());
  }
  return result;
}

std::string to_string(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::U: return "u";
    case SweepAxis::Alpha: return "alpha";
    case SweepAxis::D: return "D";
    case SweepAxis::N: return "n";
  }
  return "?";
}

SweepAxis parse_sweep_axis(const std::string& name) {
  for (auto axis : {SweepAxis::U, SweepAxis::Alpha, SweepAxis::D, SweepAxis::N}) {
    if (to_string(axis) == name) return axis;
  }
  throw std::invalid_argument("unknown sweep axis: " + name);
}

void SweepTable::write_csv(std::ostream& out) const {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
    out << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
}

std::string SweepTable::csv() const {
  std::ostringstream out;
  write_csv(out);
  return out.str();
}

std::size_t SweepTable::column(const std::string& name) const {
  const auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) throw std::out_of_range("no column '" + name + "'");
  return static_cast<std::size_t>(it - header.begin());
}

namespace {

std::string fmt(double v) {
  std::ostringstream out;
  out.precision(10);
  out << v;
  return out.str();
}

ExperimentConfig with_axis(ExperimentConfig cfg, SweepAxis axis, double value) {
  switch (axis) {
    case SweepAxis::U: cfg.u = static_cast<int>(std::lround(value)); break;
    case SweepAxis::Alpha: cfg.alpha = value; break;
    case SweepAxis::D: cfg.D = static_cast<std::uint64_t>(std::llround(value)); break;
    case SweepAxis::N: cfg.n = static_cast<int>(std::lround(value)); break;
  }
  return cfg;
}

bool is_offline_simon(const ExperimentConfig& cfg) {
  return cfg.attack == AttackKind::OfflineSimon || cfg.attack == AttackKind::OfflineSimonKpa;
}

int search_key_bits(const ExperimentConfig& cfg) {
  if (cfg.construction == ConstructionKind::EM) return 0;
  if (cfg.construction == ConstructionKind::ITERATED_EM) return cfg.n;
  return cfg.kappa;
}

}  // namespace

SweepTable sweep(const ExperimentConfig& config, SweepAxis axis, const std::vector<double>& values) {
  SweepTable table;
  table.header = {"attack", "axis", "value", "n", "kappa", "u", "c", "alpha", "trials", "successes", "success_rate",
                  "total_online_queries", "total_offline_evals", "total_sim_time_units", "mean_online_queries",
                  "mean_offline_evals", "mean_iterations", "mean_searches", "mean_sim_time_units", "ref_iterations",
                  "ref_sim_time_units", "fidelity_bound", "lemma_floor", "lemma_ok", "log2D_over_n", "log2T_over_n",
                  "measured_or_formula"};

  for (std::size_t i = 0; i < values.size(); ++i) {
    auto problems = validate(with_axis(config, axis, values[i]));
    if (!problems.empty()) {
      for (auto& p : problems) p = "point " + std::to_string(i) + " (" + to_string(axis) + "=" + fmt(values[i]) + "): " + p;
      throw ConfigError(problems);
    }
  }

  double baseline_rate = 0.0;
  if (axis == SweepAxis::Alpha && !values.empty()) {
    baseline_rate = run_attack(with_axis(config, axis, 0.0)).success_rate();
  }

  for (double value : values) {
    const ExperimentConfig cfg = with_axis(config, axis, value);
    const auto result = run_attack(cfg);
    const double trials = static_cast<double>(std::max<std::size_t>(1, result.trials.size()));
    std::uint64_t online = 0, evals = 0, iterations = 0, searches = 0, time = 0;
    for (const auto& t : result.trials) {
      online += t.online_queries;
      evals += t.offline_evals;
      iterations += t.iterations;
      searches += t.searches;
      time += t.sim_time_units;
    }
    const int n = cfg.n;
    const int u = cfg.attack == AttackKind::OfflineSimonKpa ? n : cfg.u;
    const int c = cfg.samples();
    const double n3 = static_cast<double>(n) * n * n;

    std::string ref_iterations, ref_time, fidelity, floor_s, ok_s;
    double log2T = 0.0;
    if (is_offline_simon(cfg)) {
      const int bits = search_key_bits(cfg) + n - u;
      ref_iterations = std::to_string(qsim::grover_iterations(std::exp2(-bits)));
      ref_time = fmt(n * std::exp2(u) + n3 * std::exp2(bits / 2.0));
      // Offline time of one search: iterations times the cost of one test.
      log2T = std::log2(std::max(1.0, iterations / trials) * (2.0 * c + n3));
    } else {
      log2T = std::log2(std::max(1.0, evals / trials));
    }
    if (cfg.attack == AttackKind::OfflineSimonKpa) {
      const double f = attack::fidelity_bound(c, cfg.alpha);
      const double floor = f * baseline_rate;
      const double sigma = std::sqrt(std::max(floor * (1 - floor), 0.0) / trials);
      fidelity = fmt(f);
      floor_s = fmt(floor);
      ok_s = result.success_rate() >= floor - 3 * sigma ? "1" : "0";
    }
    const double log2D = std::log2(std::max(1.0, online / trials));

    table.rows.push_back({to_string(cfg.attack), to_string(axis), fmt(value), std::to_string(n),
                          std::to_string(cfg.kappa), std::to_string(u), std::to_string(c), fmt(cfg.alpha),
                          std::to_string(result.trials.size()), std::to_string(result.successes()),
                          fmt(result.success_rate()), std::to_string(online), std::to_string(evals),
                          std::to_string(time), fmt(online / trials), fmt(evals / trials), fmt(iterations / trials),
                          fmt(searches / trials), fmt(time / trials), ref_iterations, ref_time, fidelity, floor_s, ok_s,
                          fmt(log2D / n), fmt(log2T / n), "measured"});
  }
  return table;
}

}  // namespace qkle::harness
