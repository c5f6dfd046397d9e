#include "qkle/harness/report.hpp"

namespace qkle::harness {

nlohmann::json to_json(const attack::AttackReport& r) {
  return {
      {"attack", r.attack},
      {"query_model", r.query_model},
      {"mode", attack::to_string(r.mode)},
      {"seed", r.seed},
      {"success", r.success},
      {"verified", r.verified},
      {"ambiguous", r.ambiguous},
      {"k", r.recovered.k},
      {"k1", r.recovered.k1},
      {"k2", r.recovered.k2},
      {"planted", {{"k", r.planted.k}, {"k1", r.planted.k1}, {"k2", r.planted.k2}}},
      {"D", r.online_queries},
      {"quantum_queries", r.quantum_queries},
      {"verification_queries", r.verification_queries},
      {"offline_evals", r.offline_evals},
      {"iterations", r.iterations},
      {"searches", r.searches},
      {"tests", r.tests},
      {"passing_keys", r.passing_keys},
      {"sim_time_units", r.sim_time_units},
  };
}

nlohmann::json to_json(const classical::ClassicalReport& r) {
  return {
      {"attack", r.attack},
      {"query_model", "classical"},
      {"success", r.success},
      {"verified", r.verified},
      {"k", r.recovered.k},
      {"k1", r.recovered.k1},
      {"k2", r.recovered.k2},
      {"planted", {{"k", r.planted.k}, {"k1", r.planted.k1}, {"k2", r.planted.k2}}},
      {"D", r.online_queries},
      {"offline_evals", r.offline_evals},
      {"time_units", r.time_units},
      {"memory_cells", r.memory_cells},
      {"guesses_tried", r.guesses_tried},
  };
}

nlohmann::json to_json(const ExperimentConfig& c) {
  return {
      {"attack", to_string(c.attack)},
      {"construction", qkle::to_string(c.construction)},
      {"n", c.n},
      {"kappa", c.kappa},
      {"u", c.u},
      {"c", c.samples()},
      {"mode", attack::to_string(c.mode)},
      {"alpha", c.alpha},
      {"D", c.D},
      {"trials", c.trials},
      {"seed", c.seed},
      {"max_searches", c.max_searches},
  };
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace qkle::harness
