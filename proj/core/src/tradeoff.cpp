#include "qkle/tradeoff.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "qkle/classical.hpp"
#include "qkle/offline_simon.hpp"
#include "qkle/harness/experiment.hpp"

namespace qkle::classical {

namespace {

constexpr int kMaxMeasuredGuessBits = 16;

}  // namespace

std::string to_string(CurveKind kind) {
  switch (kind) {
    case CurveKind::ClassicalEFX: return "classical_EFX";
    case CurveKind::ClassicalFX: return "classical_FX";
    case CurveKind::QuantumQ1: return "quantum_Q1";
    case CurveKind::QuantumQ2: return "quantum_Q2";
  }
  return "?";
}

CurveKind parse_curve_kind(const std::string& name) {
  for (auto kind : {CurveKind::ClassicalEFX, CurveKind::ClassicalFX, CurveKind::QuantumQ1, CurveKind::QuantumQ2}) {
    if (to_string(kind) == name) return kind;
  }
  throw std::invalid_argument("unknown curve: " + name);
}

double reference_log2_time(CurveKind kind, double n, double kappa, double d) {
  switch (kind) {
    case CurveKind::ClassicalEFX: return std::max(kappa + n - d, kappa + n / 2);
    case CurveKind::ClassicalFX: return kappa + n - d;
    case CurveKind::QuantumQ1: return std::max(d, (kappa + n - d) / 2);
    case CurveKind::QuantumQ2: return kappa / 2;
  }
  return 0.0;
}

std::vector<CurvePoint> tradeoff_curve(CurveKind kind, double n, double kappa, const std::vector<double>& grid) {
  if (grid.empty()) throw std::invalid_argument("empty data grid");
  std::vector<CurvePoint> out;
  for (double d : grid) {
    if (d < 0 || d > n) throw std::invalid_argument("log2 D outside [0, n]");
    out.push_back({to_string(kind), d, reference_log2_time(kind, n, kappa, d), false});
  }
  return out;
}

std::vector<CurvePoint> measured_curve(CurveKind kind, int n, int kappa, const std::vector<double>& grid,
                                       const MeasureOptions& options) {
  if (grid.empty()) throw std::invalid_argument("empty data grid");
  std::vector<CurvePoint> out;
  if (kind == CurveKind::ClassicalFX || kind == CurveKind::QuantumQ2) return out;
  for (double dd : grid) {
    const int d = static_cast<int>(std::lround(dd));
    if (d != dd || d < 0 || d > n) continue;
    if (kind == CurveKind::QuantumQ1 && kappa + n - d > kMaxMeasuredGuessBits) continue;
    double total_T = 0.0;
    double total_D = 0.0;
    for (int t = 0; t < options.trials; ++t) {
      const std::uint64_t seed = derive_seed(options.seed, static_cast<std::uint64_t>(t));
      Rng rng(derive_seed(seed, 1));
      auto instance = harness::random_instance(ConstructionKind::EFX, n, kappa, seed);
      if (kind == CurveKind::ClassicalEFX) {
        if (d < 1) break;
        const auto r = guess_and_em_attack(instance, std::uint64_t{1} << d);
        total_T += static_cast<double>(r.offline_evals);
        total_D += static_cast<double>(r.online_queries);
      } else {
        attack::AttackOptions opts;
        opts.u = d;
        opts.c = options.c;
        const auto r = attack::offline_simon_attack(instance, opts, rng);
        total_T += static_cast<double>(r.iterations) * r.searches;
        total_D += static_cast<double>(r.online_queries);
      }
    }
    if (total_T <= 0.0 || total_D <= 0.0) continue;
    out.push_back({to_string(kind), std::log2(total_D / options.trials), std::log2(total_T / options.trials), true});
  }
  return out;
}

std::vector<CurvePoint> figure4_reference() {
  std::vector<CurvePoint> out;
  const double n = 1.0;
  const double kappa = 2.0;
  auto add = [&](CurveKind kind, const std::vector<double>& grid) {
    for (auto& p : tradeoff_curve(kind, n, kappa, grid)) out.push_back(p);
  };
  add(CurveKind::ClassicalEFX, {0.0, 0.5, 1.0});
  add(CurveKind::ClassicalFX, {0.0, 1.0});
  add(CurveKind::QuantumQ1, {0.0, 1.0});
  add(CurveKind::QuantumQ2, {0.0, 1.0});
  return out;
}

void write_curve_csv(std::ostream& out, const std::vector<CurvePoint>& points, double n) {
  out << "attack,log2D_over_n,log2T_over_n,measured_or_formula\n";
  for (const auto& p : points) {
    out << p.attack << ',' << p.log2_D / n << ',' << p.log2_T / n << ',' << (p.measured ? "measured" : "formula")
        << '\n';
  }
}

}  // namespace qkle::classical
