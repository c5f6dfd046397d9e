#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qkle/bounds.hpp"
#include "qkle/harness/config.hpp"
#include "qkle/harness/experiment.hpp"
#include "qkle/harness/plot.hpp"
#include "qkle/harness/report.hpp"
#include "qkle/harness/verify.hpp"
#include "qkle/tradeoff.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAttackFailed = 1;
constexpr int kExitConfig = 2;

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::pair<double, double>> parse_grid(const std::vector<std::string>& cells) {
  std::vector<std::pair<double, double>> out;
  for (const auto& cell : cells) {
    const auto colon = cell.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("grid point '" + cell + "' is not log2D:log2T");
    out.emplace_back(std::stod(cell.substr(0, colon)), std::stod(cell.substr(colon + 1)));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Offline-Simon attack workbench"};
  app.require_subcommand(1);

  std::string config_path, out_path, in_path;
  std::uint64_t seed = 0;
  int trials = -1, workers = 0;

  auto* attack = app.add_subcommand("attack", "Run the attack described by a config file");
  attack->add_option("--config", config_path, "Config file")->required();
  attack->add_option("--seed", seed, "Override the base seed");
  attack->add_option("--trials", trials, "Override the trial count");
  attack->add_option("--workers", workers, "Worker threads");
  attack->add_option("--out", out_path, "JSON report path (default: config output, else stdout)");

  std::string axis;
  std::vector<double> values;
  auto* sweep = app.add_subcommand("sweep", "Run a config over a parameter axis and emit CSV");
  sweep->add_option("--config", config_path, "Config file")->required();
  sweep->add_option("--axis", axis, "u, alpha, D or n")->required();
  sweep->add_option("--values", values, "Axis values");
  sweep->add_option("--seed", seed, "Override the base seed");
  sweep->add_option("--trials", trials, "Override the trial count");
  sweep->add_option("--workers", workers, "Worker threads");
  sweep->add_option("--out", out_path, "CSV path (default: stdout)");

  double n = 0, kappa = 0;
  std::vector<std::string> grid;
  double target = 0.5;
  auto* bounds = app.add_subcommand("bounds", "Evaluate the security bounds on a grid");
  bounds->add_option("--n", n, "Block bits")->required();
  bounds->add_option("--kappa", kappa, "Key bits")->required();
  bounds->add_option("--grid", grid, "Points log2D:log2T (default: a 5x5 grid)");
  bounds->add_option("--target", target, "Advantage for the resource floors");
  bounds->add_option("--out", out_path, "CSV path (default: stdout)");

  auto* plot = app.add_subcommand("plot", "Plot a curve or sweep CSV as SVG");
  plot->add_option("--in", in_path, "CSV input")->required();
  plot->add_option("--out", out_path, "SVG output (default: stdout)");

  std::vector<std::string> suites;
  bool fault = false;
  auto* verify = app.add_subcommand("verify", "Run the invariant suites");
  verify->add_option("--suite", suites, "Suites to run (default: all)");
  verify->add_flag("--inject-fault", fault, "Corrupt the Hadamard constant");
  verify->add_option("--seed", seed, "Seed");

  std::vector<double> d_grid;
  bool measured = false, figure4 = false;
  int c = 0;
  auto* curve = app.add_subcommand("curve", "Emit time-data trade-off curves as CSV");
  curve->add_option("--n", n, "Block bits");
  curve->add_option("--kappa", kappa, "Key bits");
  curve->add_option("--grid", d_grid, "log2 D values");
  curve->add_flag("--measured", measured, "Overlay measured attack runs");
  curve->add_flag("--figure4", figure4, "Reference vertices at kappa = 2n, in units of n");
  curve->add_option("--trials", trials, "Trials per measured point");
  curve->add_option("--seed", seed, "Seed for measured points");
  curve->add_option("--c", c, "Simon samples for measured quantum points");
  curve->add_option("--out", out_path, "CSV path (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*attack || *sweep) {
      auto config = qkle::harness::load_config(config_path);
      if ((*attack ? attack : sweep)->count("--seed") > 0) config.seed = seed;
      if (trials >= 0) config.trials = trials;
      if (workers > 0) config.workers = workers;
      if (*attack) {
        if (!out_path.empty()) config.output = out_path;
        const auto result = qkle::harness::run_attack(config);
        emit(config.output, qkle::harness::dump(result.to_json()));
        return result.trials.empty() || result.successes() > 0 ? kExitOk : kExitAttackFailed;
      }
      const auto table = qkle::harness::sweep(config, qkle::harness::parse_sweep_axis(axis), values);
      emit(out_path.empty() ? config.csv_output : out_path, table.csv());
      return kExitOk;
    }

    if (*bounds) {
      auto points = parse_grid(grid);
      if (points.empty()) {
        for (int i = 0; i <= 4; ++i) {
          for (int j = 0; j <= 4; ++j) points.emplace_back(n * i / 4, kappa + n * j / 4);
        }
      }
      std::ostringstream out;
      out.precision(10);
      out << "n,kappa,log2D,log2T,bound_small_D,bound_any_D,quantum_bound_q_eq_T\n";
      for (const auto& [ld, lt] : points) {
        const auto b = qkle::bounds::efx_classical_bound({n, kappa, std::exp2(ld), std::exp2(lt)});
        out << n << ',' << kappa << ',' << ld << ',' << lt << ',' << b.bound_small_D << ',' << b.bound_any_D << ','
            << qkle::bounds::quantum_distinguish_bound(std::exp2(lt), kappa) << '\n';
      }
      const auto floors = qkle::bounds::efx_required_resources(n, kappa, target);
      out << "# target " << target << ": log2(DT) floor " << floors.log2_DT << ", log2(T) floor " << floors.log2_T
          << '\n';
      emit(out_path, out.str());
      return kExitOk;
    }

    if (*plot) {
      emit(out_path, qkle::harness::plot_curves(slurp(in_path)));
      return kExitOk;
    }

    if (*verify) {
      qkle::harness::VerifyOptions opts;
      opts.suites = suites;
      if (verify->count("--seed") > 0) opts.seed = seed;
      if (fault) opts.hadamard_coefficient = 0.7;
      const auto summary = qkle::harness::verify(opts);
      std::cout << qkle::harness::dump(summary.to_json());
      return summary.passed() ? kExitOk : kExitAttackFailed;
    }

    if (*curve) {
      using namespace qkle::classical;
      std::vector<CurvePoint> points;
      double scale = n;
      if (figure4) {
        points = figure4_reference();
        scale = 1.0;
      } else {
        if (n <= 0) throw std::invalid_argument("--n is required unless --figure4 is given");
        if (d_grid.empty()) {
          for (int d = 0; d <= static_cast<int>(n); ++d) d_grid.push_back(d);
        }
        for (auto kind : {CurveKind::ClassicalEFX, CurveKind::ClassicalFX, CurveKind::QuantumQ1, CurveKind::QuantumQ2}) {
          for (auto& p : tradeoff_curve(kind, n, kappa, d_grid)) points.push_back(p);
          if (measured) {
            MeasureOptions mo;
            if (trials > 0) mo.trials = trials;
            if (curve->count("--seed") > 0) mo.seed = seed;
            mo.c = c;
            for (auto& p : measured_curve(kind, static_cast<int>(n), static_cast<int>(kappa), d_grid, mo)) {
              points.push_back(p);
            }
          }
        }
      }
      std::ostringstream out;
      write_curve_csv(out, points, scale);
      emit(out_path, out.str());
      return kExitOk;
    }
  } catch (const qkle::harness::ConfigError& e) {
    for (const auto& p : e.problems()) std::cerr << "config error: " << p << '\n';
    return kExitConfig;
  } catch (const qkle::harness::SchemaError& e) {
    std::cerr << "schema error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitAttackFailed;
  }
  return kExitOk;
}
