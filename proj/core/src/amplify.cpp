#include "qkle/amplify.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qkle::qsim {

int grover_iterations(double p) {
  if (!(p > 0.0) || p > 1.0) throw std::invalid_argument("success probability must lie in (0, 1]");
  return static_cast<int>(std::floor((std::numbers::pi / 4.0) / std::asin(std::sqrt(p))));
}

double amplification_success(double p, int t) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("success probability must lie in [0, 1]");
  const double s = std::sin((2.0 * t + 1.0) * std::asin(std::sqrt(p)));
  return s * s;
}

StateVector run_amplification(const SearchCircuit& circuit, int iterations, int qubit_cap) {
  if (iterations < 0) throw std::invalid_argument("negative iteration count");
  StateVector sv(circuit.layout, qubit_cap);
  if (circuit.load) circuit.load(sv);
  circuit.prepare(sv);
  for (int i = 0; i < iterations; ++i) {
    circuit.oracle(sv);
    circuit.unprepare(sv);
    sv.phase_flip_zero(circuit.reflect_register);
    circuit.prepare(sv);
  }
  return sv;
}

MeasurementOutcome amplitude_amplify(const SearchCircuit& circuit, int iterations, Rng& rng, int qubit_cap) {
  StateVector sv = run_amplification(circuit, iterations, qubit_cap);
  return sv.measure(circuit.measure_register, rng);
}

SearchCircuit uniform_search(int m, std::function<bool(Index)> marked) {
  SearchCircuit circuit;
  circuit.layout = {{"key", m}};
  circuit.prepare = [](StateVector& sv) { sv.hadamard("key"); };
  circuit.unprepare = circuit.prepare;
  circuit.oracle = [marked = std::move(marked)](StateVector& sv) { sv.phase_flip(marked); };
  circuit.reflect_register = "key";
  circuit.measure_register = "key";
  return circuit;
}

}  // namespace qkle::qsim
