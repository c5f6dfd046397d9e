#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "qkle/state_vector.hpp"

namespace qkle::qsim {

// floor((pi/4) / asin(sqrt(p))) for 0 < p <= 1.
int grover_iterations(double p);

// sin^2((2t + 1) asin(sqrt(p))): success after t iterations from initial success p.
double amplification_success(double p, int t);

// A search as amplitude amplification sees it. `prepare` maps |0> to the initial
// state A|0>, `unprepare` is its inverse, `oracle` flips the phase of good states.
// The reflection about A|0> flips the zero state of `reflect_register` only, so
// registers outside it (a reused query database, say) are carried along.
struct SearchCircuit {
  std::vector<std::pair<std::string, int>> layout;
  // Runs once on |0> before the first `prepare`; may be empty.
  std::function<void(StateVector&)> load;
  std::function<void(StateVector&)> prepare;
  std::function<void(StateVector&)> unprepare;
  std::function<void(StateVector&)> oracle;
  std::string reflect_register;
  std::string measure_register;
};

// Builds the state, prepares it, runs `iterations` Grover iterates and returns
// the state before measurement.
StateVector run_amplification(const SearchCircuit& circuit, int iterations, int qubit_cap = kDefaultQubitCap);

// run_amplification followed by a measurement of circuit.measure_register.
MeasurementOutcome amplitude_amplify(const SearchCircuit& circuit, int iterations, Rng& rng,
                                     int qubit_cap = kDefaultQubitCap);

// Uniform search over m qubits with a marked-set predicate.
SearchCircuit uniform_search(int m, std::function<bool(Index)> marked);

}  // namespace qkle::qsim
