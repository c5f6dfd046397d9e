#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qkle/permutation.hpp"
#include "qkle/types.hpp"

namespace qkle::qsim {

using Amplitude = std::complex<double>;
using Index = std::uint64_t;

inline constexpr int kDefaultQubitCap = 26;

struct Register {
  std::string name;
  int offset = 0;
  int width = 0;

  Index mask() const { return low_mask(width) << offset; }
  Index get(Index basis) const { return (basis >> offset) & low_mask(width); }
  Index set(Index basis, Index value) const { return (basis & ~mask()) | (value << offset); }
};

struct MeasurementOutcome {
  std::string register_name;
  Index value = 0;
  double probability = 0.0;
};

// Dense state over named registers. The first declared register occupies the
// lowest qubits of the basis index. Starts in |0...0>.
class StateVector {
 public:
  StateVector(const std::vector<std::pair<std::string, int>>& layout, int qubit_cap = kDefaultQubitCap);

  int num_qubits() const noexcept { return num_qubits_; }
  std::size_t dimension() const noexcept { return amps_.size(); }
  const std::vector<Register>& registers() const noexcept { return registers_; }
  const Register& reg(const std::string& name) const;

  std::span<const Amplitude> amplitudes() const noexcept { return amps_; }
  std::span<Amplitude> amplitudes() noexcept { return amps_; }
  double norm_squared() const;

  void set_basis_state(Index basis);

  // H on every qubit of the register. `coefficient` replaces 1/sqrt(2) and
  // exists only so the unitarity check can be exercised against a broken gate.
  void hadamard(const std::string& name, double coefficient = kInvSqrt2);

  // |x>|y> -> |x>|y ^ f(x)>
  void apply_xor_oracle(std::span<const Word> f, const std::string& in, const std::string& out);
  // |z> -> |p(z)> on one register.
  void apply_inplace_perm(const Permutation& p, const std::string& name);
  // Relabels basis states by a bijection on the full index; throws if `map` is not one.
  void apply_basis_map(const std::function<Index(Index)>& map);
  // Negates amplitudes of basis states satisfying `good`.
  void phase_flip(const std::function<bool(Index)>& good);
  // Negates the amplitudes whose register value is 0.
  void phase_flip_zero(const std::string& name);

  // Born distribution of one register.
  std::vector<double> distribution(const std::string& name) const;
  // Samples, collapses and renormalizes.
  MeasurementOutcome measure(const std::string& name, Rng& rng);

  // Rows: register, value, real, imag (one block per register, nonzero amplitudes only).
  void write_csv(std::ostream& out) const;

  static constexpr double kInvSqrt2 = 0.70710678118654752440;

 private:
  int num_qubits_ = 0;
  std::vector<Register> registers_;
  std::vector<Amplitude> amps_;
};

// Draws `shots` values of a register from its distribution without collapsing.
std::vector<Index> sample_register(const StateVector& sv, const std::string& name, std::size_t shots, Rng& rng);

}  // namespace qkle::qsim
