#include "qkle/state_vector.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>
#include <stdexcept>

namespace qkle::qsim {

StateVector::StateVector(const std::vector<std::pair<std::string, int>>& layout, int qubit_cap) {
  int offset = 0;
  for (const auto& [name, width] : layout) {
    if (width < 0) throw std::invalid_argument("register '" + name + "' has negative width");
    for (const auto& r : registers_) {
      if (r.name == name) throw std::invalid_argument("duplicate register '" + name + "'");
    }
    registers_.push_back({name, offset, width});
    offset += width;
  }
  if (offset > qubit_cap) {
    throw std::length_error("state needs " + std::to_string(offset) + " qubits, cap is " + std::to_string(qubit_cap));
  }
  num_qubits_ = offset;
  amps_.assign(std::size_t{1} << offset, Amplitude{0.0, 0.0});
  amps_[0] = 1.0;
}

const Register& StateVector::reg(const std::string& name) const {
  for (const auto& r : registers_) {
    if (r.name == name) return r;
  }
  throw std::invalid_argument("unknown register '" + name + "'");
}

double StateVector::norm_squared() const {
  double total = 0.0;
  for (const auto& a : amps_) total += std::norm(a);
  return total;
}

void StateVector::set_basis_state(Index basis) {
  if (basis >= amps_.size()) throw std::out_of_range("basis state out of range");
  std::fill(amps_.begin(), amps_.end(), Amplitude{0.0, 0.0});
  amps_[basis] = 1.0;
}

void StateVector::hadamard(const std::string& name, double coefficient) {
  const Register& r = reg(name);
  const std::size_t dim = amps_.size();
  for (int q = r.offset; q < r.offset + r.width; ++q) {
    const std::size_t stride = std::size_t{1} << q;
    for (std::size_t base = 0; base < dim; base += 2 * stride) {
      for (std::size_t i = base; i < base + stride; ++i) {
        const Amplitude a = amps_[i];
        const Amplitude b = amps_[i + stride];
        amps_[i] = coefficient * (a + b);
        amps_[i + stride] = coefficient * (a - b);
      }
    }
  }
}

void StateVector::apply_xor_oracle(std::span<const Word> f, const std::string& in, const std::string& out) {
  const Register& ri = reg(in);
  const Register& ro = reg(out);
  if (f.size() != (std::size_t{1} << ri.width)) throw std::invalid_argument("oracle table does not match input register");
  for (auto v : f) {
    if (v >> ro.width) throw std::invalid_argument("oracle value wider than output register");
  }
  // Swap pairs (i, i ^ f(x)<<offset) once each.
  for (Index i = 0; i < amps_.size(); ++i) {
    const Index j = i ^ (Index{f[ri.get(i)]} << ro.offset);
    if (j > i) std::swap(amps_[i], amps_[j]);
  }
}

void StateVector::apply_inplace_perm(const Permutation& p, const std::string& name) {
  const Register& r = reg(name);
  if (p.bits() != r.width) throw std::invalid_argument("permutation width does not match register");
  std::vector<Amplitude> next(amps_.size());
  for (Index i = 0; i < amps_.size(); ++i) next[r.set(i, p(static_cast<Word>(r.get(i))))] = amps_[i];
  amps_.swap(next);
}

void StateVector::apply_basis_map(const std::function<Index(Index)>& map) {
  std::vector<Amplitude> next(amps_.size(), Amplitude{0.0, 0.0});
  std::vector<bool> hit(amps_.size(), false);
  for (Index i = 0; i < amps_.size(); ++i) {
    const Index j = map(i);
    if (j >= amps_.size() || hit[j]) throw std::invalid_argument("basis map is not a bijection");
    hit[j] = true;
    next[j] = amps_[i];
  }
  amps_.swap(next);
}

void StateVector::phase_flip(const std::function<bool(Index)>& good) {
  for (Index i = 0; i < amps_.size(); ++i) {
    if (good(i)) amps_[i] = -amps_[i];
  }
}

void StateVector::phase_flip_zero(const std::string& name) {
  const Index m = reg(name).mask();
  for (Index i = 0; i < amps_.size(); ++i) {
    if ((i & m) == 0) amps_[i] = -amps_[i];
  }
}

std::vector<double> StateVector::distribution(const std::string& name) const {
  const Register& r = reg(name);
  std::vector<double> dist(std::size_t{1} << r.width, 0.0);
  for (Index i = 0; i < amps_.size(); ++i) dist[r.get(i)] += std::norm(amps_[i]);
  return dist;
}

MeasurementOutcome StateVector::measure(const std::string& name, Rng& rng) {
  const Register& r = reg(name);
  const auto dist = distribution(name);
  double total = 0.0;
  for (double p : dist) total += p;
  if (!(total > 1e-300)) throw std::runtime_error("measuring a zero-norm state");

  std::uniform_real_distribution<double> uniform(0.0, total);
  const double draw = uniform(rng);
  double acc = 0.0;
  Index value = 0;
  for (Index v = 0; v < dist.size(); ++v) {
    if (dist[v] == 0.0) continue;
    value = v;
    acc += dist[v];
    if (draw < acc) break;
  }

  const double prob = dist[value];
  const double scale = 1.0 / std::sqrt(prob);
  for (Index i = 0; i < amps_.size(); ++i) {
    amps_[i] = r.get(i) == value ? amps_[i] * scale : Amplitude{0.0, 0.0};
  }
  return {name, value, prob / total};
}

void StateVector::write_csv(std::ostream& out) const {
  out << "register,basis_index,real,imag\n";
  for (const auto& r : registers_) {
    for (Index i = 0; i < amps_.size(); ++i) {
      if (amps_[i] == Amplitude{0.0, 0.0}) continue;
      out << r.name << ',' << r.get(i) << ',' << amps_[i].real() << ',' << amps_[i].imag() << '\n';
    }
  }
}

std::vector<Index> sample_register(const StateVector& sv, const std::string& name, std::size_t shots, Rng& rng) {
  const auto dist = sv.distribution(name);
  std::discrete_distribution<Index> pick(dist.begin(), dist.end());
  std::vector<Index> out(shots);
  for (auto& v : out) v = pick(rng);
  return out;
}

}  // namespace qkle::qsim
