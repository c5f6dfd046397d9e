#include "qkle/harness/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "qkle/bounds.hpp"
#include "qkle/gf2.hpp"
#include "qkle/simon.hpp"

namespace qkle::harness {

namespace {

void record(SuiteResult& r, bool ok, const std::string& what) {
  ++r.checks;
  if (ok) return;
  ++r.failures;
  r.passed = false;
  if (r.first_failure.empty()) r.first_failure = what;
}

SuiteResult unitarity(const VerifyOptions& opt) {
  SuiteResult r;
  r.name = "unitarity";
  Rng rng(derive_seed(opt.seed, 11));
  std::normal_distribution<double> gauss;
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) {
      qsim::StateVector sv({{"a", a}, {"b", b}});
      double norm = 0;
      for (auto& amp : sv.amplitudes()) {
        amp = {gauss(rng), gauss(rng)};
        norm += std::norm(amp);
      }
      for (auto& amp : sv.amplitudes()) amp /= std::sqrt(norm);
      auto check = [&](const std::string& gate) {
        record(r, std::abs(sv.norm_squared() - 1.0) <= 1e-9,
               gate + " changed the norm at " + std::to_string(a + b) + " qubits");
      };
      sv.hadamard("a", opt.hadamard_coefficient);
      check("hadamard");
      std::vector<Word> f(std::size_t{1} << a);
      for (auto& v : f) v = static_cast<Word>(rng() & low_mask(b));
      sv.apply_xor_oracle(f, "a", "b");
      check("xor oracle");
      sv.apply_inplace_perm(make_permutation(b, rng()), "b");
      check("in-place permutation");
      sv.hadamard("b", opt.hadamard_coefficient);
      check("hadamard");
      sv.phase_flip_zero("a");
      check("phase flip");
    }
  }
  return r;
}

// Random f with period s: a random injection on coset representatives.
std::vector<Word> random_periodic(int n, Word s, Rng& rng) {
  const std::size_t size = std::size_t{1} << n;
  std::vector<Word> values(size);
  for (Word i = 0; i < size; ++i) values[i] = i;
  std::shuffle(values.begin(), values.end(), rng);
  std::vector<Word> f(size, ~Word{0});
  std::size_t next = 0;
  for (Word x = 0; x < size; ++x) {
    if (f[x] != ~Word{0}) continue;
    f[x] = f[x ^ s] = values[next++];
  }
  return f;
}

SuiteResult orthogonality(const VerifyOptions& opt) {
  SuiteResult r;
  r.name = "orthogonality";
  Rng rng(derive_seed(opt.seed, 12));
  for (int n = 2; n <= 6; ++n) {
    for (int inst = 0; inst < 10; ++inst) {
      const Word s = 1 + static_cast<Word>(rng() % (low_mask(n)));
      const auto f = random_periodic(n, s, rng);
      for (int k = 0; k < 10; ++k) {
        const auto y = qsim::simon_subroutine(f, n, rng);
        record(r, gf2::dot(y, s) == 0, "sample not orthogonal to the period at n=" + std::to_string(n));
      }
    }
  }
  return r;
}

// Nonzero s with f(x) = f(x ^ s) for every x.
std::vector<Word> periods_of(const std::vector<Word>& f) {
  std::vector<Word> out;
  for (Word s = 1; s < f.size(); ++s) {
    bool ok = true;
    for (Word x = 0; x < f.size() && ok; ++x) ok = f[x] == f[x ^ s];
    if (ok) out.push_back(s);
  }
  return out;
}

SuiteResult oracle_equivalence(const VerifyOptions& opt) {
  SuiteResult r;
  r.name = "oracle-equivalence";
  Rng rng(derive_seed(opt.seed, 13));
  qsim::SimonOptions so;
  for (int n = 1; n <= 3; ++n) {
    const std::size_t size = std::size_t{1} << n;
    for (int inst = 0; inst < 200; ++inst) {
      std::vector<Word> f(size);
      if (inst % 2) {
        f = random_periodic(n, 1 + static_cast<Word>(rng() % low_mask(n)), rng);
      } else {
        for (auto& v : f) v = static_cast<Word>(rng() & low_mask(n));
      }
      const auto periods = periods_of(f);
      if (periods.size() > 1) continue;
      const auto got = qsim::simon_full(f, n, so, rng).result;
      const bool ok = periods.empty() ? got.outcome == gf2::PeriodOutcome::Injective
                                      : got.outcome == gf2::PeriodOutcome::Period && got.period == periods[0];
      record(r, ok, "simon_full disagrees with the period oracle at n=" + std::to_string(n));
    }
  }
  return r;
}

SuiteResult bounds_grid(const VerifyOptions& opt) {
  SuiteResult r;
  r.name = "bounds-grid";
  Rng rng(derive_seed(opt.seed, 14));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 2000; ++i) {
    const double n = 1 + std::floor(unit(rng) * 128);
    const double kappa = 1 + std::floor(unit(rng) * 256);
    const double D = std::exp2(unit(rng) * n);
    const double T = std::exp2(unit(rng) * (kappa + n + 8));
    const auto b = bounds::efx_classical_bound({n, kappa, D, T});
    const double q = bounds::quantum_distinguish_bound(std::exp2(unit(rng) * (kappa / 2 + 4)), kappa);
    auto in01 = [](double v) { return v >= 0.0 && v <= 1.0; };
    record(r, in01(b.bound_small_D) && in01(b.bound_any_D) && in01(q), "bound outside [0, 1]");
  }
  return r;
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names{"unitarity", "orthogonality", "oracle-equivalence", "bounds-grid"};
  return names;
}

bool VerifySummary::passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed; });
}

nlohmann::json VerifySummary::to_json() const {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& s : suites) {
    list.push_back({{"suite", s.name},
                    {"passed", s.passed},
                    {"checks", s.checks},
                    {"failures", s.failures},
                    {"first_failure", s.first_failure}});
  }
  return {{"passed", passed()}, {"suites", list}};
}

VerifySummary verify(const VerifyOptions& options) {
  const auto& names = verify_suite_names();
  std::vector<std::string> selected = options.suites.empty() ? names : options.suites;
  for (const auto& s : selected) {
    if (std::find(names.begin(), names.end(), s) == names.end()) throw std::invalid_argument("unknown suite: " + s);
  }
  VerifySummary summary;
  for (const auto& name : names) {
    if (std::find(selected.begin(), selected.end(), name) == selected.end()) continue;
    if (name == "unitarity") summary.suites.push_back(unitarity(options));
    if (name == "orthogonality") summary.suites.push_back(orthogonality(options));
    if (name == "oracle-equivalence") summary.suites.push_back(oracle_equivalence(options));
    if (name == "bounds-grid") summary.suites.push_back(bounds_grid(options));
  }
  return summary;
}

}  // namespace qkle::harness
