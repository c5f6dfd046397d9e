#pragma once

namespace qkle::bounds {

// D online and T offline queries against EFX with n-bit blocks and kappa-bit keys.
// Counts are doubles so display-scale parameters fit.
struct BoundParams {
  double n = 0;
  double kappa = 0;
  double D = 0;
  double T = 0;
};

struct EfxTerms {
  double inv_alpha = 0;   // (T^2 D / 2^(2(kappa+n)))^(1/3)
  double linear = 0;      // 3 T min(D, 2^(n/2)) / 2^(kappa+n+1)
  double ratio = 0;       // alpha^2 T^2 D / (2^(2kappa+2) (2^n-D+1)(2^n - alpha T/2^kappa - D+1))
  bool vacuous = false;   // a denominator is not positive
};

struct EfxBounds {
  double bound_small_D = 0;  // inv_alpha + linear + ratio, clamped to [0, 1]
  double bound_any_D = 0;    // 3 T / 2^(kappa + n/2 + 1), clamped to [0, 1]
};

// Unclamped terms of the small-D bound. Evaluated in the log2 domain.
EfxTerms efx_classical_terms(const BoundParams& p);
EfxBounds efx_classical_bound(const BoundParams& p);

struct ResourceFloors {
  double log2_DT = 0;  // smallest log2(D T) over D <= 2^(n/2) with bound_small_D >= target
  double log2_T = 0;   // smallest log2 T with bound_any_D >= target
  double DT = 0;
  double T = 0;
  double witness_log2_D = 0;  // the (D, T) attaining log2_DT
  double witness_log2_T = 0;
};

// Inverts both bounds numerically. Throws unless 0 < target <= 1.
ResourceFloors efx_required_resources(double n, double kappa, double target);

// min(1, 4 q^2 / 2^kappa)
double quantum_distinguish_bound(double q, double kappa);

// Classical gate count of emulating a quantum search of cost T: T^2.
double extqsearch_classical_time(double quantum_time);

}  // namespace qkle::bounds
