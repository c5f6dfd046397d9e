#include "qkle/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qkle::bounds {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double safe_log2(double x) { return x > 0 ? std::log2(x) : kNegInf; }

// log2(2^a + 2^b)
double log2_add(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  const double hi = std::max(a, b);
  return hi + std::log2(1.0 + std::exp2(std::min(a, b) - hi));
}

// log2(2^a - 2^b), NaN when not positive.
double log2_sub(double a, double b) {
  if (b == kNegInf) return a;
  if (b >= a) return std::numeric_limits<double>::quiet_NaN();
  return a + std::log1p(-std::exp2(b - a)) / std::log(2.0);
}

// 2^x, saturating instead of overflowing.
double exp2_sat(double x) { return x > 1000 ? std::numeric_limits<double>::infinity() : std::exp2(x); }

void check(const BoundParams& p) {
  if (p.n < 0 || p.kappa < 0 || p.D < 0 || p.T < 0) throw std::invalid_argument("bound parameters must be nonnegative");
}

}  // namespace

EfxTerms efx_classical_terms(const BoundParams& p) {
  check(p);
  EfxTerms terms;
  if (p.T == 0 || p.D == 0) return terms;

  const double lT = std::log2(p.T);
  const double lD = std::log2(p.D);
  const double l_inv_alpha = (2 * lT + lD - 2 * (p.kappa + p.n)) / 3;
  const double l_linear = std::log2(3.0) + lT + std::min(lD, p.n / 2) - (p.kappa + p.n + 1);

  // alpha T / 2^kappa, and the two denominators 2^n - D + 1 and 2^n - alpha T/2^kappa - D + 1.
  const double l_alpha_T = lT - l_inv_alpha - p.kappa;
  const double l_dm1 = safe_log2(p.D - 1);
  const double l_den1 = log2_sub(p.n, l_dm1);
  const double l_den2 = log2_sub(p.n, log2_add(l_alpha_T, l_dm1));

  terms.inv_alpha = exp2_sat(l_inv_alpha);
  terms.linear = exp2_sat(l_linear);
  if (std::isnan(l_den1) || std::isnan(l_den2)) {
    terms.vacuous = true;
    terms.ratio = std::numeric_limits<double>::infinity();
    return terms;
  }
  const double l_ratio = -2 * l_inv_alpha + 2 * lT + lD - (2 * p.kappa + 2) - l_den1 - l_den2;
  terms.ratio = exp2_sat(l_ratio);
  return terms;
}

EfxBounds efx_classical_bound(const BoundParams& p) {
  const EfxTerms terms = efx_classical_terms(p);
  EfxBounds out;
  out.bound_small_D =
      terms.vacuous ? 1.0 : std::clamp(terms.inv_alpha + terms.linear + terms.ratio, 0.0, 1.0);
  out.bound_any_D =
      p.T == 0 ? 0.0 : std::clamp(exp2_sat(std::log2(3.0) + std::log2(p.T) - (p.kappa + p.n / 2 + 1)), 0.0, 1.0);
  return out;
}

ResourceFloors efx_required_resources(double n, double kappa, double target) {
  if (!(target > 0.0) || target > 1.0) throw std::invalid_argument("target advantage must lie in (0, 1]");
  if (n < 0 || kappa < 0) throw std::invalid_argument("bound parameters must be nonnegative");
  ResourceFloors out;

  // bound_any_D is 3T/2^(kappa+n/2+1) below the clamp.
  out.log2_T = std::log2(target) + kappa + n / 2 + 1 - std::log2(3.0);
  out.T = std::exp2(out.log2_T);

  // For each D on a grid up to 2^(n/2), bisect on log2 T for the smallest T reaching target.
  out.log2_DT = std::numeric_limits<double>::infinity();
  const int steps = 64;
  for (int i = 0; i <= steps; ++i) {
    const double lD = (n / 2) * i / steps;
    const double D = std::exp2(lD);
    auto reaches = [&](double lT) {
      return efx_classical_bound({n, kappa, D, std::exp2(lT)}).bound_small_D >= target;
    };
    double hi = kappa + n + 2;
    if (!reaches(hi)) continue;
    double lo = -1100;
    for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
      const double mid = (lo + hi) / 2;
      (reaches(mid) ? hi : lo) = mid;
    }
    if (lD + hi < out.log2_DT) {
      out.log2_DT = lD + hi;
      out.witness_log2_D = lD;
      out.witness_log2_T = hi;
    }
  }
  if (!std::isfinite(out.log2_DT)) throw std::domain_error("target advantage unreachable");
  out.DT = std::exp2(out.log2_DT);
  return out;
}

double quantum_distinguish_bound(double q, double kappa) {
  if (q < 0 || kappa < 0) throw std::invalid_argument("quantum bound parameters must be nonnegative");
  if (q == 0) return 0.0;
  return std::min(1.0, exp2_sat(2.0 + 2 * std::log2(q) - kappa));
}

double extqsearch_classical_time(double quantum_time) {
  if (!(quantum_time >= 1.0)) throw std::invalid_argument("quantum time must be at least 1");
  return quantum_time * quantum_time;
}

}  // namespace qkle::bounds
