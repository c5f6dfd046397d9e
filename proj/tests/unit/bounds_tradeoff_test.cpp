#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "qkle/bounds.hpp"
#include "qkle/tradeoff.hpp"

using namespace qkle::bounds;
using namespace qkle::classical;

namespace {

double direct_small_D(double n, double kappa, double D, double T) {
  const double inv_alpha = std::cbrt(T * T * D / std::pow(2.0, 2 * (kappa + n)));
  const double alpha = 1 / inv_alpha;
  const double linear = 3 * T * std::min(D, std::pow(2.0, n / 2)) / std::pow(2.0, kappa + n + 1);
  const double den1 = std::pow(2.0, n) - D + 1;
  const double den2 = std::pow(2.0, n) - alpha * T / std::pow(2.0, kappa) - D + 1;
  if (den1 <= 0 || den2 <= 0) return 1.0;
  const double ratio = alpha * alpha * T * T * D / (std::pow(2.0, 2 * kappa + 2) * den1 * den2);
  return std::clamp(inv_alpha + linear + ratio, 0.0, 1.0);
}

}  // namespace

TEST(Bounds, SmallDMatchesDirectEvaluation) {
  for (double n : {8.0, 12.0, 16.0}) {
    for (double kappa : {8.0, 16.0}) {
      for (double lD = 0; lD <= n / 2; lD += 1) {
        for (double lT = 0; lT <= kappa + n; lT += 2) {
          const double D = std::exp2(lD), T = std::exp2(lT);
          EXPECT_NEAR(efx_classical_bound({n, kappa, D, T}).bound_small_D, direct_small_D(n, kappa, D, T), 1e-9)
              << n << ' ' << kappa << ' ' << lD << ' ' << lT;
        }
      }
    }
  }
}

TEST(Bounds, AnyDAndQuantum) {
  EXPECT_DOUBLE_EQ(efx_classical_bound({8, 8, 4, 16}).bound_any_D, 3.0 * 16 / std::exp2(13));
  EXPECT_DOUBLE_EQ(efx_classical_bound({8, 8, 4, 1e30}).bound_any_D, 1.0);
  EXPECT_DOUBLE_EQ(quantum_distinguish_bound(4, 10), 64.0 / 1024);
  EXPECT_DOUBLE_EQ(quantum_distinguish_bound(1000, 10), 1.0);
  EXPECT_DOUBLE_EQ(quantum_distinguish_bound(0, 10), 0.0);
  EXPECT_DOUBLE_EQ(extqsearch_classical_time(8), 64.0);
}

TEST(Bounds, ZeroResourcesGiveZero) {
  EXPECT_EQ(efx_classical_bound({8, 8, 0, 100}).bound_small_D, 0.0);
  EXPECT_EQ(efx_classical_bound({8, 8, 4, 0}).bound_small_D, 0.0);
  EXPECT_EQ(efx_classical_bound({8, 8, 4, 0}).bound_any_D, 0.0);
  EXPECT_THROW(efx_classical_bound({8, 8, -1, 1}), std::invalid_argument);
}

TEST(Bounds, ResourceFloorsRoundTrip) {
  for (double target : {0.01, 0.1, 0.5, 1.0}) {
    const auto f = efx_required_resources(16, 16, target);
    EXPECT_GE(efx_classical_bound({16, 16, 1, f.T}).bound_any_D, target * (1 - 1e-9));
    EXPECT_LT(efx_classical_bound({16, 16, 1, f.T * 0.99}).bound_any_D, target);
    const auto b = efx_classical_bound({16, 16, std::exp2(f.witness_log2_D), std::exp2(f.witness_log2_T)});
    EXPECT_GE(b.bound_small_D, target);
  }
  EXPECT_THROW(efx_required_resources(8, 8, 0.0), std::invalid_argument);
  EXPECT_THROW(efx_required_resources(8, 8, 1.5), std::invalid_argument);
}

TEST(Tradeoff, ReferenceExponents) {
  EXPECT_DOUBLE_EQ(reference_log2_time(CurveKind::ClassicalEFX, 8, 16, 0), 24);
  EXPECT_DOUBLE_EQ(reference_log2_time(CurveKind::ClassicalEFX, 8, 16, 8), 20);
  EXPECT_DOUBLE_EQ(reference_log2_time(CurveKind::ClassicalFX, 8, 16, 8), 16);
  EXPECT_DOUBLE_EQ(reference_log2_time(CurveKind::QuantumQ1, 8, 16, 0), 12);
  EXPECT_DOUBLE_EQ(reference_log2_time(CurveKind::QuantumQ1, 8, 16, 8), 8);
  EXPECT_DOUBLE_EQ(reference_log2_time(CurveKind::QuantumQ2, 8, 16, 3), 8);
  EXPECT_THROW(tradeoff_curve(CurveKind::ClassicalFX, 8, 8, {9}), std::invalid_argument);
}

TEST(Tradeoff, CsvLayout) {
  std::ostringstream out;
  write_curve_csv(out, tradeoff_curve(CurveKind::QuantumQ1, 4, 8, {0, 4}), 4);
  EXPECT_EQ(out.str(),
            "attack,log2D_over_n,log2T_over_n,measured_or_formula\n"
            "quantum_Q1,0,1.5,formula\n"
            "quantum_Q1,1,1,formula\n");
}

TEST(Tradeoff, MeasuredQuantumPointsFollowReference) {
  MeasureOptions opts;
  opts.trials = 5;
  const auto pts = measured_curve(CurveKind::QuantumQ1, 4, 4, {1, 2, 3}, opts);
  ASSERT_EQ(pts.size(), 3u);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    EXPECT_TRUE(pts[i].measured);
    EXPECT_DOUBLE_EQ(pts[i].log2_D, 1.0 + i);
  }
  EXPECT_GT(pts[0].log2_T, pts[2].log2_T);
  EXPECT_TRUE(measured_curve(CurveKind::QuantumQ2, 4, 4, {1}, opts).empty());
}
