#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace qkle::classical {

enum class CurveKind { ClassicalEFX, ClassicalFX, QuantumQ1, QuantumQ2 };

std::string to_string(CurveKind kind);
CurveKind parse_curve_kind(const std::string& name);

struct CurvePoint {
  std::string attack;
  double log2_D = 0.0;
  double log2_T = 0.0;
  bool measured = false;
};

// Reference time exponent, up to polynomial factors:
//   classical EFX/2XOR  max(kappa + n - d, kappa + n/2)
//   classical FX        kappa + n - d
//   quantum Q1          max(d, (kappa + n - d) / 2), data D = 2^u
//   quantum Q2          kappa / 2
double reference_log2_time(CurveKind kind, double n, double kappa, double log2_D);

// One formula point per grid entry (log2 D values, 0 <= d <= n).
std::vector<CurvePoint> tradeoff_curve(CurveKind kind, double n, double kappa, const std::vector<double>& log2_D_grid);

struct MeasureOptions {
  int trials = 20;
  std::uint64_t seed = 1;
  int c = 0;
};

// Mean measured (D, T) from attack runs, for integer log2 D in the grid.
// Classical EFX: offline evaluations of guess-and-EM. Quantum Q1: test
// applications of offline-Simon (EFX, u = d), skipped where the guess space
// kappa + n - d exceeds 16 bits. The other curves have no overlay.
std::vector<CurvePoint> measured_curve(CurveKind kind, int n, int kappa, const std::vector<double>& log2_D_grid,
                                       const MeasureOptions& options);

// Vertices of the published comparison at kappa = 2n, in units of n.
std::vector<CurvePoint> figure4_reference();

// attack,log2D_over_n,log2T_over_n,measured_or_formula
void write_curve_csv(std::ostream& out, const std::vector<CurvePoint>& points, double n);

}  // namespace qkle::classical
