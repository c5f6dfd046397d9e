#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qkle::harness {

struct PlotStyle {
  int width = 640;
  int height = 480;
  std::string title = "log2 T / n against log2 D / n";
};

struct Series {
  std::string name;
  bool measured = false;
  std::vector<std::pair<double, double>> points;
};

class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Groups rows of a curve or sweep CSV by attack (and formula vs measured).
// Needs columns attack, log2D_over_n, log2T_over_n.
std::vector<Series> read_curve_csv(const std::string& csv);

// Self-contained SVG, one polyline per series. Each polyline carries its raw
// coordinates in a data-points attribute.
std::string plot_curves(const std::string& csv, const PlotStyle& style = {});

}  // namespace qkle::harness
