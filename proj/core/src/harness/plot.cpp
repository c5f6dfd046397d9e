#include "qkle/harness/plot.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qkle::harness {

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

std::string num(double v) {
  std::ostringstream out;
  out.precision(6);
  out << v;
  return out.str();
}

std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

}  // namespace

std::vector<Series> read_curve_csv(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  std::vector<Series> series;
  if (!std::getline(in, line) || line.find_first_not_of(" \t\r\n") == std::string::npos) return series;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const auto header = split(line);
  auto find = [&](const std::string& name) -> long {
    const auto it = std::find(header.begin(), header.end(), name);
    return it == header.end() ? -1 : static_cast<long>(it - header.begin());
  };
  const long ia = find("attack"), ix = find("log2D_over_n"), iy = find("log2T_over_n"), im = find("measured_or_formula");
  if (ia < 0 || ix < 0 || iy < 0) throw SchemaError("curve CSV needs columns attack, log2D_over_n, log2T_over_n");

  int row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto cells = split(line);
    if (cells.size() != header.size()) throw SchemaError("row " + std::to_string(row) + " has the wrong number of cells");
    const bool measured = im >= 0 && cells[im] == "measured";
    double x = 0, y = 0;
    try {
      x = std::stod(cells[ix]);
      y = std::stod(cells[iy]);
    } catch (const std::exception&) {
      throw SchemaError("row " + std::to_string(row) + " has a non-numeric coordinate");
    }
    auto it = std::find_if(series.begin(), series.end(),
                           [&](const Series& s) { return s.name == cells[ia] && s.measured == measured; });
    if (it == series.end()) {
      series.push_back({cells[ia], measured, {}});
      it = series.end() - 1;
    }
    it->points.emplace_back(x, y);
  }
  return series;
}

std::string plot_curves(const std::string& csv, const PlotStyle& style) {
  const auto series = read_curve_csv(csv);

  double xmax = 1.0, ymax = 1.0;
  for (const auto& s : series) {
    for (const auto& [x, y] : s.points) {
      xmax = std::max(xmax, x);
      ymax = std::max(ymax, y);
    }
  }
  xmax = std::ceil(xmax * 2) / 2;
  ymax = std::ceil(ymax * 2) / 2;

  const double left = 60, right = 170, top = 40, bottom = 50;
  const double pw = style.width - left - right, ph = style.height - top - bottom;
  auto sx = [&](double x) { return left + pw * x / xmax; };
  auto sy = [&](double y) { return top + ph * (1 - y / ymax); };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << style.width << "\" height=\"" << style.height
      << "\" viewBox=\"0 0 " << style.width << ' ' << style.height << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << style.width / 2 << "\" y=\"22\" text-anchor=\"middle\" font-family=\"sans-serif\" "
      << "font-size=\"14\">" << escape(style.title) << "</text>\n";

  svg << "<g class=\"axes\" stroke=\"black\" fill=\"none\">\n";
  svg << "<line x1=\"" << num(sx(0)) << "\" y1=\"" << num(sy(0)) << "\" x2=\"" << num(sx(xmax)) << "\" y2=\""
      << num(sy(0)) << "\"/>\n";
  svg << "<line x1=\"" << num(sx(0)) << "\" y1=\"" << num(sy(0)) << "\" x2=\"" << num(sx(0)) << "\" y2=\""
      << num(sy(ymax)) << "\"/>\n";
  svg << "</g>\n<g class=\"ticks\" font-family=\"sans-serif\" font-size=\"11\">\n";
  for (double t = 0; t <= xmax + 1e-9; t += 0.5) {
    svg << "<text x=\"" << num(sx(t)) << "\" y=\"" << num(sy(0) + 16) << "\" text-anchor=\"middle\">" << num(t)
        << "</text>\n";
  }
  for (double t = 0; t <= ymax + 1e-9; t += 0.5) {
    svg << "<text x=\"" << num(sx(0) - 8) << "\" y=\"" << num(sy(t) + 4) << "\" text-anchor=\"end\">" << num(t)
        << "</text>\n";
  }
  svg << "<text x=\"" << num(left + pw / 2) << "\" y=\"" << style.height - 12
      << "\" text-anchor=\"middle\">log2(D)/n</text>\n";
  svg << "<text x=\"16\" y=\"" << num(top + ph / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
      << num(top + ph / 2) << ")\">log2(T)/n</text>\n</g>\n";

  for (std::size_t i = 0; i < series.size(); ++i) {
    const auto& s = series[i];
    const std::string color = kPalette[i % (sizeof(kPalette) / sizeof(kPalette[0]))];
    const std::string label = s.name + (s.measured ? " (measured)" : "");
    std::string data, screen;
    for (const auto& [x, y] : s.points) {
      data += (data.empty() ? "" : " ") + num(x) + "," + num(y);
      screen += (screen.empty() ? "" : " ") + num(sx(x)) + "," + num(sy(y));
    }
    svg << "<polyline class=\"series\" data-attack=\"" << escape(label) << "\" data-points=\"" << data
        << "\" points=\"" << screen << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\""
        << (s.measured ? " stroke-dasharray=\"5,3\"" : "") << "/>\n";
    if (s.measured) {
      for (const auto& [x, y] : s.points) {
        svg << "<circle cx=\"" << num(sx(x)) << "\" cy=\"" << num(sy(y)) << "\" r=\"3\" fill=\"" << color << "\"/>\n";
      }
    }
    const double ly = top + 16 * static_cast<double>(i);
    svg << "<text x=\"" << num(left + pw + 12) << "\" y=\"" << num(ly + 4)
        << "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"" << color << "\">" << escape(label) << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace qkle::harness
