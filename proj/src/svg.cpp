#include <algorithm>
#include <cmath>
#include <limits>

#include "sparrow/csv.hpp"
#include "sparrow/svg.hpp"

namespace sparrow {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 420.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 20.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 60.0;

std::string num(double v) { return format_fixed(v, 2); }

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string svg_chart(const std::string& title, const std::string& x_label,
                      const std::string& y_label, const std::vector<PlotSeries>& series) {
  double x_lo = std::numeric_limits<double>::infinity();
  double x_hi = -x_lo;
  double y_lo = x_lo;
  double y_hi = -x_lo;
  for (const auto& s : series) {
    for (const auto& [x, y] : s.points) {
      x_lo = std::min(x_lo, x);
      x_hi = std::max(x_hi, x);
      y_lo = std::min(y_lo, y);
      y_hi = std::max(y_hi, y);
    }
  }
  if (!std::isfinite(x_lo)) {
    x_lo = 0.0; x_hi = 1.0; y_lo = 0.0; y_hi = 1.0;
  }
  if (x_hi - x_lo < 1e-12) { x_lo -= 0.5; x_hi += 0.5; }
  if (y_hi - y_lo < 1e-12) { y_lo -= 0.05; y_hi += 0.05; }
  const double pad = 0.05 * (y_hi - y_lo);
  y_lo -= pad;
  y_hi += pad;

  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  auto sx = [&](double x) { return kLeft + (x - x_lo) / (x_hi - x_lo) * pw; };
  auto sy = [&](double y) { return kTop + (1.0 - (y - y_lo) / (y_hi - y_lo)) * ph; };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) +
         "\" height=\"" + num(kHeight) + "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += "<text x=\"" + num(kWidth / 2) + "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">" +
         escape(title) + "</text>\n";
  out += "<rect x=\"" + num(kLeft) + "\" y=\"" + num(kTop) + "\" width=\"" + num(pw) +
         "\" height=\"" + num(ph) + "\" fill=\"none\" stroke=\"black\"/>\n";

  for (int i = 0; i <= 5; ++i) {
    const double fx = x_lo + (x_hi - x_lo) * i / 5.0;
    const double fy = y_lo + (y_hi - y_lo) * i / 5.0;
    out += "<text x=\"" + num(sx(fx)) + "\" y=\"" + num(kTop + ph + 18) +
           "\" text-anchor=\"middle\">" + format_fixed(fx, 2) + "</text>\n";
    out += "<text x=\"" + num(kLeft - 6) + "\" y=\"" + num(sy(fy) + 4) +
           "\" text-anchor=\"end\">" + format_fixed(fy, 3) + "</text>\n";
    out += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(sy(fy)) + "\" x2=\"" +
           num(kLeft + pw) + "\" y2=\"" + num(sy(fy)) + "\" stroke=\"#ddd\"/>\n";
  }
  out += "<text x=\"" + num(kLeft + pw / 2) + "\" y=\"" + num(kHeight - 15) +
         "\" text-anchor=\"middle\">" + escape(x_label) + "</text>\n";
  out += "<text x=\"16\" y=\"" + num(kTop + ph / 2) + "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " +
         num(kTop + ph / 2) + ")\">" + escape(y_label) + "</text>\n";

  double legend_y = kTop + 14;
  for (const auto& s : series) {
    if (s.markers_only) {
      for (const auto& [x, y] : s.points) {
        out += "<circle cx=\"" + num(sx(x)) + "\" cy=\"" + num(sy(y)) + "\" r=\"2.5\" fill=\"" +
               s.color + "\" fill-opacity=\"0.6\"/>\n";
      }
    } else if (!s.points.empty()) {
      out += "<polyline fill=\"none\" stroke=\"" + s.color + "\" stroke-width=\"2\" points=\"";
      for (const auto& [x, y] : s.points) out += num(sx(x)) + "," + num(sy(y)) + " ";
      out += "\"/>\n";
    }
    out += "<text x=\"" + num(kLeft + pw - 8) + "\" y=\"" + num(legend_y) +
           "\" text-anchor=\"end\" fill=\"" + s.color + "\">" + escape(s.name) + "</text>\n";
    legend_y += 16;
  }
  out += "</svg>\n";
  return out;
}

}  // namespace sparrow
