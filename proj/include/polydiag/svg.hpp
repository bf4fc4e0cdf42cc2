#pragma once
// SVG drawing of the n-gon, its diagonals and the intersection points.

#include <array>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <stdexcept>
#include <string>

#include "polydiag/scan.hpp"

namespace polydiag::geometry {

struct SvgOptions {
  int width = 800;
  double stroke = 0.4;
  int highlight = 3;  // draw points where at least this many diagonals meet
};

namespace detail {

inline std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", v);
  return buf;
}

inline const char* multiplicity_color(int k, bool center) {
  if (center) return "#000000";
  static constexpr std::array<const char*, 8> palette{
      "#999999", "#999999", "#4477aa", "#228833", "#ccbb44", "#ee6677", "#aa3377", "#66ccee"};
  return palette[static_cast<std::size_t>(std::min(k, 7))];
}

}  // namespace detail

// Deterministic document: fixed-precision coordinates, points in diagonal-set
// order. Points come from a full-mode scan.
inline std::string svg_document(int n, const ScanResult& full_scan, const SvgOptions& opt) {
  if (n < 3) throw std::invalid_argument("n must be at least 3");
  if (opt.width <= 0) throw std::invalid_argument("width must be positive");
  const double w = opt.width;
  const double r = 0.45 * w;
  const double c = 0.5 * w;
  auto px = [&](double x) { return detail::fmt12(c + r * x); };
  auto py = [&](double y) { return detail::fmt12(c - r * y); };
  std::vector<std::pair<double, double>> v(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const long double t = 2.0L * std::numbers::pi_v<long double> * j / n;
    v[static_cast<std::size_t>(j)] = {static_cast<double>(std::cos(t)), static_cast<double>(std::sin(t))};
  }

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(opt.width) + "\" height=\"" +
         std::to_string(opt.width) + "\" viewBox=\"0 0 " + std::to_string(opt.width) + " " +
         std::to_string(opt.width) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";

  out += "<polygon fill=\"none\" stroke=\"#000000\" stroke-width=\"" + detail::fmt12(2 * opt.stroke) + "\" points=\"";
  for (int j = 0; j < n; ++j) {
    if (j) out += ' ';
    out += px(v[static_cast<std::size_t>(j)].first) + "," + py(v[static_cast<std::size_t>(j)].second);
  }
  out += "\"/>\n";

  out += "<g stroke=\"#555555\" stroke-width=\"" + detail::fmt12(opt.stroke) + "\">\n";
  for (int a = 0; a < n; ++a) {
    for (int b = a + 2; b < n; ++b) {
      if (a == 0 && b == n - 1) continue;
      const auto& p = v[static_cast<std::size_t>(a)];
      const auto& q = v[static_cast<std::size_t>(b)];
      out += "<line x1=\"" + px(p.first) + "\" y1=\"" + py(p.second) + "\" x2=\"" + px(q.first) + "\" y2=\"" +
             py(q.second) + "\"/>\n";
    }
  }
  out += "</g>\n";

  const double radius = std::max(1.0, 3.0 * opt.stroke);
  out += "<g stroke=\"none\">\n";
  for (const auto& cl : full_scan.clusters) {
    if (cl.k() < opt.highlight) continue;
    out += "<circle cx=\"" + px(cl.x) + "\" cy=\"" + py(cl.y) + "\" r=\"" + detail::fmt12(radius) + "\" fill=\"" +
           detail::multiplicity_color(cl.k(), cl.is_center) + "\"><title>" + std::to_string(cl.k()) +
           "</title></circle>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

inline void render_svg(int n, const std::string& path, const SvgOptions& opt = {}, int jobs = 1) {
  if (n < 3) throw std::invalid_argument("n must be at least 3");
  const ScanResult s = scan(n, ScanMode::full, jobs);
  const std::string doc = svg_document(n, s, opt);
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << doc;
  if (!f) throw std::runtime_error("cannot write " + path);
}

}  // namespace polydiag::geometry
