#include "vclines/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <utility>
#include <vector>

namespace vclines {

namespace {

constexpr double kSide = 480.0;
constexpr double kPad = 36.0;

double to_double(const Rational& r) {
  return numerator(r).convert_to<double>() / denominator(r).convert_to<double>();
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

std::string config_svg(const PointConfig& cfg) {
  std::vector<std::pair<double, double>> pts;
  for (const Point& p : cfg.points()) pts.emplace_back(to_double(p.x), to_double(p.y));

  double lo_x = 0, hi_x = 1, lo_y = 0, hi_y = 1;
  if (!pts.empty()) {
    lo_x = hi_x = pts[0].first;
    lo_y = hi_y = pts[0].second;
    for (auto [x, y] : pts) {
      lo_x = std::min(lo_x, x), hi_x = std::max(hi_x, x);
      lo_y = std::min(lo_y, y), hi_y = std::max(hi_y, y);
    }
  }
  double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
  double scale = (kSide - 2 * kPad) / span;
  // SVG y grows downward; flip so the drawing matches plane coordinates.
  auto sx = [&](double x) { return kPad + (x - lo_x) * scale; };
  auto sy = [&](double y) { return kSide - kPad - (y - lo_y) * scale; };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(kSide) + "\" height=\"" +
         fmt(kSide) + "\" viewBox=\"0 0 " + fmt(kSide) + " " + fmt(kSide) + "\">\n";

  for (const LineTrace& lt : cfg.lines()) {
    // Segment through the trace's extreme points, stretched a little past them.
    std::vector<int> on = mask_indices(lt.trace);
    auto far_apart = [&](int i, int j) {
      double dx = pts[i].first - pts[j].first, dy = pts[i].second - pts[j].second;
      return dx * dx + dy * dy;
    };
    int a = on[0], b = on[1];
    for (int i : on)
      for (int j : on)
        if (far_apart(i, j) > far_apart(a, b)) a = i, b = j;
    double ax = pts[a].first, ay = pts[a].second;
    double bx = pts[b].first, by = pts[b].second;
    double ex = 0.12 * (bx - ax), ey = 0.12 * (by - ay);
    out += "  <line x1=\"" + fmt(sx(ax - ex)) + "\" y1=\"" + fmt(sy(ay - ey)) + "\" x2=\"" +
           fmt(sx(bx + ex)) + "\" y2=\"" + fmt(sy(by + ey)) +
           "\" stroke=\"#888\" stroke-width=\"1\"/>\n";
  }

  for (int i = 0; i < cfg.size(); ++i) {
    auto [x, y] = pts[i];
    out += "  <circle cx=\"" + fmt(sx(x)) + "\" cy=\"" + fmt(sy(y)) +
           "\" r=\"4\" fill=\"#1f4e8c\"/>\n";
    out += "  <text x=\"" + fmt(sx(x) + 6) + "\" y=\"" + fmt(sy(y) - 6) +
           "\" font-size=\"12\" font-family=\"sans-serif\">" + std::to_string(i) + "</text>\n";
  }

  out += "</svg>\n";
  return out;
}

}  // namespace vclines
