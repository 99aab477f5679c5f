// Copyright 2026 The pointing Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pointing/report.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <numbers>
#include <set>
#include <sstream>
#include <tuple>
#include <vector>

namespace pointing::report {

std::string fixed(double value, int digits) {
  if (std::isnan(value)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, value);
  return buf;
}

void write_angle_csv(std::ostream& os, std::span<const AngleCell> cells) {
  os << "range_m,bearing_deg,direction,strategy,mean_err_deg,yield\n";
  for (const auto& c : cells) {
    os << fixed(c.pose.range_m, 3) << ',' << fixed(c.pose.bearing_deg, 3) << ',' << c.direction
       << ',' << to_string(c.strategy) << ',' << fixed(c.mean_err_deg, 6) << ','
       << fixed(c.yield(), 4) << '\n';
  }
}

void write_goal_csv(std::ostream& os, const GoalReport& report) {
  os << "distance_m,frames,goals,yield,mu_cm,sigma_cm,reference_mu_cm,reference_sigma_cm\n";
  for (const auto& r : report.rows) {
    os << fixed(r.distance_m, 3) << ',' << r.frames << ',' << r.goals << ','
       << fixed(r.yield(), 4) << ',' << fixed(r.mu_cm, 3) << ',' << fixed(r.sigma_cm, 3) << ','
       << (r.reference_mu_cm ? fixed(*r.reference_mu_cm, 1) : "") << ','
       << (r.reference_sigma_cm ? fixed(*r.reference_sigma_cm, 1) : "") << '\n';
  }
}

std::string format_goal_table(const GoalReport& report) {
  std::ostringstream os;
  char line[160];
  os << "Goal point error, strategy " << to_string(report.strategy) << "\n";
  std::snprintf(line, sizeof(line), "%-14s %10s %10s %8s   %14s %14s\n", "Distance (m)",
                "mu (cm)", "sigma (cm)", "yield", "ref mu (cm)", "ref sigma (cm)");
  os << line;
  for (const auto& r : report.rows) {
    const std::string ref_mu = r.reference_mu_cm ? fixed(*r.reference_mu_cm, 1) : "-";
    const std::string ref_sigma = r.reference_sigma_cm ? fixed(*r.reference_sigma_cm, 1) : "-";
    std::snprintf(line, sizeof(line), "%-14s %10s %10s %8s   %14s %14s\n",
                  fixed(r.distance_m, 1).c_str(), fixed(r.mu_cm, 1).c_str(),
                  fixed(r.sigma_cm, 1).c_str(), fixed(r.yield(), 3).c_str(), ref_mu.c_str(),
                  ref_sigma.c_str());
    os << line;
  }
  return os.str();
}

namespace {

constexpr double kPanelW = 440.0;
constexpr double kPanelH = 330.0;
constexpr double kRadiusPx = 250.0;

std::string lerp_color(double t) {
  static constexpr std::array<std::array<int, 3>, 5> kStops = {{
      {68, 1, 84}, {59, 82, 139}, {33, 145, 140}, {94, 201, 98}, {253, 231, 37},
  }};
  t = std::clamp(t, 0.0, 1.0) * (kStops.size() - 1);
  const auto i = std::min(static_cast<std::size_t>(t), kStops.size() - 2);
  const double f = t - static_cast<double>(i);
  char buf[8];
  std::snprintf(buf, sizeof(buf), "#%02x%02x%02x",
                static_cast<int>(std::lround(kStops[i][0] + f * (kStops[i + 1][0] - kStops[i][0]))),
                static_cast<int>(std::lround(kStops[i][1] + f * (kStops[i + 1][1] - kStops[i][1]))),
                static_cast<int>(std::lround(kStops[i][2] + f * (kStops[i + 1][2] - kStops[i][2]))));
  return buf;
}

double min_spacing(const std::set<double>& values, double fallback) {
  if (values.size() < 2) return fallback;
  double best = std::numeric_limits<double>::infinity();
  for (auto it = values.begin(); std::next(it) != values.end(); ++it) {
    best = std::min(best, *std::next(it) - *it);
  }
  return best;
}

}  // namespace

void write_polar_heatmap_svg(std::ostream& os, std::span<const AngleCell> cells) {
  std::vector<KeypointStrategy> strategies;
  std::set<double> ranges;
  std::set<double> bearings;
  // (strategy, range, bearing) -> (sum, count) over directions with estimates
  std::map<std::tuple<int, double, double>, std::pair<double, int>> sums;
  for (const auto& c : cells) {
    if (std::find(strategies.begin(), strategies.end(), c.strategy) == strategies.end()) {
      strategies.push_back(c.strategy);
    }
    ranges.insert(c.pose.range_m);
    bearings.insert(c.pose.bearing_deg);
    auto& acc = sums[{static_cast<int>(c.strategy), c.pose.range_m, c.pose.bearing_deg}];
    if (!std::isnan(c.mean_err_deg)) {
      acc.first += c.mean_err_deg;
      ++acc.second;
    }
  }

  double vmax = 10.0;
  for (const auto& [key, acc] : sums) {
    if (acc.second) vmax = std::max(vmax, std::ceil(acc.first / acc.second));
  }

  const double dr = min_spacing(ranges, 1.0);
  const double db = min_spacing(bearings, 10.0);
  const double r_max = ranges.empty() ? 1.0 : *ranges.rbegin() + 0.5 * dr;
  const double scale = kRadiusPx / r_max;
  const double width = kPanelW * std::max<std::size_t>(strategies.size(), 1);
  const double height = kPanelH + 60.0;

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed(width, 0) << "\" height=\""
     << fixed(height, 0) << "\" viewBox=\"0 0 " << fixed(width, 0) << ' ' << fixed(height, 0)
     << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (std::size_t p = 0; p < strategies.size(); ++p) {
    const double cx = kPanelW * (static_cast<double>(p) + 0.5);
    const double cy = kPanelH - 20.0;
    auto at = [&](double r, double bearing_deg) {
      const double a = bearing_deg * std::numbers::pi / 180.0;
      return std::make_pair(cx + scale * r * std::sin(a), cy - scale * r * std::cos(a));
    };
    os << "<g>\n<text x=\"" << fixed(cx, 1) << "\" y=\"20\" text-anchor=\"middle\" "
       << "font-size=\"14\">" << to_string(strategies[p]) << "</text>\n";

    for (double r : ranges) {
      for (double b : bearings) {
        const auto& acc = sums[{static_cast<int>(strategies[p]), r, b}];
        const double value = acc.second ? acc.first / acc.second
                                        : std::numeric_limits<double>::quiet_NaN();
        const double r0 = std::max(r - 0.5 * dr, 0.0);
        const double r1 = r + 0.5 * dr;
        const double b0 = b - 0.5 * db;
        const double b1 = b + 0.5 * db;
        const auto [x00, y00] = at(r0, b0);
        const auto [x01, y01] = at(r0, b1);
        const auto [x11, y11] = at(r1, b1);
        const auto [x10, y10] = at(r1, b0);
        os << "<path d=\"M" << fixed(x00, 2) << ',' << fixed(y00, 2) << " A"
           << fixed(scale * r0, 2) << ',' << fixed(scale * r0, 2) << " 0 0 1 " << fixed(x01, 2)
           << ',' << fixed(y01, 2) << " L" << fixed(x11, 2) << ',' << fixed(y11, 2) << " A"
           << fixed(scale * r1, 2) << ',' << fixed(scale * r1, 2) << " 0 0 0 " << fixed(x10, 2)
           << ',' << fixed(y10, 2) << " Z\" fill=\""
           << (std::isnan(value) ? std::string("#cccccc") : lerp_color(value / vmax))
           << "\" stroke=\"white\" stroke-width=\"0.5\"><title>" << fixed(r, 2) << " m, "
           << fixed(b, 1) << " deg: " << fixed(value, 3) << " deg</title></path>\n";
      }
    }
    for (double r : ranges) {
      const auto [x, y] = at(r, 0.0);
      os << "<text x=\"" << fixed(x + 3.0, 1) << "\" y=\"" << fixed(y, 1)
         << "\" font-size=\"10\" fill=\"black\">" << fixed(r, 1) << "</text>\n";
    }
    os << "<circle cx=\"" << fixed(cx, 1) << "\" cy=\"" << fixed(cy, 1)
       << "\" r=\"3\" fill=\"black\"/>\n</g>\n";
  }

  // Legend
  const double lx = 20.0;
  const double ly = kPanelH + 10.0;
  const int steps = 50;
  for (int i = 0; i < steps; ++i) {
    os << "<rect x=\"" << fixed(lx + 4.0 * i, 1) << "\" y=\"" << fixed(ly, 1)
       << "\" width=\"4\" height=\"12\" fill=\"" << lerp_color(i / (steps - 1.0)) << "\"/>\n";
  }
  os << "<text x=\"" << fixed(lx, 1) << "\" y=\"" << fixed(ly + 26.0, 1) << "\">0</text>\n";
  os << "<text x=\"" << fixed(lx + 4.0 * steps, 1) << "\" y=\"" << fixed(ly + 26.0, 1)
     << "\" text-anchor=\"end\">" << fixed(vmax, 0) << "</text>\n";
  os << "<text x=\"" << fixed(lx + 4.0 * steps + 10.0, 1) << "\" y=\"" << fixed(ly + 10.0, 1)
     << "\">mean angular error (deg); radius is distance from camera (m)</text>\n";
  os << "</svg>\n";
}

}  // namespace pointing::report
