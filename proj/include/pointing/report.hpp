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

#pragma once

#include <ostream>
#include <span>
#include <string>

#include "pointing/experiment.hpp"

namespace pointing::report {

/// Columns: range_m,bearing_deg,direction,strategy,mean_err_deg,yield
void write_angle_csv(std::ostream& os, std::span<const AngleCell> cells);

/// Columns: distance_m,frames,goals,yield,mu_cm,sigma_cm,reference_mu_cm,reference_sigma_cm
void write_goal_csv(std::ostream& os, const GoalReport& report);

/// Fixed-width table of distance / mu / sigma next to the reference values.
std::string format_goal_table(const GoalReport& report);

/// One polar panel per strategy: annular sectors at (range, bearing) colored
/// by mean angular error averaged over the pointing directions of the cell.
void write_polar_heatmap_svg(std::ostream& os, std::span<const AngleCell> cells);

/// Fixed-point decimal with `digits` fractional digits; "nan" for NaN.
std::string fixed(double value, int digits);

}  // namespace pointing::report
