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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pointing/pointing.hpp"
#include "pointing/simulator.hpp"

namespace pointing {

/// kSerial is the reference path; kParallel distributes independent work
/// items over OpenMP threads and must reproduce it bit for bit.
enum class Execution { kSerial, kParallel };

/// estimate_frame over a batch of independent frames (no tracking).
std::vector<FrameEstimate> estimate_batch(std::span<const DetectionFrame> frames,
                                          const EstimatorConfig& config,
                                          const CameraIntrinsics& intr,
                                          Execution exec = Execution::kParallel);

/// Angle between two directions in degrees, accurate near zero.
double angular_error_deg(const WorldPoint& a, const WorldPoint& b);

/// Signed yaw difference wrapped to (-180, 180].
double yaw_difference_deg(double a, double b);

struct AngleCell {
  sim::Pose pose;
  std::string direction;
  KeypointStrategy strategy = KeypointStrategy::kMeanDepth;
  int frames = 0;
  int estimates = 0;
  double mean_err_deg = 0.0;    // NaN without estimates
  double mean_abs_dpitch = 0.0;
  double mean_abs_dyaw = 0.0;
  /// Per-frame angular error, NaN where the frame produced no estimate.
  std::vector<double> frame_errors_deg;

  double yield() const { return frames ? static_cast<double>(estimates) / frames : 0.0; }
};

/// Pointing-angle accuracy over the scenario's positions x directions grid.
/// Every strategy sees the identical synthesized frames of a cell. Cells are
/// ordered position-major, then direction, then strategy.
std::vector<AngleCell> run_experiment_a(const sim::Scenario& scenario,
                                        std::span<const KeypointStrategy> strategies,
                                        const RoiParams& roi, const CameraIntrinsics& intr,
                                        Execution exec = Execution::kParallel);

struct GoalCell {
  sim::Pose pose;
  std::string target;
  int frames = 0;
  std::vector<double> errors_m;  // one per frame that produced a goal
};

struct GoalRow {
  double distance_m = 0.0;
  int frames = 0;
  int goals = 0;
  double mu_cm = 0.0;     // NaN without goals
  double sigma_cm = 0.0;  // sample standard deviation
  std::optional<double> reference_mu_cm;
  std::optional<double> reference_sigma_cm;

  double yield() const { return frames ? static_cast<double>(goals) / frames : 0.0; }
};

struct GoalReport {
  KeypointStrategy strategy = KeypointStrategy::kMeanDepth;
  std::vector<GoalCell> cells;  // position-major, then target
  std::vector<GoalRow> rows;    // one per distinct range, ascending
};

/// Floor-target accuracy: Euclidean distance between the estimated goal and
/// the target, aggregated per subject range.
GoalReport run_experiment_b(const sim::Scenario& scenario, KeypointStrategy strategy,
                            const RoiParams& roi, const CameraIntrinsics& intr,
                            Execution exec = Execution::kParallel);

/// Reference floor-target results (distance m, mean cm, std cm), printed as
/// context next to simulated rows.
struct ReferenceGoalRow {
  double distance_m;
  double mu_cm;
  double sigma_cm;
};
std::span<const ReferenceGoalRow> reference_goal_table();

/// Frames of the experiment A grid (or B targets when `floor_targets`) in
/// cell order with their ground truth, as the runners generate them.
std::vector<std::pair<DetectionFrame, sim::GroundTruth>> simulate_stream(
    const sim::Scenario& scenario, const CameraIntrinsics& intr, bool floor_targets);

}  // namespace pointing
