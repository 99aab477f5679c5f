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

#include "pointing/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>

namespace pointing {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr std::uint64_t kFloorStreamBase = 1u << 20;

// Runs body(i) for i in [0, n). Parallel iterations write disjoint slots, so
// results do not depend on scheduling.
template <typename Body>
void for_each_index(std::size_t n, Execution exec, Body&& body) {
  if (exec == Execution::kSerial) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) body(static_cast<std::size_t>(i));
}

double timestamp_of(const sim::Scenario& s, std::size_t cell, int frame) {
  return static_cast<double>(cell * static_cast<std::size_t>(s.frames_per_pose) +
                             static_cast<std::size_t>(frame)) /
         s.frame_rate_hz;
}

void require_valid(const sim::Scenario& scenario, const CameraIntrinsics& intr) {
  auto problems = sim::validate_scenario(scenario, intr);
  if (!problems.empty()) throw sim::ScenarioError(std::move(problems));
}

}  // namespace

std::vector<FrameEstimate> estimate_batch(std::span<const DetectionFrame> frames,
                                          const EstimatorConfig& config,
                                          const CameraIntrinsics& intr, Execution exec) {
  std::vector<FrameEstimate> out(frames.size());
  for_each_index(frames.size(), exec,
                 [&](std::size_t i) { out[i] = estimate_frame(frames[i], config, intr); });
  return out;
}

double angular_error_deg(const WorldPoint& a, const WorldPoint& b) {
  return std::atan2(a.cross(b).norm(), a.dot(b)) * 180.0 / std::numbers::pi;
}

double yaw_difference_deg(double a, double b) {
  double d = std::remainder(a - b, 360.0);
  return d <= -180.0 ? d + 360.0 : d;
}

std::vector<AngleCell> run_experiment_a(const sim::Scenario& scenario,
                                        std::span<const KeypointStrategy> strategies,
                                        const RoiParams& roi, const CameraIntrinsics& intr,
                                        Execution exec) {
  require_valid(scenario, intr);
  const std::size_t n_dir = scenario.directions.size();
  const std::size_t n_cells = scenario.positions.size() * n_dir;
  const std::size_t n_strat = strategies.size();
  std::vector<AngleCell> cells(n_cells * n_strat);

  for_each_index(n_cells, exec, [&](std::size_t cell) {
    const auto& pose = scenario.positions[cell / n_dir];
    const auto& direction = scenario.directions[cell % n_dir];
    auto rng = sim::make_rng(scenario.seed, cell);

    for (std::size_t s = 0; s < n_strat; ++s) {
      auto& out = cells[cell * n_strat + s];
      out.pose = pose;
      out.direction = direction.name;
      out.strategy = strategies[s];
      out.frames = scenario.frames_per_pose;
      out.frame_errors_deg.reserve(static_cast<std::size_t>(scenario.frames_per_pose));
    }
    for (int k = 0; k < scenario.frames_per_pose; ++k) {
      const auto [frame, truth] =
          sim::synthesize_frame(scenario.body, pose, direction, scenario.noise, intr,
                                timestamp_of(scenario, cell, k), rng);
      const WorldPoint true_ray = truth.fingertip - truth.eye;
      for (std::size_t s = 0; s < n_strat; ++s) {
        auto& out = cells[cell * n_strat + s];
        const auto result = estimate_frame(frame, {strategies[s], roi}, intr);
        if (!result.estimate) {
          out.frame_errors_deg.push_back(kNaN);
          continue;
        }
        const auto& est = *result.estimate;
        const double err = angular_error_deg(est.direction * -1.0, true_ray);
        out.frame_errors_deg.push_back(err);
        out.mean_err_deg += err;
        out.mean_abs_dpitch += std::abs(est.pitch_deg - truth.pitch_deg);
        out.mean_abs_dyaw += std::abs(yaw_difference_deg(est.yaw_deg, truth.yaw_deg));
        ++out.estimates;
      }
    }
    for (std::size_t s = 0; s < n_strat; ++s) {
      auto& out = cells[cell * n_strat + s];
      if (out.estimates == 0) {
        out.mean_err_deg = out.mean_abs_dpitch = out.mean_abs_dyaw = kNaN;
      } else {
        out.mean_err_deg /= out.estimates;
        out.mean_abs_dpitch /= out.estimates;
        out.mean_abs_dyaw /= out.estimates;
      }
    }
  });
  return cells;
}

std::span<const ReferenceGoalRow> reference_goal_table() {
  static constexpr ReferenceGoalRow kRows[] = {
      {1.5, 16.1, 1.9}, {2.5, 18.1, 2.1}, {3.5, 14.5, 3.5}, {4.5, 22.4, 5.6}, {5.5, 48.4, 12.3},
  };
  return kRows;
}

GoalReport run_experiment_b(const sim::Scenario& scenario, KeypointStrategy strategy,
                            const RoiParams& roi, const CameraIntrinsics& intr, Execution exec) {
  require_valid(scenario, intr);
  const std::size_t n_targets = scenario.targets.size();
  const std::size_t n_cells = scenario.floor_positions.size() * n_targets;

  GoalReport report;
  report.strategy = strategy;
  report.cells.resize(n_cells);
  for_each_index(n_cells, exec, [&](std::size_t cell) {
    const auto& pose = scenario.floor_positions[cell / n_targets];
    const auto& target = scenario.targets[cell % n_targets];
    auto rng = sim::make_rng(scenario.seed, kFloorStreamBase + cell);
    auto& out = report.cells[cell];
    out.pose = pose;
    out.target = target.name;
    out.frames = scenario.frames_per_pose;
    for (int k = 0; k < scenario.frames_per_pose; ++k) {
      const auto [frame, truth] =
          sim::synthesize_frame(scenario.body, pose, target, scenario.noise, intr,
                                timestamp_of(scenario, kFloorStreamBase + cell, k), rng);
      const auto result = estimate_frame(frame, {strategy, roi}, intr);
      if (!result.goal) continue;
      out.errors_m.push_back(std::hypot(result.goal->x - target.x, result.goal->y - target.y));
    }
  });

  std::map<double, GoalRow> by_range;
  for (const auto& cell : report.cells) {
    auto& row = by_range[cell.pose.range_m];
    row.distance_m = cell.pose.range_m;
    row.frames += cell.frames;
    row.goals += static_cast<int>(cell.errors_m.size());
  }
  for (auto& [range, row] : by_range) {
    double sum = 0.0;
    for (const auto& cell : report.cells) {
      if (cell.pose.range_m != range) continue;
      for (double e : cell.errors_m) sum += e;
    }
    if (row.goals == 0) {
      row.mu_cm = row.sigma_cm = kNaN;
    } else {
      const double mean = sum / row.goals;
      double ss = 0.0;
      for (const auto& cell : report.cells) {
        if (cell.pose.range_m != range) continue;
        for (double e : cell.errors_m) ss += (e - mean) * (e - mean);
      }
      row.mu_cm = 100.0 * mean;
      row.sigma_cm = row.goals > 1 ? 100.0 * std::sqrt(ss / (row.goals - 1)) : 0.0;
    }
    for (const auto& ref : reference_goal_table()) {
      if (std::abs(ref.distance_m - range) < 1e-9) {
        row.reference_mu_cm = ref.mu_cm;
        row.reference_sigma_cm = ref.sigma_cm;
      }
    }
    report.rows.push_back(row);
  }
  return report;
}

std::vector<std::pair<DetectionFrame, sim::GroundTruth>> simulate_stream(
    const sim::Scenario& scenario, const CameraIntrinsics& intr, bool floor_targets) {
  require_valid(scenario, intr);
  const auto& list = floor_targets ? scenario.targets : scenario.directions;
  const auto& poses = floor_targets ? scenario.floor_positions : scenario.positions;
  const std::uint64_t base = floor_targets ? kFloorStreamBase : 0;
  std::vector<std::pair<DetectionFrame, sim::GroundTruth>> out;
  for (std::size_t cell = 0; cell < poses.size() * list.size(); ++cell) {
    auto rng = sim::make_rng(scenario.seed, base + cell);
    for (int k = 0; k < scenario.frames_per_pose; ++k) {
      out.push_back(sim::synthesize_frame(scenario.body, poses[cell / list.size()],
                                          list[cell % list.size()], scenario.noise, intr,
                                          timestamp_of(scenario, base + cell, k), rng));
    }
  }
  return out;
}

}  // namespace pointing
