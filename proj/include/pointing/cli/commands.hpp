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

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pointing/camera.hpp"
#include "pointing/experiment.hpp"
#include "pointing/goal_gate.hpp"
#include "pointing/pointing.hpp"
#include "pointing/simulator.hpp"
#include "pointing/tracking.hpp"

namespace pointing::cli {

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;  // bad flags, config or scenario
inline constexpr int kExitInput = 2;  // unreadable or unusable input data

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  EstimatorConfig estimator;
  bool track = false;
  TrackerParams tracker;
  GateParams gate;
  std::string intrinsics_path;  // empty: bundled 640x480 / 68 deg sensor
  std::string scenario_path;    // empty: built-in default scenario
  std::string input = "-";
  std::string output = "-";
  std::string out_dir = ".";
  std::optional<std::uint64_t> seed;
  std::optional<int> frames_per_pose;
  Execution execution = Execution::kParallel;

  /// Throws ConfigError describing the first invalid field.
  void validate() const;
};

CameraIntrinsics load_intrinsics(const std::string& path);
CameraIntrinsics intrinsics_for(const RunConfig& config);

/// Scenario file (or the default) with CLI overrides applied. Throws
/// ConfigError listing every offending field.
sim::Scenario scenario_for(const RunConfig& config, const CameraIntrinsics& intr);

struct EstimateSummary {
  std::size_t frames = 0;     // accepted frames
  std::size_t estimates = 0;  // frames with a pointing estimate
  std::size_t goals = 0;
  std::size_t skipped = 0;    // malformed or out-of-order lines
  std::size_t commits = 0;
  double seconds = 0.0;

  double yield() const { return frames ? static_cast<double>(estimates) / frames : 0.0; }
  double frames_per_second() const { return seconds > 0.0 ? frames / seconds : 0.0; }
};

/// Reads a frame log, writes one estimate record per accepted frame plus any
/// goal commit records, and warns on `log` for each skipped line.
EstimateSummary run_estimate(std::istream& in, std::ostream& out, std::ostream& log,
                             const RunConfig& config, const CameraIntrinsics& intr);
std::string format_summary(const EstimateSummary& summary);

/// Writes synthesized frames (and optionally ground truth) as JSON lines.
std::size_t run_simulate(const sim::Scenario& scenario, const CameraIntrinsics& intr,
                         bool floor_targets, std::ostream& frames,
                         std::ostream* truth = nullptr);

struct ExperimentArtifacts {
  std::string csv;
  std::string svg;
  std::string table;  // experiment B text table
};

ExperimentArtifacts run_experiment_a_artifacts(const sim::Scenario& scenario,
                                               const RunConfig& config,
                                               const CameraIntrinsics& intr);
ExperimentArtifacts run_experiment_b_artifacts(const sim::Scenario& scenario,
                                               const RunConfig& config,
                                               const CameraIntrinsics& intr);

struct BenchOptions {
  int frames = 1000;
  int max_samples = 5000;  // per frame, all ROIs together
  std::uint64_t seed = 7;
  std::vector<KeypointStrategy> strategies{std::begin(kAllStrategies), std::end(kAllStrategies)};
};

struct LatencyStats {
  KeypointStrategy strategy = KeypointStrategy::kMeanDepth;
  int frames = 0;
  int estimates = 0;
  double mean_samples = 0.0;
  int max_samples = 0;
  double p50_ms = 0.0;
  double p99_ms = 0.0;
  double max_ms = 0.0;
  double frames_per_second = 0.0;
};

/// Synthetic frames for latency measurement, each with at most
/// `max_samples` depth samples across its ROIs.
std::vector<DetectionFrame> bench_frames(const BenchOptions& options,
                                         const CameraIntrinsics& intr);

/// Per-frame estimate_frame latency (detector excluded) per strategy.
std::vector<LatencyStats> run_bench(const BenchOptions& options, const RoiParams& roi,
                                    const CameraIntrinsics& intr);
std::string format_bench(const std::vector<LatencyStats>& stats);

}  // namespace pointing::cli
