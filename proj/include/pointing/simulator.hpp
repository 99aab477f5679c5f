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
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "pointing/camera.hpp"
#include "pointing/frame.hpp"
#include "pointing/pointing.hpp"

namespace pointing::sim {

/// Stereo-like depth sensor degradation with range.
struct NoiseModel {
  double sigma0 = 0.004;          // depth noise sigma(z) = sigma0 * z^2, 1/m
  double n0_face = 600.0;         // face samples n(z) = max(n_min, round(n0 / z^2))
  double n0_hand = 250.0;         // same for each hand
  int n_min = 1;
  double dropout_start_m = 2.8;   // dropout probability 0 at and below this range
  double dropout_full_m = 5.5;    // reaches dropout_max here, constant beyond
  double dropout_max = 0.6;
  double background_fraction = 0.1;  // background samples per foreground sample
  double bbox_jitter_px = 2.0;       // sigma of each bbox edge
  double wall_offset_m = 1.5;        // background plane behind the subject

  double depth_sigma(double z) const { return sigma0 * z * z; }
  int sample_count(double z, double n0) const;
  double dropout_probability(double z) const;

  static NoiseModel noiseless();
};

/// Rigid stand-in for the user: a face disk centered on the eye, a hand disk
/// centered on the fingertip, and an optional idle hand hanging at the side.
struct BodyModel {
  double subject_height = 1.75;
  double eye_height = 1.6;
  double shoulder_drop = 0.25;     // shoulder below the eye
  double shoulder_lateral = 0.18;  // pointing shoulder to the subject's right
  double arm_length = 0.62;        // shoulder to fingertip
  double face_radius = 0.09;
  double hand_radius = 0.05;
  double bbox_margin = 1.5;        // detector box half-size over disk radius
  bool idle_hand = true;
  double idle_hand_height = 0.72;
  double idle_hand_lateral = 0.22;
};

/// Subject placement on the floor relative to the camera.
struct Pose {
  double range_m = 0.0;      // horizontal distance from the camera
  double bearing_deg = 0.0;  // positive toward world +X

  bool operator==(const Pose&) const = default;
};

/// Either a (pitch, yaw) ray direction or a floor point to aim at.
struct PointingTarget {
  std::string name;
  bool floor = false;
  double pitch_deg = 0.0;
  double yaw_deg = 0.0;
  double x = 0.0;
  double y = 0.0;
};

struct Scenario {
  BodyModel body;
  NoiseModel noise;
  std::vector<Pose> positions;             // angle grid (experiment A)
  std::vector<PointingTarget> directions;  // angle directions (experiment A)
  std::vector<Pose> floor_positions;       // subject stands (experiment B)
  std::vector<PointingTarget> targets;     // floor targets (experiment B)
  int frames_per_pose = 200;
  double frame_rate_hz = 30.0;
  std::uint64_t seed = 42;

  /// 5 ranges (1.5 .. 5.5 m) x 5 bearings x 4 directions; 5 straight-ahead
  /// stands x 3 floor targets.
  static Scenario default_scenario();
};

struct GroundTruth {
  WorldPoint eye;
  WorldPoint fingertip;
  double pitch_deg = 0.0;
  double yaw_deg = 0.0;
  std::optional<GoalPoint> floor_goal;
};

class ScenarioError : public std::runtime_error {
 public:
  explicit ScenarioError(std::vector<std::string> problems);
  const std::vector<std::string>& problems() const { return problems_; }

 private:
  std::vector<std::string> problems_;
};

/// Deterministic randomness for one (seed, stream) pair; grid cells use their
/// index as the stream so any evaluation order reproduces the same frames.
std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream);

/// Analytic placement of eye and fingertip; no randomness involved.
GroundTruth pose_ground_truth(const BodyModel& body, const Pose& pose,
                              const PointingTarget& target);

/// Lists every invalid field or unrenderable (pose, direction) pair; empty
/// when the scenario is usable with these intrinsics.
std::vector<std::string> validate_scenario(const Scenario& scenario,
                                           const CameraIntrinsics& intr);

/// One detector frame with sensor samples for a pose and pointing target.
/// Throws ScenarioError when the subject cannot be rendered.
std::pair<DetectionFrame, GroundTruth> synthesize_frame(const BodyModel& body, const Pose& pose,
                                                        const PointingTarget& target,
                                                        const NoiseModel& noise,
                                                        const CameraIntrinsics& intr,
                                                        double timestamp, std::mt19937_64& rng);

Scenario scenario_from_json(const nlohmann::json& j);
nlohmann::json scenario_to_json(const Scenario& scenario);
nlohmann::json ground_truth_to_json(double timestamp, const GroundTruth& truth);

}  // namespace pointing::sim
