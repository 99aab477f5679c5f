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

#include "pointing/camera.hpp"
#include "pointing/frame.hpp"
#include "pointing/result.hpp"
#include "pointing/roi.hpp"

namespace pointing {

/// Horizontal ray direction within which no ground hit is reported.
inline constexpr double kMinDescent = 1e-6;

struct PointingAngles {
  double pitch_deg = 0.0;  // positive when pointing downward
  double yaw_deg = 0.0;    // 0 along world +Y, clockwise seen from above, (-180, 180]
};

struct GoalPoint {
  double x = 0.0;
  double y = 0.0;

  WorldPoint as_world() const { return {x, y, 0.0}; }
};

struct PointingEstimate {
  double timestamp = 0.0;
  WorldPoint face_kp;
  WorldPoint hand_kp;
  WorldPoint direction;  // face_kp - hand_kp, unnormalized
  double pitch_deg = 0.0;
  double yaw_deg = 0.0;
  KeypointStrategy strategy = KeypointStrategy::kMeanDepth;
};

/// Topmost hand (smallest v_min); ties go to the higher confidence, then to
/// the leftmost box. Returns the index into `hands`.
Result<std::size_t> select_pointing_hand(std::span<const BoundingBox> hands);

/// Angles of the ray along -direction, i.e. from the face through the hand.
/// Throws GeometryError for a zero vector. Straight up/down rays get yaw 0.
PointingAngles pointing_angles(const WorldPoint& direction);

/// Intersection of the face->hand ray with Z = 0. Fails with kNoGroundHit
/// unless the ray descends (direction Z >= kMinDescent).
Result<GoalPoint> ground_intersection(const WorldPoint& face, const WorldPoint& hand);
Result<GoalPoint> ground_intersection(const CameraPoint& face, const CameraPoint& hand,
                                      const CameraIntrinsics& intr);

struct EstimatorConfig {
  KeypointStrategy strategy = KeypointStrategy::kMeanDepth;
  RoiParams roi;
};

/// Per-frame output. `estimate` is absent when the frame yields no pointing
/// vector; `reason` explains a missing estimate or a missing goal.
struct FrameEstimate {
  double timestamp = 0.0;
  std::optional<PointingEstimate> estimate;
  std::optional<GoalPoint> goal;
  std::optional<Reason> reason;
};

/// Hand selection, ROI filtering and keypoints, world transform, angles and
/// ground goal for one frame. Never throws for data-dependent failures.
FrameEstimate estimate_frame(const DetectionFrame& frame, const EstimatorConfig& config,
                             const CameraIntrinsics& intr);

}  // namespace pointing
