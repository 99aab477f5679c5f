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

#include "pointing/pointing.hpp"

#include <cmath>
#include <numbers>

namespace pointing {

std::string_view to_string(Reason reason) {
  switch (reason) {
    case Reason::kNoFace: return "no_face";
    case Reason::kNoHand: return "no_hand";
    case Reason::kEmptyRoi: return "empty_roi";
    case Reason::kNoCluster: return "no_cluster";
    case Reason::kNoGroundHit: return "no_ground_hit";
  }
  return "unknown";
}

Result<std::size_t> select_pointing_hand(std::span<const BoundingBox> hands) {
  if (hands.empty()) return Reason::kNoHand;
  std::size_t best = 0;
  for (std::size_t i = 1; i < hands.size(); ++i) {
    const auto& a = hands[i];
    const auto& b = hands[best];
    if (a.v_min != b.v_min) {
      if (a.v_min < b.v_min) best = i;
    } else if (a.confidence != b.confidence) {
      if (a.confidence > b.confidence) best = i;
    } else if (a.u_min < b.u_min) {
      best = i;
    }
  }
  return best;
}

PointingAngles pointing_angles(const WorldPoint& direction) {
  if (direction.norm() == 0.0) throw GeometryError("pointing_angles: zero direction");
  constexpr double kDeg = 180.0 / std::numbers::pi;
  const WorldPoint ray = direction * -1.0;
  const double horizontal = std::hypot(ray.x, ray.y);

  PointingAngles out;
  out.pitch_deg = std::atan2(-ray.z, horizontal) * kDeg;
  if (horizontal > 0.0) {
    out.yaw_deg = std::atan2(ray.x, ray.y) * kDeg;
    if (out.yaw_deg <= -180.0) out.yaw_deg = 180.0;
  }
  return out;
}

Result<GoalPoint> ground_intersection(const WorldPoint& face, const WorldPoint& hand) {
  const WorldPoint p = face - hand;
  if (!(p.z >= kMinDescent)) return Reason::kNoGroundHit;
  const double t = face.z / p.z;
  return GoalPoint{face.x - t * p.x, face.y - t * p.y};
}

Result<GoalPoint> ground_intersection(const CameraPoint& face, const CameraPoint& hand,
                                      const CameraIntrinsics& intr) {
  return ground_intersection(camera_to_world(face, intr), camera_to_world(hand, intr));
}

FrameEstimate estimate_frame(const DetectionFrame& frame, const EstimatorConfig& config,
                             const CameraIntrinsics& intr) {
  FrameEstimate out;
  out.timestamp = frame.timestamp;
  auto fail = [&out](Reason r) {
    out.reason = r;
    return out;
  };

  if (!frame.face) return fail(Reason::kNoFace);
  if (frame.hands.empty()) return fail(Reason::kNoHand);

  std::vector<BoundingBox> hand_boxes;
  hand_boxes.reserve(frame.hands.size());
  for (const auto& h : frame.hands) hand_boxes.push_back(h.source_bbox);
  const auto hand_index = select_pointing_hand(hand_boxes);
  if (!hand_index) return fail(hand_index.reason());

  auto keypoint = [&](const RoiPointSet& roi) -> Result<CameraPoint> {
    const BoundingBox box = roi.source_bbox.clamped(intr);
    if (!box.valid()) return Reason::kEmptyRoi;
    return locate_keypoint(box == roi.source_bbox ? roi : roi.restricted_to(box),
                           config.strategy, config.roi, intr);
  };
  const auto face_cam = keypoint(*frame.face);
  if (!face_cam) return fail(face_cam.reason());
  const auto hand_cam = keypoint(frame.hands[*hand_index]);
  if (!hand_cam) return fail(hand_cam.reason());

  PointingEstimate est;
  est.timestamp = frame.timestamp;
  est.face_kp = camera_to_world(*face_cam, intr);
  est.hand_kp = camera_to_world(*hand_cam, intr);
  est.direction = est.face_kp - est.hand_kp;
  est.strategy = config.strategy;
  if (est.direction.norm() == 0.0) return fail(Reason::kNoGroundHit);
  const auto angles = pointing_angles(est.direction);
  est.pitch_deg = angles.pitch_deg;
  est.yaw_deg = angles.yaw_deg;
  out.estimate = est;

  const auto goal = ground_intersection(est.face_kp, est.hand_kp);
  if (goal) {
    out.goal = *goal;
  } else {
    out.reason = goal.reason();
  }
  return out;
}

}  // namespace pointing
