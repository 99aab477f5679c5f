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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "oracles/oracles.hpp"
#include "pointing/pointing.hpp"

namespace pointing {
namespace {

BoundingBox hand_box(double u0, double v0, double conf = 0.9) {
  return {u0, v0, u0 + 40.0, v0 + 40.0, Label::kHand, conf};
}

TEST(SelectPointingHand, TopmostWins) {
  const std::vector<BoundingBox> hands{hand_box(100, 300), hand_box(300, 120)};
  EXPECT_EQ(*select_pointing_hand(hands), 1u);
}

TEST(SelectPointingHand, SingleHand) {
  const std::vector<BoundingBox> hands{hand_box(10, 10)};
  EXPECT_EQ(*select_pointing_hand(hands), 0u);
}

TEST(SelectPointingHand, TiesByConfidenceThenLeftmost) {
  const std::vector<BoundingBox> conf{hand_box(100, 50, 0.7), hand_box(200, 50, 0.9)};
  EXPECT_EQ(*select_pointing_hand(conf), 1u);
  const std::vector<BoundingBox> left{hand_box(200, 50), hand_box(100, 50)};
  EXPECT_EQ(*select_pointing_hand(left), 1u);
}

TEST(SelectPointingHand, NoHands) {
  EXPECT_EQ(select_pointing_hand({}).reason(), Reason::kNoHand);
}

TEST(PointingAngles, Examples) {
  // Face above hand and behind it: the ray goes forward and down.
  auto a = pointing_angles(WorldPoint{0.0, -1.0, 1.0});
  EXPECT_NEAR(a.yaw_deg, 0.0, 1e-12);
  EXPECT_NEAR(a.pitch_deg, 45.0, 1e-12);

  a = pointing_angles(WorldPoint{-1.0, -1.0, 0.0});
  EXPECT_NEAR(a.yaw_deg, 45.0, 1e-12);
  EXPECT_NEAR(a.pitch_deg, 0.0, 1e-12);

  a = pointing_angles(WorldPoint{0.0, 0.0, 1.0});
  EXPECT_DOUBLE_EQ(a.pitch_deg, 90.0);
  EXPECT_DOUBLE_EQ(a.yaw_deg, 0.0);

  a = pointing_angles(WorldPoint{0.0, 1.0, 0.0});
  EXPECT_DOUBLE_EQ(a.yaw_deg, 180.0);
  a = pointing_angles(WorldPoint{1e-300, 1.0, 0.0});
  EXPECT_GT(a.yaw_deg, -180.0);
  EXPECT_LE(a.yaw_deg, 180.0);

  EXPECT_THROW(pointing_angles(WorldPoint{}), GeometryError);
}

TEST(PointingAngles, ScaleInvariantAndBounded) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> d(-2.0, 2.0), k(1e-3, 1e3);
  for (int i = 0; i < 2000; ++i) {
    const WorldPoint p{d(rng), d(rng), d(rng)};
    const auto a = pointing_angles(p);
    const auto b = pointing_angles(p * k(rng));
    EXPECT_NEAR(a.pitch_deg, b.pitch_deg, 1e-9);
    EXPECT_NEAR(a.yaw_deg, b.yaw_deg, 1e-9);
    EXPECT_LE(std::abs(a.pitch_deg), 90.0);
    EXPECT_GT(a.yaw_deg, -180.0);
    EXPECT_LE(a.yaw_deg, 180.0);
  }
}

TEST(GroundIntersection, WorkedExample) {
  const auto g = ground_intersection(WorldPoint{0.0, 0.0, 1.6}, WorldPoint{0.0, 0.3, 1.2});
  ASSERT_TRUE(g.ok());
  EXPECT_NEAR(g->x, 0.0, 1e-12);
  EXPECT_NEAR(g->y, 1.2, 1e-12);
}

TEST(GroundIntersection, VerticalAndAscendingRays) {
  const auto g = ground_intersection(WorldPoint{0.4, 2.0, 1.6}, WorldPoint{0.4, 2.0, 1.1});
  ASSERT_TRUE(g.ok());
  EXPECT_DOUBLE_EQ(g->x, 0.4);
  EXPECT_DOUBLE_EQ(g->y, 2.0);
  EXPECT_EQ(ground_intersection(WorldPoint{0, 0, 1.2}, WorldPoint{0, 0.3, 1.5}).reason(),
            Reason::kNoGroundHit);
  EXPECT_EQ(ground_intersection(WorldPoint{0, 0, 1.2}, WorldPoint{0, 0.3, 1.2}).reason(),
            Reason::kNoGroundHit);
  EXPECT_EQ(ground_intersection(WorldPoint{0, 0, 1.2}, WorldPoint{0, 0.3, 1.2 - 1e-7}).reason(),
            Reason::kNoGroundHit);
}

TEST(GroundIntersection, CameraFrameOverloadAppliesHeight) {
  auto c = CameraIntrinsics::default_sensor();
  c.camera_height = 1.0;
  // Camera frame y is down: face 0.6 m above the optical axis, hand 0.2 m above.
  const auto g = ground_intersection(CameraPoint{0.0, -0.6, 2.0}, CameraPoint{0.0, -0.2, 2.3}, c);
  ASSERT_TRUE(g.ok());
  EXPECT_NEAR(g->y, 2.0 + 0.3 * 4.0, 1e-12);
}

TEST(GroundIntersection, MatchesParametricOracle) {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> xy(-3.0, 3.0), face_z(1.0, 2.0), drop(0.05, 0.8);
  for (int i = 0; i < 10000; ++i) {
    const WorldPoint face{xy(rng), xy(rng) + 4.0, face_z(rng)};
    const WorldPoint hand{face.x + 0.3 * xy(rng), face.y + 0.3 * xy(rng), face.z - drop(rng)};
    const auto g = ground_intersection(face, hand);
    const auto want = oracle::ray_plane({face.x, face.y, face.z}, {hand.x, hand.y, hand.z});
    ASSERT_TRUE(g.ok());
    ASSERT_TRUE(want.has_value());
    ASSERT_NEAR(g->x, want->x, 1e-9);
    ASSERT_NEAR(g->y, want->y, 1e-9);
    ASSERT_LT(oracle::line_residual({g->x, g->y, 0.0}, {face.x, face.y, face.z},
                                    {hand.x, hand.y, hand.z}),
              1e-9);
  }
}

TEST(GroundIntersection, HorizontalTranslationMovesGoal) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> d(-2.0, 2.0);
  for (int i = 0; i < 1000; ++i) {
    const WorldPoint face{d(rng), 3.0 + d(rng), 1.6};
    const WorldPoint hand{face.x + 0.2 * d(rng), face.y + 0.2 * d(rng), 1.3};
    const WorldPoint shift{d(rng), d(rng), 0.0};
    const auto a = ground_intersection(face, hand);
    const auto b = ground_intersection(face + shift, hand + shift);
    EXPECT_NEAR(b->x - a->x, shift.x, 1e-12);
    EXPECT_NEAR(b->y - a->y, shift.y, 1e-12);
  }
}

// ---------------------------------------------------------------------------
// estimate_frame

RoiPointSet dense_roi(const CameraPoint& center, Label label, const CameraIntrinsics& c) {
  const auto px = project(center, c);
  RoiPointSet roi{{px.u - 10, px.v - 10, px.u + 10, px.v + 10, label, 0.9}, {}};
  for (int du = -3; du <= 3; ++du) {
    for (int dv = -3; dv <= 3; ++dv) roi.samples.push_back({px.u + du, px.v + dv, center.z});
  }
  return roi;
}

TEST(EstimateFrame, FailureReasons) {
  const auto c = CameraIntrinsics::default_sensor();
  const EstimatorConfig cfg;
  DetectionFrame f;
  f.timestamp = 1.0;
  EXPECT_EQ(estimate_frame(f, cfg, c).reason, Reason::kNoFace);
  f.face = dense_roi(CameraPoint{0.0, -0.4, 3.0}, Label::kFace, c);
  EXPECT_EQ(estimate_frame(f, cfg, c).reason, Reason::kNoHand);

  f.hands.push_back({{100, 100, 120, 120, Label::kHand, 0.9}, {}});
  EXPECT_EQ(estimate_frame(f, cfg, c).reason, Reason::kEmptyRoi);

  // Only scattered background depths: DBSCAN finds nothing dense.
  f.hands[0].samples = {{105, 105, 2.0}, {110, 110, 3.0}, {115, 115, 4.0}};
  EstimatorConfig db;
  db.strategy = KeypointStrategy::kDbscanCluster;
  const auto r = estimate_frame(f, db, c);
  EXPECT_FALSE(r.estimate.has_value());
  EXPECT_EQ(r.reason, Reason::kNoCluster);
}

TEST(EstimateFrame, RecoversExactGeometry) {
  const auto c = CameraIntrinsics::default_sensor();
  const CameraPoint face{0.1, -0.4, 3.0};
  const CameraPoint hand{0.3, -0.2, 2.6};
  DetectionFrame f;
  f.timestamp = 0.5;
  f.face = dense_roi(face, Label::kFace, c);
  f.hands = {dense_roi(CameraPoint{-0.2, 0.4, 3.0}, Label::kHand, c),
             dense_roi(hand, Label::kHand, c)};
  for (auto s : kAllStrategies) {
    EstimatorConfig cfg;
    cfg.strategy = s;
    const auto r = estimate_frame(f, cfg, c);
    ASSERT_TRUE(r.estimate.has_value()) << to_string(s);
    const auto& e = *r.estimate;
    const auto wf = camera_to_world(face, c);
    const auto wh = camera_to_world(hand, c);
    EXPECT_NEAR((e.face_kp - wf).norm(), 0.0, 1e-12);
    EXPECT_NEAR((e.hand_kp - wh).norm(), 0.0, 1e-12);
    EXPECT_EQ(e.direction, e.face_kp - e.hand_kp);
    EXPECT_EQ(e.strategy, s);
    ASSERT_TRUE(r.goal.has_value());
    EXPECT_FALSE(r.reason.has_value());
    const auto want = ground_intersection(wf, wh);
    EXPECT_NEAR(r.goal->x, want->x, 1e-9);
    EXPECT_NEAR(r.goal->y, want->y, 1e-9);
  }
}

TEST(EstimateFrame, LevelPointingHasEstimateButNoGoal) {
  const auto c = CameraIntrinsics::default_sensor();
  DetectionFrame f;
  f.face = dense_roi(CameraPoint{0.0, -0.4, 3.0}, Label::kFace, c);
  f.hands = {dense_roi(CameraPoint{0.0, -0.5, 2.6}, Label::kHand, c)};
  const auto r = estimate_frame(f, EstimatorConfig{}, c);
  ASSERT_TRUE(r.estimate.has_value());
  EXPECT_FALSE(r.goal.has_value());
  EXPECT_EQ(r.reason, Reason::kNoGroundHit);
  EXPECT_LT(r.estimate->pitch_deg, 0.0);
}

TEST(EstimateFrame, BoxOutsideImageIsEmpty) {
  const auto c = CameraIntrinsics::default_sensor();
  DetectionFrame f;
  f.face = dense_roi(CameraPoint{0.0, -0.4, 3.0}, Label::kFace, c);
  f.hands = {{{700, 10, 720, 30, Label::kHand, 0.9}, {{710, 20, 2.0}}}};
  EXPECT_EQ(estimate_frame(f, EstimatorConfig{}, c).reason, Reason::kEmptyRoi);
}

TEST(EstimateFrame, Deterministic) {
  const auto c = CameraIntrinsics::default_sensor();
  DetectionFrame f;
  f.face = dense_roi(CameraPoint{0.1, -0.4, 3.0}, Label::kFace, c);
  f.hands = {dense_roi(CameraPoint{0.3, -0.2, 2.6}, Label::kHand, c)};
  const auto a = estimate_frame(f, EstimatorConfig{}, c);
  const auto b = estimate_frame(f, EstimatorConfig{}, c);
  EXPECT_EQ(a.estimate->face_kp, b.estimate->face_kp);
  EXPECT_EQ(a.estimate->hand_kp, b.estimate->hand_kp);
  EXPECT_EQ(a.goal->x, b.goal->x);
  EXPECT_EQ(a.goal->y, b.goal->y);
}

}  // namespace
}  // namespace pointing
