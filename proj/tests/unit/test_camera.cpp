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
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "pointing/camera.hpp"

namespace pointing {
namespace {

CameraIntrinsics test_camera() {
  CameraIntrinsics c;
  c.fx = 500.0;
  c.fy = 500.0;
  c.cx = 320.0;
  c.cy = 240.0;
  c.width = 640;
  c.height = 480;
  c.camera_height = 1.0;
  return c;
}

TEST(Intrinsics, DefaultSensorMatchesFieldOfView) {
  const auto c = CameraIntrinsics::default_sensor();
  const double expected_fx = 320.0 / std::tan(34.0 * std::numbers::pi / 180.0);
  EXPECT_NEAR(c.fx, expected_fx, 1e-9);
  EXPECT_DOUBLE_EQ(c.fx, c.fy);
  EXPECT_EQ(c.width, 640);
  EXPECT_EQ(c.height, 480);
  EXPECT_DOUBLE_EQ(c.hfov_deg, 68.0);
  EXPECT_NO_THROW(c.validate());
}

TEST(Intrinsics, ValidateRejectsEachBrokenField) {
  auto c = test_camera();
  c.fx = 0.0;
  EXPECT_THROW(c.validate(), GeometryError);
  c = test_camera();
  c.cx = 640.0;
  EXPECT_THROW(c.validate(), GeometryError);
  c = test_camera();
  c.cy = -1.0;
  EXPECT_THROW(c.validate(), GeometryError);
  c = test_camera();
  c.camera_height = 0.0;
  EXPECT_THROW(c.validate(), GeometryError);
  c = test_camera();
  c.width = 0;
  EXPECT_THROW(c.validate(), GeometryError);
}

TEST(Deproject, PrincipalPointLiesOnOpticalAxis) {
  const auto c = test_camera();
  const auto p = deproject(DepthSample{c.cx, c.cy, 2.0}, c);
  EXPECT_DOUBLE_EQ(p.x, 0.0);
  EXPECT_DOUBLE_EQ(p.y, 0.0);
  EXPECT_DOUBLE_EQ(p.z, 2.0);
}

TEST(Deproject, PinholeArithmetic) {
  const auto c = test_camera();
  const auto p = deproject(820.0, c.cy, 2.0, c);
  EXPECT_DOUBLE_EQ(p.x, 2.0);
  EXPECT_DOUBLE_EQ(p.y, 0.0);
  EXPECT_DOUBLE_EQ(p.z, 2.0);
}

TEST(Deproject, RejectsNonPositiveDepth) {
  const auto c = test_camera();
  EXPECT_THROW(deproject(10.0, 10.0, 0.0, c), GeometryError);
  EXPECT_THROW(deproject(10.0, 10.0, -1.0, c), GeometryError);
  EXPECT_THROW(deproject(10.0, 10.0, std::nan(""), c), GeometryError);
}

TEST(Project, OpticalAxisAndPinhole) {
  const auto c = test_camera();
  const auto s = project(CameraPoint{0.0, 0.0, 2.0}, c);
  EXPECT_DOUBLE_EQ(s.u, c.cx);
  EXPECT_DOUBLE_EQ(s.v, c.cy);
  EXPECT_DOUBLE_EQ(s.z, 2.0);
  EXPECT_DOUBLE_EQ(project(CameraPoint{2.0, 0.0, 2.0}, c).u, 820.0);
  EXPECT_THROW(project(CameraPoint{0.0, 0.0, 0.0}, c), GeometryError);
  EXPECT_THROW(project(CameraPoint{0.0, 0.0, -1.0}, c), GeometryError);
}

TEST(Project, RoundTripsWithDeproject) {
  const auto c = CameraIntrinsics::default_sensor();
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, c.width), v(0.0, c.height), z(0.1, 10.0);
  for (int i = 0; i < 1000; ++i) {
    const DepthSample s{u(rng), v(rng), z(rng)};
    const auto back = project(deproject(s, c), c);
    ASSERT_NEAR(back.u, s.u, 1e-9);
    ASSERT_NEAR(back.v, s.v, 1e-9);
    ASSERT_NEAR(back.z, s.z, 1e-9);

    const CameraPoint p = deproject(s, c);
    const auto again = deproject(project(p, c), c);
    ASSERT_NEAR(again.x, p.x, 1e-9);
    ASSERT_NEAR(again.y, p.y, 1e-9);
    ASSERT_NEAR(again.z, p.z, 1e-9);
  }
}

TEST(CameraToWorld, AxisRelabeling) {
  const auto c = test_camera();
  EXPECT_EQ(camera_to_world(CameraPoint{0.0, 0.0, 3.0}, c), (WorldPoint{0.0, 3.0, 1.0}));
  EXPECT_DOUBLE_EQ(camera_to_world(CameraPoint{0.0, 1.0, 0.0}, c).z, 0.0);
  const auto w = camera_to_world(CameraPoint{0.5, -0.2, 2.0}, c);
  EXPECT_DOUBLE_EQ(w.x, 0.5);
  EXPECT_DOUBLE_EQ(w.y, 2.0);
  EXPECT_DOUBLE_EQ(w.z, 1.2);
}

TEST(CameraToWorld, RigidAndInvertible) {
  const auto c = CameraIntrinsics::default_sensor();
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> d(-5.0, 5.0);
  for (int i = 0; i < 1000; ++i) {
    const CameraPoint a{d(rng), d(rng), d(rng)};
    const CameraPoint b{d(rng), d(rng), d(rng)};
    const auto wa = camera_to_world(a, c);
    const auto wb = camera_to_world(b, c);
    ASSERT_NEAR((wa - wb).norm(), (a - b).norm(), 1e-12);
    const auto back = world_to_camera(wa, c);
    ASSERT_NEAR(back.x, a.x, 1e-12);
    ASSERT_NEAR(back.y, a.y, 1e-12);
    ASSERT_NEAR(back.z, a.z, 1e-12);
  }
}

TEST(Point3, VectorAlgebra) {
  const WorldPoint a{1.0, 0.0, 0.0};
  const WorldPoint b{0.0, 1.0, 0.0};
  EXPECT_EQ(a.cross(b), (WorldPoint{0.0, 0.0, 1.0}));
  EXPECT_DOUBLE_EQ(a.dot(b), 0.0);
  EXPECT_DOUBLE_EQ((a * 3.0 + b * 4.0).norm(), 5.0);
}

}  // namespace
}  // namespace pointing
