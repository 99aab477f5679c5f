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

#include <cmath>
#include <stdexcept>
#include <string>

namespace pointing {

/// Thrown for contract violations in the geometry layer (bad depth, point
/// behind the camera, degenerate direction, invalid intrinsics).
class GeometryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Frame { kCamera, kWorld };

/// Point (or displacement) tagged with its coordinate frame. Arithmetic is
/// only defined between values of the same frame, so mixing camera and world
/// coordinates does not compile.
///
/// Camera frame: x right, y down, z forward along the optical axis.
/// World frame: X right, Y forward, Z up, ground plane at Z = 0.
template <Frame F>
struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  Point3 operator+(const Point3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Point3 operator-(const Point3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Point3 operator*(double s) const { return {x * s, y * s, z * s}; }
  bool operator==(const Point3&) const = default;

  double dot(const Point3& o) const { return x * o.x + y * o.y + z * o.z; }
  Point3 cross(const Point3& o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
  double norm() const { return std::sqrt(dot(*this)); }
};

using CameraPoint = Point3<Frame::kCamera>;
using WorldPoint = Point3<Frame::kWorld>;

/// A single valid depth reading. Pixels without depth are simply absent.
struct DepthSample {
  double u = 0.0;
  double v = 0.0;
  double z = 0.0;  // meters along the optical axis

  bool operator==(const DepthSample&) const = default;
};

/// Pinhole intrinsics of a level-mounted camera plus its mounting height.
struct CameraIntrinsics {
  double fx = 0.0;
  double fy = 0.0;
  double cx = 0.0;
  double cy = 0.0;
  int width = 0;
  int height = 0;
  double camera_height = 0.0;  // meters above the ground plane
  double hfov_deg = 0.0;       // informational

  /// 640x480 sensor with a 68 degree horizontal field of view.
  static CameraIntrinsics default_sensor();

  /// Throws GeometryError naming the first violated invariant.
  void validate() const;
};

/// Pixel + depth to a camera-frame point. Throws on z <= 0.
CameraPoint deproject(const DepthSample& sample, const CameraIntrinsics& intr);
CameraPoint deproject(double u, double v, double z, const CameraIntrinsics& intr);

/// Camera-frame point to pixel + depth. Throws when the point is not in
/// front of the camera.
DepthSample project(const CameraPoint& p, const CameraIntrinsics& intr);

/// Level camera: relabel axes and lift by the mounting height.
WorldPoint camera_to_world(const CameraPoint& p, const CameraIntrinsics& intr);
CameraPoint world_to_camera(const WorldPoint& p, const CameraIntrinsics& intr);

}  // namespace pointing
