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

#include "pointing/camera.hpp"

#include <numbers>

namespace pointing {

CameraIntrinsics CameraIntrinsics::default_sensor() {
  CameraIntrinsics intr;
  intr.width = 640;
  intr.height = 480;
  intr.hfov_deg = 68.0;
  intr.fx = 0.5 * intr.width / std::tan(0.5 * intr.hfov_deg * std::numbers::pi / 180.0);
  intr.fy = intr.fx;
  intr.cx = 320.0;
  intr.cy = 240.0;
  intr.camera_height = 1.2;
  return intr;
}

void CameraIntrinsics::validate() const {
  if (!(fx > 0.0) || !(fy > 0.0)) throw GeometryError("intrinsics: focal lengths must be positive");
  if (width <= 0 || height <= 0) throw GeometryError("intrinsics: image size must be positive");
  if (!(cx >= 0.0 && cx < width)) throw GeometryError("intrinsics: cx outside [0, width)");
  if (!(cy >= 0.0 && cy < height)) throw GeometryError("intrinsics: cy outside [0, height)");
  if (!(camera_height > 0.0)) throw GeometryError("intrinsics: camera_height must be positive");
}

CameraPoint deproject(double u, double v, double z, const CameraIntrinsics& intr) {
  if (!(z > 0.0)) throw GeometryError("deproject: non-positive depth");
  return {(u - intr.cx) * z / intr.fx, (v - intr.cy) * z / intr.fy, z};
}

CameraPoint deproject(const DepthSample& sample, const CameraIntrinsics& intr) {
  return deproject(sample.u, sample.v, sample.z, intr);
}

DepthSample project(const CameraPoint& p, const CameraIntrinsics& intr) {
  if (!(p.z > 0.0)) throw GeometryError("project: point behind camera");
  return {intr.fx * p.x / p.z + intr.cx, intr.fy * p.y / p.z + intr.cy, p.z};
}

WorldPoint camera_to_world(const CameraPoint& p, const CameraIntrinsics& intr) {
  return {p.x, p.z, intr.camera_height - p.y};
}

CameraPoint world_to_camera(const WorldPoint& p, const CameraIntrinsics& intr) {
  return {p.x, intr.camera_height - p.z, p.y};
}

}  // namespace pointing
