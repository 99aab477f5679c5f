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
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "pointing/camera.hpp"

namespace pointing {

enum class Label { kFace, kHand };

std::string_view to_string(Label label);

struct BoundingBox {
  double u_min = 0.0;
  double v_min = 0.0;
  double u_max = 0.0;
  double v_max = 0.0;
  Label label = Label::kHand;
  double confidence = 1.0;

  double width() const { return u_max - u_min; }
  double height() const { return v_max - v_min; }
  double center_u() const { return 0.5 * (u_min + u_max); }
  double center_v() const { return 0.5 * (v_min + v_max); }

  bool valid() const { return u_min < u_max && v_min < v_max; }
  bool contains(double u, double v) const {
    return u >= u_min && u <= u_max && v >= v_min && v <= v_max;
  }

  /// Intersection with the image rectangle [0, width] x [0, height]. The
  /// result may be invalid when the box lies entirely outside the image.
  BoundingBox clamped(const CameraIntrinsics& intr) const;

  bool operator==(const BoundingBox&) const = default;
};

/// Depth samples belonging to one detected region, all inside source_bbox.
struct RoiPointSet {
  BoundingBox source_bbox;
  std::vector<DepthSample> samples;

  Label label() const { return source_bbox.label; }

  /// Copy restricted to `bbox`, dropping samples that fall outside it.
  RoiPointSet restricted_to(const BoundingBox& bbox) const;

  bool operator==(const RoiPointSet&) const = default;
};

/// One timestamped detector output: optional face plus any number of hands.
struct DetectionFrame {
  double timestamp = 0.0;
  std::optional<RoiPointSet> face;
  std::vector<RoiPointSet> hands;

  bool operator==(const DetectionFrame&) const = default;
};

/// Malformed frame record (bad JSON, missing field, sample outside its box).
class FrameFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Line-delimited JSON frame format:
//   {"t": 1.25,
//    "face": {"bbox": [u0, v0, u1, v1], "conf": 0.9, "samples": [[u, v, z], ...]} | null,
//    "hands": [ <same shape as face>, ... ]}

DetectionFrame frame_from_json(const nlohmann::json& j);
nlohmann::json frame_to_json(const DetectionFrame& frame);

/// Parses one line of a frame log. Throws FrameFormatError.
DetectionFrame parse_frame_line(std::string_view line);
std::string format_frame_line(const DetectionFrame& frame);

/// Enforces strictly increasing timestamps within one stream.
class TimestampValidator {
 public:
  /// Returns false (and keeps the previous watermark) for a non-increasing t.
  bool accept(double t);
  std::optional<double> last() const { return last_; }

 private:
  std::optional<double> last_;
};

}  // namespace pointing
