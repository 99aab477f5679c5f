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

#include "pointing/frame.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

namespace pointing {

using nlohmann::json;

std::string_view to_string(Label label) {
  return label == Label::kFace ? "face" : "hand";
}

BoundingBox BoundingBox::clamped(const CameraIntrinsics& intr) const {
  BoundingBox out = *this;
  out.u_min = std::clamp(u_min, 0.0, static_cast<double>(intr.width));
  out.u_max = std::clamp(u_max, 0.0, static_cast<double>(intr.width));
  out.v_min = std::clamp(v_min, 0.0, static_cast<double>(intr.height));
  out.v_max = std::clamp(v_max, 0.0, static_cast<double>(intr.height));
  return out;
}

RoiPointSet RoiPointSet::restricted_to(const BoundingBox& bbox) const {
  RoiPointSet out{bbox, {}};
  out.samples.reserve(samples.size());
  for (const auto& s : samples) {
    if (bbox.contains(s.u, s.v)) out.samples.push_back(s);
  }
  return out;
}

namespace {

double finite_number(const json& j, const char* what) {
  if (!j.is_number()) throw FrameFormatError(std::string(what) + ": expected a number");
  const double value = j.get<double>();
  if (!std::isfinite(value)) throw FrameFormatError(std::string(what) + ": not finite");
  return value;
}

RoiPointSet roi_from_json(const json& j, Label label) {
  if (!j.is_object()) throw FrameFormatError("roi: expected an object");
  const auto bbox_it = j.find("bbox");
  const auto conf_it = j.find("conf");
  const auto samples_it = j.find("samples");
  if (bbox_it == j.end() || conf_it == j.end() || samples_it == j.end()) {
    throw FrameFormatError("roi: requires bbox, conf and samples");
  }
  if (!bbox_it->is_array() || bbox_it->size() != 4) {
    throw FrameFormatError("roi: bbox must be [u0, v0, u1, v1]");
  }

  RoiPointSet roi;
  auto& box = roi.source_bbox;
  box.u_min = finite_number((*bbox_it)[0], "bbox");
  box.v_min = finite_number((*bbox_it)[1], "bbox");
  box.u_max = finite_number((*bbox_it)[2], "bbox");
  box.v_max = finite_number((*bbox_it)[3], "bbox");
  box.label = label;
  box.confidence = finite_number(*conf_it, "conf");
  if (!box.valid()) throw FrameFormatError("roi: degenerate bbox");
  if (box.confidence < 0.0 || box.confidence > 1.0) {
    throw FrameFormatError("roi: conf outside [0, 1]");
  }

  if (!samples_it->is_array()) throw FrameFormatError("roi: samples must be an array");
  roi.samples.reserve(samples_it->size());
  for (const auto& s : *samples_it) {
    if (!s.is_array() || s.size() != 3) throw FrameFormatError("sample: expected [u, v, z]");
    DepthSample sample{finite_number(s[0], "sample"), finite_number(s[1], "sample"),
                       finite_number(s[2], "sample")};
    if (!(sample.z > 0.0)) throw FrameFormatError("sample: depth must be positive");
    if (!box.contains(sample.u, sample.v)) throw FrameFormatError("sample: outside its bbox");
    roi.samples.push_back(sample);
  }
  return roi;
}

json roi_to_json(const RoiPointSet& roi) {
  const auto& b = roi.source_bbox;
  json samples = json::array();
  for (const auto& s : roi.samples) samples.push_back({s.u, s.v, s.z});
  return {{"bbox", {b.u_min, b.v_min, b.u_max, b.v_max}},
          {"conf", b.confidence},
          {"samples", std::move(samples)}};
}

}  // namespace

DetectionFrame frame_from_json(const json& j) {
  if (!j.is_object()) throw FrameFormatError("frame: expected an object");
  const auto t_it = j.find("t");
  const auto face_it = j.find("face");
  const auto hands_it = j.find("hands");
  if (t_it == j.end() || face_it == j.end() || hands_it == j.end()) {
    throw FrameFormatError("frame: requires t, face and hands");
  }

  DetectionFrame frame;
  frame.timestamp = finite_number(*t_it, "t");
  if (!face_it->is_null()) frame.face = roi_from_json(*face_it, Label::kFace);
  if (!hands_it->is_array()) throw FrameFormatError("frame: hands must be an array");
  for (const auto& h : *hands_it) frame.hands.push_back(roi_from_json(h, Label::kHand));
  return frame;
}

json frame_to_json(const DetectionFrame& frame) {
  json hands = json::array();
  for (const auto& h : frame.hands) hands.push_back(roi_to_json(h));
  json j;
  j["t"] = frame.timestamp;
  j["face"] = frame.face ? roi_to_json(*frame.face) : json(nullptr);
  j["hands"] = std::move(hands);
  return j;
}

DetectionFrame parse_frame_line(std::string_view line) {
  json j = json::parse(line.begin(), line.end(), nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw FrameFormatError("frame: invalid JSON");
  return frame_from_json(j);
}

std::string format_frame_line(const DetectionFrame& frame) {
  return frame_to_json(frame).dump();
}

bool TimestampValidator::accept(double t) {
  if (last_ && !(t > *last_)) return false;
  last_ = t;
  return true;
}

}  // namespace pointing
