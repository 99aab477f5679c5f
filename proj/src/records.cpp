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

#include "pointing/records.hpp"

namespace pointing {

using nlohmann::json;

json estimate_record(const FrameEstimate& e) {
  json j;
  j["t"] = e.timestamp;
  if (e.estimate) {
    const auto& p = *e.estimate;
    j["face"] = {p.face_kp.x, p.face_kp.y, p.face_kp.z};
    j["hand"] = {p.hand_kp.x, p.hand_kp.y, p.hand_kp.z};
    j["pitch_deg"] = p.pitch_deg;
    j["yaw_deg"] = p.yaw_deg;
  } else {
    j["face"] = nullptr;
    j["hand"] = nullptr;
    j["pitch_deg"] = nullptr;
    j["yaw_deg"] = nullptr;
  }
  j["goal"] = e.goal ? json{e.goal->x, e.goal->y} : json(nullptr);
  j["reason"] = e.reason ? json(std::string(to_string(*e.reason))) : json(nullptr);
  return j;
}

json commit_record(const GoalCommit& c) {
  return {{"t", c.timestamp}, {"committed_goal", {c.goal.x, c.goal.y}}, {"cov_trace", c.cov_trace}};
}

}  // namespace pointing
