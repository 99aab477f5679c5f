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

#include <nlohmann/json.hpp>

#include "pointing/goal_gate.hpp"
#include "pointing/pointing.hpp"

namespace pointing {

// Output stream records (one JSON object per line):
//   estimate: {"t", "face": [x,y,z]|null, "hand": [x,y,z]|null, "pitch_deg"|null,
//              "yaw_deg"|null, "goal": [x,y]|null, "reason": str|null}
//   commit:   {"t", "committed_goal": [x,y], "cov_trace"}

nlohmann::json estimate_record(const FrameEstimate& estimate);
nlohmann::json commit_record(const GoalCommit& commit);

}  // namespace pointing
