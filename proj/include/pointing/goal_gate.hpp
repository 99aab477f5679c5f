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

#include <cstddef>
#include <deque>
#include <optional>

#include "pointing/pointing.hpp"

namespace pointing {

enum class GateMode {
  kGoal,       // trace of the (x, y) goal covariance, m^2
  kDirection,  // trace of the (pitch, yaw) covariance, deg^2
};

struct GateParams {
  std::size_t window = 30;
  double horizon_s = 1.0;
  double tau = 0.01;       // m^2
  double tau_angle = 4.0;  // deg^2
  GateMode mode = GateMode::kGoal;
};

struct GoalObservation {
  GoalPoint goal;
  double pitch_deg = 0.0;
  double yaw_deg = 0.0;
};

struct GoalCommit {
  double timestamp = 0.0;
  GoalPoint goal;    // mean of the committed window
  double cov_trace = 0.0;
};

/// Sliding window of recent goal points that commits their mean once the
/// window is full and its sample covariance is tight enough. Single caller,
/// timestamps in increasing order.
class GoalWindow {
 public:
  explicit GoalWindow(GateParams params = {}) : params_(params) {}

  /// Evicts entries older than the horizon, appends `observation` when
  /// present and commits (clearing the window) when it holds exactly
  /// `window` entries whose covariance trace is below the threshold.
  std::optional<GoalCommit> push(double t, const std::optional<GoalObservation>& observation);

  std::size_t size() const { return entries_.size(); }
  /// Trace of the unbiased sample covariance for the active gate mode; 0 for
  /// fewer than two entries.
  double covariance_trace() const;
  const GateParams& params() const { return params_; }

 private:
  struct Entry {
    double t;
    GoalObservation obs;
  };

  GateParams params_;
  std::deque<Entry> entries_;
};

}  // namespace pointing
