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

#include "pointing/goal_gate.hpp"

#include <cmath>

namespace pointing {

namespace {

double wrap_deg(double a) {
  a = std::remainder(a, 360.0);
  return a <= -180.0 ? a + 360.0 : a;
}

template <typename Get>
double sample_variance(const auto& entries, Get get) {
  const double n = static_cast<double>(entries.size());
  double mean = 0.0;
  for (const auto& e : entries) mean += get(e);
  mean /= n;
  double ss = 0.0;
  for (const auto& e : entries) {
    const double d = get(e) - mean;
    ss += d * d;
  }
  return ss / (n - 1.0);
}

}  // namespace

double GoalWindow::covariance_trace() const {
  if (entries_.size() < 2) return 0.0;
  if (params_.mode == GateMode::kGoal) {
    return sample_variance(entries_, [](const Entry& e) { return e.obs.goal.x; }) +
           sample_variance(entries_, [](const Entry& e) { return e.obs.goal.y; });
  }
  const double yaw0 = entries_.front().obs.yaw_deg;
  return sample_variance(entries_, [](const Entry& e) { return e.obs.pitch_deg; }) +
         sample_variance(entries_,
                         [yaw0](const Entry& e) { return wrap_deg(e.obs.yaw_deg - yaw0); });
}

std::optional<GoalCommit> GoalWindow::push(double t,
                                           const std::optional<GoalObservation>& observation) {
  while (!entries_.empty() && t - entries_.front().t > params_.horizon_s) entries_.pop_front();
  if (observation) {
    entries_.push_back({t, *observation});
    while (entries_.size() > params_.window) entries_.pop_front();
  }
  if (entries_.size() != params_.window) return std::nullopt;

  const double trace = covariance_trace();
  const double tau = params_.mode == GateMode::kGoal ? params_.tau : params_.tau_angle;
  if (!(trace < tau)) return std::nullopt;

  GoalCommit commit{t, {}, trace};
  for (const auto& e : entries_) {
    commit.goal.x += e.obs.goal.x;
    commit.goal.y += e.obs.goal.y;
  }
  commit.goal.x /= static_cast<double>(entries_.size());
  commit.goal.y /= static_cast<double>(entries_.size());
  entries_.clear();
  return commit;
}

}  // namespace pointing
