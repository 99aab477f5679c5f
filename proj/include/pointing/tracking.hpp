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
#include <span>
#include <vector>

#include <Eigen/Core>

#include "pointing/frame.hpp"

namespace pointing {

struct TrackerParams {
  double accel_noise = 200.0;      // px/s^2, white acceleration on the center
  double measurement_noise = 4.0;  // px, per measured coordinate
  double size_noise = 10.0;        // px/sqrt(s), random walk on width/height
  double initial_velocity_std = 100.0;  // px/s
  double gate_min = 30.0;          // px
  double gate_max = 150.0;         // px
  int max_misses = 5;
};

/// Constant-velocity Kalman filter on a bbox.
/// State: [u, v, w, h, du, dv] (center, size, center velocity).
class KalmanBoxFilter {
 public:
  using State = Eigen::Matrix<double, 6, 1>;
  using Covariance = Eigen::Matrix<double, 6, 6>;
  using Measurement = Eigen::Matrix<double, 4, 1>;
  using Gain = Eigen::Matrix<double, 6, 4>;

  KalmanBoxFilter(const BoundingBox& box, const TrackerParams& params);

  void predict(double dt);
  void update(const BoundingBox& box);

  const State& state() const { return x_; }
  const Covariance& covariance() const { return p_; }
  /// Gain used by the most recent update.
  const Gain& last_gain() const { return k_; }

  /// Posterior box; label and confidence come from the last measurement.
  BoundingBox bbox() const;

 private:
  static Measurement measure(const BoundingBox& box);

  TrackerParams params_;
  State x_;
  Covariance p_;
  Gain k_ = Gain::Zero();
  Label label_;
  double confidence_;
};

struct Track {
  int id = 0;
  Label label = Label::kHand;
  KalmanBoxFilter filter;
  int misses = 0;
};

struct SmoothedDetection {
  std::size_t input_index = 0;
  int track_id = 0;
  BoundingBox bbox;
};

/// Association gate radius for a frame interval: 0.5 * width * dt * 4,
/// clamped to [gate_min, gate_max].
double association_gate(double dt, int image_width, const TrackerParams& params);

/// Bank of per-object Kalman filters with greedy nearest-neighbor
/// association. Single-threaded and order dependent: feed frames in time
/// order.
class TrackerBank {
 public:
  TrackerBank(int image_width, TrackerParams params = {});

  /// Predicts every track by dt (> 0), associates detections of the same
  /// label by center distance within the gate, updates matches, spawns tracks
  /// for the rest and retires tracks missing for more than max_misses
  /// frames. Returns one smoothed box per detection, in input order.
  std::vector<SmoothedDetection> step(std::span<const BoundingBox> detections, double dt);

  const std::vector<Track>& tracks() const { return tracks_; }

 private:
  int image_width_;
  TrackerParams params_;
  std::vector<Track> tracks_;
  int next_id_ = 1;
};

/// Runs the bank over a frame's face and hands and replaces each ROI box by
/// its posterior, dropping samples that fall outside the smoothed box.
DetectionFrame smooth_frame(TrackerBank& bank, const DetectionFrame& frame, double dt);

}  // namespace pointing
