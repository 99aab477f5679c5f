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

#include "pointing/tracking.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include <Eigen/Dense>

namespace pointing {

namespace {

using Matrix46 = Eigen::Matrix<double, 4, 6>;

Matrix46 observation() {
  Matrix46 h = Matrix46::Zero();
  h.block<4, 4>(0, 0).setIdentity();
  return h;
}

}  // namespace

KalmanBoxFilter::KalmanBoxFilter(const BoundingBox& box, const TrackerParams& params)
    : params_(params), label_(box.label), confidence_(box.confidence) {
  x_.setZero();
  x_.head<4>() = measure(box);
  const double r = params.measurement_noise * params.measurement_noise;
  const double v = params.initial_velocity_std * params.initial_velocity_std;
  p_ = Covariance::Zero();
  p_.diagonal() << r, r, r, r, v, v;
}

KalmanBoxFilter::Measurement KalmanBoxFilter::measure(const BoundingBox& box) {
  return {box.center_u(), box.center_v(), box.width(), box.height()};
}

void KalmanBoxFilter::predict(double dt) {
  Covariance f = Covariance::Identity();
  f(0, 4) = dt;
  f(1, 5) = dt;

  // Discrete white-noise acceleration for each center axis.
  const double qa = params_.accel_noise * params_.accel_noise;
  const double dt2 = dt * dt;
  Covariance q = Covariance::Zero();
  for (int axis = 0; axis < 2; ++axis) {
    q(axis, axis) = 0.25 * dt2 * dt2 * qa;
    q(axis, axis + 4) = q(axis + 4, axis) = 0.5 * dt2 * dt * qa;
    q(axis + 4, axis + 4) = dt2 * qa;
  }
  const double qs = params_.size_noise * params_.size_noise * dt;
  q(2, 2) = qs;
  q(3, 3) = qs;

  x_ = f * x_;
  p_ = f * p_ * f.transpose() + q;
  p_ = 0.5 * (p_ + p_.transpose());
}

void KalmanBoxFilter::update(const BoundingBox& box) {
  static const Matrix46 h = observation();
  const double r_var = params_.measurement_noise * params_.measurement_noise;
  const Eigen::Matrix4d r = Eigen::Matrix4d::Identity() * r_var;

  const Eigen::Matrix4d s = h * p_ * h.transpose() + r;
  k_ = p_ * h.transpose() * s.inverse();
  x_ += k_ * (measure(box) - h * x_);

  // Joseph form keeps the covariance symmetric positive semi-definite.
  const Covariance a = Covariance::Identity() - k_ * h;
  p_ = a * p_ * a.transpose() + k_ * r * k_.transpose();
  p_ = 0.5 * (p_ + p_.transpose());

  label_ = box.label;
  confidence_ = box.confidence;
}

BoundingBox KalmanBoxFilter::bbox() const {
  const double w = std::max(x_(2), 1e-3);
  const double hgt = std::max(x_(3), 1e-3);
  return {x_(0) - 0.5 * w, x_(1) - 0.5 * hgt, x_(0) + 0.5 * w, x_(1) + 0.5 * hgt,
          label_, confidence_};
}

double association_gate(double dt, int image_width, const TrackerParams& params) {
  return std::clamp(0.5 * image_width * dt * 4.0, params.gate_min, params.gate_max);
}

TrackerBank::TrackerBank(int image_width, TrackerParams params)
    : image_width_(image_width), params_(params) {}

std::vector<SmoothedDetection> TrackerBank::step(std::span<const BoundingBox> detections,
                                                 double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("TrackerBank::step: dt must be positive");

  for (auto& track : tracks_) track.filter.predict(dt);

  // Canonical detection order makes the result independent of input order.
  std::vector<std::size_t> canon(detections.size());
  std::iota(canon.begin(), canon.end(), std::size_t{0});
  auto key = [&](std::size_t i) {
    const auto& d = detections[i];
    return std::make_tuple(d.label, d.u_min, d.v_min, d.u_max, d.v_max, d.confidence, i);
  };
  std::sort(canon.begin(), canon.end(),
            [&](std::size_t a, std::size_t b) { return key(a) < key(b); });

  struct Candidate {
    double distance;
    int track_id;
    std::size_t track_pos;
    std::size_t canon_pos;
  };
  const double gate = association_gate(dt, image_width_, params_);
  std::vector<Candidate> candidates;
  for (std::size_t t = 0; t < tracks_.size(); ++t) {
    const auto& state = tracks_[t].filter.state();
    for (std::size_t c = 0; c < canon.size(); ++c) {
      const auto& d = detections[canon[c]];
      if (d.label != tracks_[t].label) continue;
      const double dist = std::hypot(d.center_u() - state(0), d.center_v() - state(1));
      if (dist <= gate) candidates.push_back({dist, tracks_[t].id, t, c});
    }
  }
  std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
    return std::tie(a.distance, a.track_id, a.canon_pos) <
           std::tie(b.distance, b.track_id, b.canon_pos);
  });

  std::vector<bool> track_taken(tracks_.size(), false);
  std::vector<bool> det_taken(canon.size(), false);
  std::vector<SmoothedDetection> out(detections.size());
  for (const auto& c : candidates) {
    if (track_taken[c.track_pos] || det_taken[c.canon_pos]) continue;
    track_taken[c.track_pos] = true;
    det_taken[c.canon_pos] = true;
    auto& track = tracks_[c.track_pos];
    const std::size_t input = canon[c.canon_pos];
    track.filter.update(detections[input]);
    track.misses = 0;
    out[input] = {input, track.id, track.filter.bbox()};
  }

  for (std::size_t t = 0; t < tracks_.size(); ++t) {
    if (!track_taken[t]) ++tracks_[t].misses;
  }
  std::erase_if(tracks_, [&](const Track& t) { return t.misses > params_.max_misses; });

  for (std::size_t c = 0; c < canon.size(); ++c) {
    if (det_taken[c]) continue;
    const std::size_t input = canon[c];
    const auto& d = detections[input];
    tracks_.push_back(Track{next_id_++, d.label, KalmanBoxFilter(d, params_), 0});
    out[input] = {input, tracks_.back().id, tracks_.back().filter.bbox()};
  }
  return out;
}

DetectionFrame smooth_frame(TrackerBank& bank, const DetectionFrame& frame, double dt) {
  std::vector<BoundingBox> boxes;
  if (frame.face) boxes.push_back(frame.face->source_bbox);
  for (const auto& h : frame.hands) boxes.push_back(h.source_bbox);
  const auto smoothed = bank.step(boxes, dt);

  DetectionFrame out;
  out.timestamp = frame.timestamp;
  std::size_t i = 0;
  if (frame.face) out.face = frame.face->restricted_to(smoothed[i++].bbox);
  for (const auto& h : frame.hands) out.hands.push_back(h.restricted_to(smoothed[i++].bbox));
  return out;
}

}  // namespace pointing
