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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include "oracles/oracles.hpp"
#include "pointing/tracking.hpp"

namespace pointing {
namespace {

constexpr double kDt = 1.0 / 30.0;

BoundingBox box_at(double u, double v, Label label = Label::kHand, double size = 40.0) {
  return {u - size / 2, v - size / 2, u + size / 2, v + size / 2, label, 0.9};
}

TEST(AssociationGate, ScalesWithIntervalAndClamps) {
  const TrackerParams p;
  EXPECT_NEAR(association_gate(kDt, 640, p), 0.5 * 640 * kDt * 4, 1e-12);
  EXPECT_DOUBLE_EQ(association_gate(1.0, 640, p), 150.0);
  EXPECT_DOUBLE_EQ(association_gate(1e-3, 640, p), 30.0);
}

TEST(KalmanBoxFilter, SteadyStateGainMatchesAlphaBeta) {
  TrackerParams p;
  KalmanBoxFilter f(box_at(100, 100), p);
  for (int i = 0; i < 2000; ++i) {
    f.predict(kDt);
    f.update(box_at(100, 100));
  }
  const auto want = oracle::kalata_gains(p.accel_noise, p.measurement_noise, kDt);
  const auto& k = f.last_gain();
  EXPECT_NEAR(k(0, 0), want.alpha, 1e-9);
  EXPECT_NEAR(k(4, 0) * kDt, want.beta, 1e-9);
  EXPECT_NEAR(k(1, 1), want.alpha, 1e-9);
  EXPECT_NEAR(k(5, 1) * kDt, want.beta, 1e-9);
  // Center and size channels are decoupled.
  EXPECT_DOUBLE_EQ(k(0, 2), 0.0);
  EXPECT_DOUBLE_EQ(k(2, 0), 0.0);
}

TEST(KalmanBoxFilter, StationaryDetectionSettles) {
  TrackerBank bank(640);
  const auto truth = box_at(200, 150);
  std::vector<SmoothedDetection> out;
  for (int i = 0; i < 50; ++i) {
    out = bank.step(std::span(&truth, 1), kDt);
    if (i >= 10) {
      ASSERT_NEAR(out[0].bbox.center_u(), 200.0, 0.5);
      ASSERT_NEAR(out[0].bbox.center_v(), 150.0, 0.5);
    }
  }
  EXPECT_EQ(bank.tracks().size(), 1u);
}

TEST(KalmanBoxFilter, PosteriorVarianceIsCalibrated) {
  // Targets drawn from the filter's own motion model: the Monte Carlo spread
  // of the posterior center must match the reported covariance.
  TrackerParams p;
  std::mt19937_64 rng(3);
  std::normal_distribution<double> meas(0.0, p.measurement_noise), accel(0.0, p.accel_noise),
      vel0(0.0, p.initial_velocity_std);
  const int runs = 4000;
  double sum_sq = 0.0;
  double reported = 0.0;
  for (int r = 0; r < runs; ++r) {
    double u = 300.0, du = vel0(rng);
    KalmanBoxFilter f(box_at(u + meas(rng), 200.0), p);
    for (int i = 0; i < 60; ++i) {
      const double a = accel(rng);
      u += du * kDt + 0.5 * a * kDt * kDt;
      du += a * kDt;
      f.predict(kDt);
      f.update(box_at(u + meas(rng), 200.0));
    }
    sum_sq += std::pow(f.state()(0) - u, 2);
    reported = f.covariance()(0, 0);
  }
  EXPECT_NEAR(sum_sq / runs / reported, 1.0, 0.1);
}

TEST(KalmanBoxFilter, CovarianceStaysSymmetricPsd) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> jump(-20.0, 20.0), dt(0.005, 0.2);
  KalmanBoxFilter f(box_at(100, 100), TrackerParams{});
  double u = 100, v = 100;
  for (int i = 0; i < 500; ++i) {
    f.predict(dt(rng));
    u += jump(rng);
    v += jump(rng);
    if (i % 7 != 3) f.update(box_at(u, v, Label::kHand, 30 + std::abs(jump(rng))));
    const auto& c = f.covariance();
    ASSERT_LT((c - c.transpose()).cwiseAbs().maxCoeff(), 1e-9);
    Eigen::SelfAdjointEigenSolver<KalmanBoxFilter::Covariance> eig(c);
    ASSERT_GE(eig.eigenvalues().minCoeff(), -1e-10);
  }
}

TEST(TrackerBank, TrackRetiredAfterTooManyMisses) {
  TrackerParams p;
  TrackerBank bank(640, p);
  const auto d = box_at(100, 100);
  bank.step(std::span(&d, 1), kDt);
  for (int i = 0; i < p.max_misses; ++i) {
    bank.step({}, kDt);
    ASSERT_EQ(bank.tracks().size(), 1u) << "miss " << i + 1;
  }
  bank.step({}, kDt);
  EXPECT_TRUE(bank.tracks().empty());
}

TEST(TrackerBank, SeparatedDetectionsKeepStableIds) {
  TrackerBank bank(640);
  int id_a = 0, id_b = 0;
  for (int i = 0; i < 30; ++i) {
    const std::vector<BoundingBox> dets{box_at(100 + i, 100), box_at(400 - i, 300)};
    const auto out = bank.step(dets, kDt);
    ASSERT_EQ(out.size(), 2u);
    if (i == 0) {
      id_a = out[0].track_id;
      id_b = out[1].track_id;
      ASSERT_NE(id_a, id_b);
    }
    EXPECT_EQ(out[0].track_id, id_a);
    EXPECT_EQ(out[1].track_id, id_b);
    EXPECT_EQ(out[0].input_index, 0u);
    EXPECT_EQ(out[1].input_index, 1u);
  }
  EXPECT_EQ(bank.tracks().size(), 2u);
}

TEST(TrackerBank, LabelsNeverCrossAssociate) {
  TrackerBank bank(640);
  const auto face = box_at(200, 100, Label::kFace);
  bank.step(std::span(&face, 1), kDt);
  const auto hand = box_at(201, 101, Label::kHand);
  const auto out = bank.step(std::span(&hand, 1), kDt);
  EXPECT_NE(out[0].track_id, bank.tracks().front().id);
  EXPECT_EQ(bank.tracks().size(), 2u);
}

TEST(TrackerBank, FarDetectionSpawnsNewTrack) {
  TrackerBank bank(640);
  const auto a = box_at(100, 100);
  const auto b = box_at(400, 400);
  const int first = bank.step(std::span(&a, 1), kDt)[0].track_id;
  const int second = bank.step(std::span(&b, 1), kDt)[0].track_id;
  EXPECT_NE(first, second);
}

TEST(TrackerBank, OutputIndependentOfDetectionOrder) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> wobble(-3.0, 3.0);
  TrackerBank ordered(640), shuffled(640);
  for (int frame = 0; frame < 40; ++frame) {
    std::vector<BoundingBox> dets{
        box_at(100 + wobble(rng), 100 + wobble(rng), Label::kFace),
        box_at(150 + wobble(rng), 220 + wobble(rng)),
        box_at(260 + wobble(rng), 240 + wobble(rng)),
        box_at(400 + 2 * frame + wobble(rng), 200 + wobble(rng))};
    std::vector<std::size_t> perm(dets.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<BoundingBox> permuted;
    for (auto i : perm) permuted.push_back(dets[i]);

    const auto a = ordered.step(dets, kDt);
    const auto b = shuffled.step(permuted, kDt);
    for (std::size_t k = 0; k < perm.size(); ++k) {
      ASSERT_EQ(b[k].track_id, a[perm[k]].track_id);
      ASSERT_EQ(b[k].bbox, a[perm[k]].bbox);
    }
  }
}

TEST(TrackerBank, RejectsNonPositiveInterval) {
  TrackerBank bank(640);
  EXPECT_THROW(bank.step({}, 0.0), std::invalid_argument);
}

TEST(SmoothFrame, SamplesStayInsideSmoothedBoxes) {
  TrackerBank bank(640);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> jitter(-4.0, 4.0), off(-25.0, 25.0);
  for (int i = 0; i < 20; ++i) {
    DetectionFrame f;
    f.timestamp = i * kDt;
    auto roi = [&](double u, double v, Label l) {
      RoiPointSet r{box_at(u + jitter(rng), v + jitter(rng), l, 50), {}};
      for (int k = 0; k < 30; ++k) {
        const double su = std::clamp(u + off(rng), r.source_bbox.u_min, r.source_bbox.u_max);
        const double sv = std::clamp(v + off(rng), r.source_bbox.v_min, r.source_bbox.v_max);
        r.samples.push_back({su, sv, 2.0});
      }
      return r;
    };
    f.face = roi(300, 100, Label::kFace);
    f.hands = {roi(350, 200, Label::kHand)};
    const auto out = smooth_frame(bank, f, kDt);
    ASSERT_TRUE(out.face.has_value());
    ASSERT_EQ(out.hands.size(), 1u);
    EXPECT_EQ(out.face->label(), Label::kFace);
    for (const auto& s : out.face->samples) {
      EXPECT_TRUE(out.face->source_bbox.contains(s.u, s.v));
    }
    for (const auto& s : out.hands[0].samples) {
      EXPECT_TRUE(out.hands[0].source_bbox.contains(s.u, s.v));
    }
  }
}

}  // namespace
}  // namespace pointing
