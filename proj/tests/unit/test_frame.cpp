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

#include <random>
#include <string>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "pointing/frame.hpp"

namespace pointing {
namespace {

RoiPointSet roi(double u0, double v0, double u1, double v1, Label label,
                std::vector<DepthSample> samples, double conf = 0.9) {
  return {BoundingBox{u0, v0, u1, v1, label, conf}, std::move(samples)};
}

TEST(FrameJson, RoundTripIsExact) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> px(10.0, 90.0), z(0.3, 7.0);
  for (int i = 0; i < 50; ++i) {
    DetectionFrame f;
    f.timestamp = 0.1 * i + 1.0 / 3.0;
    if (i % 3) {
      f.face = roi(0.0, 0.0, 100.0, 100.0, Label::kFace, {{px(rng), px(rng), z(rng)}});
    }
    for (int h = 0; h < i % 4; ++h) {
      f.hands.push_back(
          roi(5.0, 5.0, 95.0, 95.0, Label::kHand, {{px(rng), px(rng), z(rng)}}, 0.25 * h));
    }
    const auto line = format_frame_line(f);
    EXPECT_EQ(line.find('\n'), std::string::npos);
    EXPECT_EQ(parse_frame_line(line), f);
  }
}

TEST(FrameJson, AcceptsNullFaceAndNoHands) {
  const auto f = parse_frame_line(R"({"t": 2.5, "face": null, "hands": []})");
  EXPECT_DOUBLE_EQ(f.timestamp, 2.5);
  EXPECT_FALSE(f.face.has_value());
  EXPECT_TRUE(f.hands.empty());
}

TEST(FrameJson, LabelsComeFromTheField) {
  const auto f = parse_frame_line(
      R"({"t": 0, "face": {"bbox": [0, 0, 10, 10], "conf": 1, "samples": [[5, 5, 1]]},)"
      R"( "hands": [{"bbox": [0, 0, 10, 10], "conf": 0.5, "samples": []}]})");
  EXPECT_EQ(f.face->label(), Label::kFace);
  EXPECT_EQ(f.hands.at(0).label(), Label::kHand);
  EXPECT_DOUBLE_EQ(f.hands[0].source_bbox.confidence, 0.5);
}

TEST(FrameJson, RejectsMalformedRecords) {
  const char* bad[] = {
      "",
      "not json",
      "[1, 2]",
      R"({"face": null, "hands": []})",
      R"({"t": 1, "hands": []})",
      R"({"t": 1, "face": null})",
      R"({"t": "x", "face": null, "hands": []})",
      R"({"t": 1, "face": null, "hands": {}})",
      R"({"t": 1, "face": {"bbox": [0, 0, 10], "conf": 1, "samples": []}, "hands": []})",
      R"({"t": 1, "face": {"bbox": [10, 0, 0, 10], "conf": 1, "samples": []}, "hands": []})",
      R"({"t": 1, "face": {"bbox": [0, 0, 10, 10], "conf": 1.5, "samples": []}, "hands": []})",
      R"({"t": 1, "face": {"bbox": [0, 0, 10, 10], "conf": 1, "samples": [[5, 5, 0]]}, "hands": []})",
      R"({"t": 1, "face": {"bbox": [0, 0, 10, 10], "conf": 1, "samples": [[5, 5, -2]]}, "hands": []})",
      R"({"t": 1, "face": {"bbox": [0, 0, 10, 10], "conf": 1, "samples": [[50, 5, 1]]}, "hands": []})",
      R"({"t": 1, "face": {"bbox": [0, 0, 10, 10], "conf": 1, "samples": [[5, 5]]}, "hands": []})",
      R"({"t": 1, "face": {"bbox": [0, 0, 10, 10], "samples": []}, "hands": []})",
  };
  for (const char* line : bad) {
    EXPECT_THROW(parse_frame_line(line), FrameFormatError) << line;
  }
}

TEST(BoundingBox, ContainsIsInclusive) {
  const BoundingBox b{0.0, 0.0, 10.0, 20.0};
  EXPECT_TRUE(b.contains(0.0, 0.0));
  EXPECT_TRUE(b.contains(10.0, 20.0));
  EXPECT_FALSE(b.contains(10.0001, 5.0));
  EXPECT_DOUBLE_EQ(b.center_u(), 5.0);
  EXPECT_DOUBLE_EQ(b.center_v(), 10.0);
}

TEST(BoundingBox, ClampToImage) {
  CameraIntrinsics c;
  c.width = 640;
  c.height = 480;
  const auto b = BoundingBox{-20.0, 470.0, 30.0, 500.0}.clamped(c);
  EXPECT_EQ(b, (BoundingBox{0.0, 470.0, 30.0, 480.0}));
  EXPECT_FALSE((BoundingBox{700.0, 10.0, 720.0, 20.0}.clamped(c).valid()));
}

TEST(RoiPointSet, RestrictedToDropsOutsideSamples) {
  const auto r = roi(0, 0, 100, 100, Label::kHand, {{10, 10, 1}, {60, 60, 2}, {90, 10, 3}});
  const auto cut = r.restricted_to(BoundingBox{50, 0, 100, 100, Label::kHand, 0.9});
  ASSERT_EQ(cut.samples.size(), 2u);
  EXPECT_DOUBLE_EQ(cut.samples[0].z, 2.0);
  EXPECT_DOUBLE_EQ(cut.samples[1].z, 3.0);
}

TEST(TimestampValidator, RejectsNonIncreasing) {
  TimestampValidator v;
  EXPECT_TRUE(v.accept(1.0));
  EXPECT_FALSE(v.accept(1.0));
  EXPECT_FALSE(v.accept(0.5));
  EXPECT_TRUE(v.accept(1.1));
  EXPECT_DOUBLE_EQ(*v.last(), 1.1);
}

}  // namespace
}  // namespace pointing
