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
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "pointing/camera.hpp"
#include "pointing/frame.hpp"
#include "pointing/result.hpp"

namespace pointing {

/// How a face or hand ROI is summarized into a single keypoint. The first
/// three run on the CoBB-filtered ROI; kDbscanCluster runs on the raw ROI.
enum class KeypointStrategy {
  kMeanDepth,
  kMedianDepth,
  kClosestPoint,
  kDbscanCluster,
};

inline constexpr KeypointStrategy kAllStrategies[] = {
    KeypointStrategy::kMeanDepth, KeypointStrategy::kMedianDepth,
    KeypointStrategy::kClosestPoint, KeypointStrategy::kDbscanCluster};

std::string_view to_string(KeypointStrategy strategy);
/// Accepts "mean", "median", "closest", "dbscan".
std::optional<KeypointStrategy> parse_strategy(std::string_view name);

struct RoiParams {
  double cobb_ratio = 0.35;  // circle radius as a fraction of min(w, h)
  double eps = 0.15;         // DBSCAN neighborhood, meters of depth
  int min_pts = 4;           // DBSCAN core threshold, counting the point itself
};

/// Keeps the samples within r = ratio * min(w, h) pixels of the bbox center.
/// Fails with kEmptyRoi when nothing survives.
Result<RoiPointSet> cobb_filter(const RoiPointSet& roi, double ratio = 0.35);

struct DepthCluster {
  std::vector<std::size_t> member_indices;  // ascending, into the input
  double mean_depth = 0.0;

  std::size_t size() const { return member_indices.size(); }
};

struct DbscanResult {
  std::vector<DepthCluster> clusters;  // ordered by their first core point
  std::vector<std::size_t> noise;      // ascending
  std::vector<bool> is_core;           // per input index
};

/// DBSCAN over scalar depths. Two samples are neighbors when
/// |z_i - z_j| <= eps; a core point has at least min_pts neighbors including
/// itself. A border point joins the cluster of the lowest-index core point
/// that reaches it. O(n log n).
DbscanResult dbscan_depth(std::span<const double> depths, double eps, int min_pts);
DbscanResult dbscan_depth(std::span<const DepthSample> samples, double eps, int min_pts);

/// Largest cluster; equal sizes prefer the nearer mean depth. Fails with
/// kNoCluster on an empty list.
Result<DepthCluster> select_target_cluster(std::span<const DepthCluster> clusters);

/// Keypoint of an already prepared ROI: pixel centroid of the retained
/// samples deprojected at the strategy's depth statistic.
Result<CameraPoint> estimate_keypoint(const RoiPointSet& roi, KeypointStrategy strategy,
                                      const RoiParams& params, const CameraIntrinsics& intr);

/// Full per-ROI path: CoBB (unless DBSCAN) followed by estimate_keypoint.
Result<CameraPoint> locate_keypoint(const RoiPointSet& raw_roi, KeypointStrategy strategy,
                                    const RoiParams& params, const CameraIntrinsics& intr);

}  // namespace pointing
