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

#include "pointing/roi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace pointing {

std::string_view to_string(KeypointStrategy strategy) {
  switch (strategy) {
    case KeypointStrategy::kMeanDepth: return "mean";
    case KeypointStrategy::kMedianDepth: return "median";
    case KeypointStrategy::kClosestPoint: return "closest";
    case KeypointStrategy::kDbscanCluster: return "dbscan";
  }
  return "unknown";
}

std::optional<KeypointStrategy> parse_strategy(std::string_view name) {
  for (auto s : kAllStrategies) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

Result<RoiPointSet> cobb_filter(const RoiPointSet& roi, double ratio) {
  const auto& box = roi.source_bbox;
  const double radius = ratio * std::min(box.width(), box.height());
  const double r2 = radius * radius;
  const double cu = box.center_u();
  const double cv = box.center_v();

  RoiPointSet out{box, {}};
  for (const auto& s : roi.samples) {
    const double du = s.u - cu;
    const double dv = s.v - cv;
    if (du * du + dv * dv <= r2) out.samples.push_back(s);
  }
  if (out.samples.empty()) return Reason::kEmptyRoi;
  return out;
}

DbscanResult dbscan_depth(std::span<const double> depths, double eps, int min_pts) {
  const std::size_t n = depths.size();
  DbscanResult result;
  result.is_core.assign(n, false);
  if (n == 0) return result;

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return depths[a] < depths[b]; });
  std::vector<double> z(n);
  for (std::size_t k = 0; k < n; ++k) z[k] = depths[order[k]];

  // Neighbor windows [lo[k], hi[k]) in sorted order; the predicate
  // z[j] - z[k] <= eps is monotone in j, so two pointers suffice.
  std::vector<std::size_t> lo(n), hi(n);
  for (std::size_t k = 0, l = 0, h = 0; k < n; ++k) {
    while (z[k] - z[l] > eps) ++l;
    if (h < k) h = k;
    while (h < n && z[h] - z[k] <= eps) ++h;
    lo[k] = l;
    hi[k] = h;
  }
  const auto min_count = static_cast<std::size_t>(std::max(min_pts, 1));
  std::vector<bool> core(n);
  for (std::size_t k = 0; k < n; ++k) core[k] = hi[k] - lo[k] >= min_count;

  // Core points form one cluster per run of consecutive cores whose gaps
  // stay within eps; no chain of core points can bridge a wider gap.
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> run_of(n, kNone);
  std::size_t runs = 0;
  std::size_t prev_core = kNone;
  for (std::size_t k = 0; k < n; ++k) {
    if (!core[k]) continue;
    if (prev_core == kNone || z[k] - z[prev_core] > eps) ++runs;
    run_of[k] = runs - 1;
    prev_core = k;
  }

  std::vector<std::size_t> label(n, kNone);  // by input index
  for (std::size_t k = 0; k < n; ++k) {
    if (core[k]) {
      label[order[k]] = run_of[k];
      result.is_core[order[k]] = true;
      continue;
    }
    // Border window holds fewer than min_pts entries.
    std::size_t owner = kNone;
    for (std::size_t j = lo[k]; j < hi[k]; ++j) {
      if (core[j] && (owner == kNone || order[j] < order[owner])) owner = j;
    }
    if (owner != kNone) label[order[k]] = run_of[owner];
  }

  // Order clusters by their lowest-index core point, as a sequential scan
  // over the input would discover them.
  std::vector<std::size_t> first_core(runs, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (result.is_core[i]) first_core[label[i]] = std::min(first_core[label[i]], i);
  }
  std::vector<std::size_t> run_order(runs);
  std::iota(run_order.begin(), run_order.end(), std::size_t{0});
  std::sort(run_order.begin(), run_order.end(),
            [&](std::size_t a, std::size_t b) { return first_core[a] < first_core[b]; });
  std::vector<std::size_t> rank(runs);
  for (std::size_t r = 0; r < runs; ++r) rank[run_order[r]] = r;

  result.clusters.resize(runs);
  for (std::size_t i = 0; i < n; ++i) {
    if (label[i] == kNone) {
      result.noise.push_back(i);
    } else {
      result.clusters[rank[label[i]]].member_indices.push_back(i);
    }
  }
  for (auto& c : result.clusters) {
    double sum = 0.0;
    for (auto i : c.member_indices) sum += depths[i];
    c.mean_depth = sum / static_cast<double>(c.size());
  }
  return result;
}

DbscanResult dbscan_depth(std::span<const DepthSample> samples, double eps, int min_pts) {
  std::vector<double> depths(samples.size());
  std::transform(samples.begin(), samples.end(), depths.begin(),
                 [](const DepthSample& s) { return s.z; });
  return dbscan_depth(std::span<const double>(depths), eps, min_pts);
}

Result<DepthCluster> select_target_cluster(std::span<const DepthCluster> clusters) {
  if (clusters.empty()) return Reason::kNoCluster;
  const DepthCluster* best = &clusters.front();
  for (const auto& c : clusters.subspan(1)) {
    if (c.size() > best->size() ||
        (c.size() == best->size() && c.mean_depth < best->mean_depth)) {
      best = &c;
    }
  }
  return *best;
}

namespace {

struct PixelCentroid {
  double u = 0.0;
  double v = 0.0;
};

template <typename Range>
PixelCentroid centroid_of(const Range& samples, std::size_t count) {
  PixelCentroid c;
  for (const DepthSample& s : samples) {
    c.u += s.u;
    c.v += s.v;
  }
  c.u /= static_cast<double>(count);
  c.v /= static_cast<double>(count);
  return c;
}

double median_of(std::vector<double> values) {
  const std::size_t mid = values.size() / 2;
  std::nth_element(values.begin(), values.begin() + mid, values.end());
  const double upper = values[mid];
  if (values.size() % 2 == 1) return upper;
  const double lower = *std::max_element(values.begin(), values.begin() + mid);
  return 0.5 * (lower + upper);
}

}  // namespace

Result<CameraPoint> estimate_keypoint(const RoiPointSet& roi, KeypointStrategy strategy,
                                      const RoiParams& params, const CameraIntrinsics& intr) {
  const auto& samples = roi.samples;
  if (samples.empty()) return Reason::kEmptyRoi;

  if (strategy == KeypointStrategy::kDbscanCluster) {
    const auto clustering = dbscan_depth(std::span<const DepthSample>(samples), params.eps,
                                         params.min_pts);
    auto target = select_target_cluster(clustering.clusters);
    if (!target) return target.reason();
    std::vector<DepthSample> members;
    members.reserve(target->size());
    for (auto i : target->member_indices) members.push_back(samples[i]);
    const auto c = centroid_of(members, members.size());
    return deproject(c.u, c.v, target->mean_depth, intr);
  }

  const auto c = centroid_of(samples, samples.size());
  double depth = 0.0;
  switch (strategy) {
    case KeypointStrategy::kMeanDepth:
      for (const auto& s : samples) depth += s.z;
      depth /= static_cast<double>(samples.size());
      break;
    case KeypointStrategy::kMedianDepth: {
      std::vector<double> z(samples.size());
      std::transform(samples.begin(), samples.end(), z.begin(),
                     [](const DepthSample& s) { return s.z; });
      depth = median_of(std::move(z));
      break;
    }
    case KeypointStrategy::kClosestPoint:
      depth = std::min_element(samples.begin(), samples.end(),
                               [](const DepthSample& a, const DepthSample& b) {
                                 return a.z < b.z;
                               })->z;
      break;
    case KeypointStrategy::kDbscanCluster:
      break;
  }
  return deproject(c.u, c.v, depth, intr);
}

Result<CameraPoint> locate_keypoint(const RoiPointSet& raw_roi, KeypointStrategy strategy,
                                    const RoiParams& params, const CameraIntrinsics& intr) {
  if (strategy == KeypointStrategy::kDbscanCluster) {
    return estimate_keypoint(raw_roi, strategy, params, intr);
  }
  auto filtered = cobb_filter(raw_roi, params.cobb_ratio);
  if (!filtered) return filtered.reason();
  return estimate_keypoint(*filtered, strategy, params, intr);
}

}  // namespace pointing
