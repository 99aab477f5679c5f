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

#include "pointing/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <nlohmann/json.hpp>

namespace pointing::sim {

using nlohmann::json;

namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

std::string join(const std::vector<std::string>& items) {
  std::ostringstream os;
  for (std::size_t i = 0; i < items.size(); ++i) os << (i ? "; " : "") << items[i];
  return os.str();
}

}  // namespace

ScenarioError::ScenarioError(std::vector<std::string> problems)
    : std::runtime_error("invalid scenario: " + join(problems)), problems_(std::move(problems)) {}

int NoiseModel::sample_count(double z, double n0) const {
  return std::max(n_min, static_cast<int>(std::lround(n0 / (z * z))));
}

double NoiseModel::dropout_probability(double z) const {
  if (z <= dropout_start_m) return 0.0;
  if (z >= dropout_full_m || dropout_full_m <= dropout_start_m) return dropout_max;
  return dropout_max * (z - dropout_start_m) / (dropout_full_m - dropout_start_m);
}

NoiseModel NoiseModel::noiseless() {
  NoiseModel m;
  m.sigma0 = 0.0;
  m.dropout_max = 0.0;
  m.background_fraction = 0.0;
  m.bbox_jitter_px = 0.0;
  return m;
}

Scenario Scenario::default_scenario() {
  Scenario s;
  for (double range : {1.5, 2.5, 3.5, 4.5, 5.5}) {
    for (double bearing : {-20.0, -10.0, 0.0, 10.0, 20.0}) s.positions.push_back({range, bearing});
  }
  s.directions = {
      {"away", false, 30.0, 0.0, 0.0, 0.0},
      {"toward", false, 50.0, 180.0, 0.0, 0.0},
      {"left", false, 25.0, -35.0, 0.0, 0.0},
      {"right", false, 25.0, 35.0, 0.0, 0.0},
  };
  for (double range : {1.5, 2.5, 3.5, 4.5, 5.5}) s.floor_positions.push_back({range, 0.0});
  s.targets = {
      {"T1", true, 0.0, 0.0, -1.2, 0.8},
      {"T2", true, 0.0, 0.0, 0.0, 0.8},
      {"T3", true, 0.0, 0.0, 1.2, 0.8},
  };
  return s;
}

std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

namespace {

struct Placement {
  WorldPoint eye;
  WorldPoint fingertip;
  WorldPoint idle_hand;
};

Placement place(const BodyModel& body, const Pose& pose, const PointingTarget& target) {
  const double b = pose.bearing_deg * kDeg;
  const double bx = pose.range_m * std::sin(b);
  const double by = pose.range_m * std::cos(b);
  // Subject faces the camera; "right" is the subject's own right-hand side.
  const double fx = -std::sin(b);
  const double fy = -std::cos(b);
  const WorldPoint right{fy, -fx, 0.0};

  Placement p;
  p.eye = {bx, by, body.eye_height};
  const WorldPoint shoulder =
      p.eye + right * body.shoulder_lateral - WorldPoint{0.0, 0.0, body.shoulder_drop};

  WorldPoint d;
  if (target.floor) {
    d = WorldPoint{target.x, target.y, 0.0} - p.eye;
    d = d * (1.0 / d.norm());
  } else {
    const double pitch = target.pitch_deg * kDeg;
    const double yaw = target.yaw_deg * kDeg;
    d = {std::cos(pitch) * std::sin(yaw), std::cos(pitch) * std::cos(yaw), -std::sin(pitch)};
  }
  // Fingertip on the eye ray at arm's length from the shoulder.
  const WorldPoint w = p.eye - shoulder;
  const double wd = w.dot(d);
  const double s =
      -wd + std::sqrt(wd * wd - w.dot(w) + body.arm_length * body.arm_length);
  p.fingertip = p.eye + d * s;
  p.idle_hand = WorldPoint{bx, by, body.idle_hand_height} - right * body.idle_hand_lateral;
  return p;
}

struct Disk {
  double u = 0.0;
  double v = 0.0;
  double radius_px = 0.0;
  double depth = 0.0;
  BoundingBox nominal;
};

Disk image_disk(const WorldPoint& center, double radius_m, double margin, Label label,
                const CameraIntrinsics& intr) {
  const CameraPoint c = world_to_camera(center, intr);
  if (!(c.z > 0.0)) throw ScenarioError({std::string(to_string(label)) + " behind camera"});
  const DepthSample px = project(c, intr);
  Disk d;
  d.u = px.u;
  d.v = px.v;
  d.depth = c.z;
  d.radius_px = intr.fx * radius_m / c.z;
  const double half = margin * d.radius_px;
  d.nominal = {d.u - half, d.v - half, d.u + half, d.v + half, label, 1.0};
  return d;
}

bool inside_image(const BoundingBox& b, const CameraIntrinsics& intr) {
  return b.u_min >= 0.0 && b.v_min >= 0.0 && b.u_max <= intr.width && b.v_max <= intr.height;
}

std::vector<Disk> render_disks(const BodyModel& body, const Placement& p,
                               const CameraIntrinsics& intr) {
  std::vector<Disk> disks;
  disks.push_back(image_disk(p.eye, body.face_radius, body.bbox_margin, Label::kFace, intr));
  disks.push_back(image_disk(p.fingertip, body.hand_radius, body.bbox_margin, Label::kHand, intr));
  if (body.idle_hand) {
    disks.push_back(
        image_disk(p.idle_hand, body.hand_radius, body.bbox_margin, Label::kHand, intr));
  }
  return disks;
}

std::vector<std::string> renderability_problems(const BodyModel& body, const Pose& pose,
                                                const PointingTarget& target,
                                                const CameraIntrinsics& intr) {
  std::vector<std::string> problems;
  std::ostringstream where;
  where << "pose (" << pose.range_m << " m, " << pose.bearing_deg << " deg) / " << target.name;
  std::vector<Disk> disks;
  try {
    disks = render_disks(body, place(body, pose, target), intr);
  } catch (const ScenarioError& e) {
    problems.push_back(where.str() + ": " + e.problems().front());
    return problems;
  }
  static const char* kNames[] = {"face", "pointing hand", "idle hand"};
  for (std::size_t i = 0; i < disks.size(); ++i) {
    if (!inside_image(disks[i].nominal, intr)) {
      problems.push_back(where.str() + ": " + kNames[i] + " box leaves the image");
    }
  }
  if (disks.size() == 3 && !(disks[1].nominal.v_min < disks[2].nominal.v_min)) {
    problems.push_back(where.str() + ": idle hand is not below the pointing hand");
  }
  return problems;
}

}  // namespace

GroundTruth pose_ground_truth(const BodyModel& body, const Pose& pose,
                              const PointingTarget& target) {
  const Placement p = place(body, pose, target);
  GroundTruth truth;
  truth.eye = p.eye;
  truth.fingertip = p.fingertip;
  const auto angles = pointing_angles(p.eye - p.fingertip);
  truth.pitch_deg = angles.pitch_deg;
  truth.yaw_deg = angles.yaw_deg;
  if (target.floor) {
    truth.floor_goal = GoalPoint{target.x, target.y};
  } else if (auto goal = ground_intersection(p.eye, p.fingertip)) {
    truth.floor_goal = *goal;
  }
  return truth;
}

std::vector<std::string> validate_scenario(const Scenario& s, const CameraIntrinsics& intr) {
  std::vector<std::string> problems;
  auto require = [&](bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  };
  const auto& b = s.body;
  const auto& n = s.noise;
  require(b.eye_height > 0.0 && b.eye_height < b.subject_height,
          "body.eye_height must lie in (0, subject_height)");
  require(b.arm_length > std::hypot(b.shoulder_drop, b.shoulder_lateral),
          "body.arm_length must exceed the eye-to-shoulder distance");
  require(b.face_radius > 0.0 && b.hand_radius > 0.0, "body radii must be positive");
  require(b.bbox_margin >= 1.0, "body.bbox_margin must be >= 1");
  require(n.sigma0 >= 0.0, "noise.sigma0 must be >= 0");
  require(n.n0_face > 0.0 && n.n0_hand > 0.0, "noise.n0_face/n0_hand must be positive");
  require(n.n_min >= 1, "noise.n_min must be >= 1");
  require(n.dropout_max >= 0.0 && n.dropout_max <= 1.0, "noise.dropout_max must lie in [0, 1]");
  require(n.background_fraction >= 0.0 && n.background_fraction <= 1.0,
          "noise.background_fraction must lie in [0, 1]");
  require(n.bbox_jitter_px >= 0.0, "noise.bbox_jitter_px must be >= 0");
  require(n.wall_offset_m > 0.0, "noise.wall_offset_m must be positive");
  require(s.frames_per_pose >= 1, "frames_per_pose must be >= 1");
  require(s.frame_rate_hz > 0.0, "frame_rate_hz must be positive");
  require(!s.positions.empty() || !s.floor_positions.empty(), "positions must not be empty");

  const double half_fov = 0.5 * intr.hfov_deg;
  for (const auto* list : {&s.positions, &s.floor_positions}) {
    for (const auto& p : *list) {
      std::ostringstream os;
      os << (list == &s.positions ? "positions" : "floor_positions") << " (" << p.range_m
         << " m, " << p.bearing_deg << " deg)";
      require(p.range_m > 0.0, os.str() + ": range must be positive");
      require(std::abs(p.bearing_deg) < half_fov, os.str() + ": bearing outside the camera hfov");
    }
  }
  for (const auto& t : s.targets) {
    require(t.floor, "targets." + t.name + ": must be a floor target");
  }
  for (const auto& d : s.directions) {
    require(!d.floor, "directions." + d.name + ": must be a pitch/yaw direction");
    require(std::abs(d.pitch_deg) < 90.0, "directions." + d.name + ": |pitch| must be < 90");
  }
  if (!problems.empty()) return problems;

  auto check = [&](const std::vector<Pose>& poses, const std::vector<PointingTarget>& list) {
    for (const auto& p : poses) {
      for (const auto& t : list) {
        auto more = renderability_problems(s.body, p, t, intr);
        problems.insert(problems.end(), more.begin(), more.end());
      }
    }
  };
  check(s.positions, s.directions);
  check(s.floor_positions, s.targets);
  return problems;
}

namespace {

RoiPointSet render_roi(const Disk& disk, const NoiseModel& noise, double n0,
                       const CameraIntrinsics& intr, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  std::normal_distribution<double> gauss(0.0, 1.0);

  BoundingBox box = disk.nominal;
  if (noise.bbox_jitter_px > 0.0) {
    box.u_min += noise.bbox_jitter_px * gauss(rng);
    box.v_min += noise.bbox_jitter_px * gauss(rng);
    box.u_max += noise.bbox_jitter_px * gauss(rng);
    box.v_max += noise.bbox_jitter_px * gauss(rng);
  }
  box = box.clamped(intr);
  if (!box.valid()) box = disk.nominal.clamped(intr);

  const double sigma_fg = noise.depth_sigma(disk.depth);
  const double wall = disk.depth + noise.wall_offset_m;
  const double sigma_bg = noise.depth_sigma(wall);
  const double p_drop = noise.dropout_probability(disk.depth);
  const int n = noise.sample_count(disk.depth, n0);
  const auto n_background =
      static_cast<int>(std::lround(noise.background_fraction * static_cast<double>(n)));

  RoiPointSet roi{box, {}};
  auto emit = [&](double u, double v, double z, double sigma) {
    const double depth = sigma > 0.0 ? z + sigma * gauss(rng) : z;
    const bool dropped = p_drop > 0.0 && uniform(rng) < p_drop;
    if (dropped || !(depth > 0.0) || !box.contains(u, v)) return;
    roi.samples.push_back({u, v, depth});
  };

  // Foreground on the fronto-parallel disk, in point-symmetric pairs so the
  // noiseless pixel centroid is the disk center.
  for (int k = 0; k + 1 < n; k += 2) {
    const double r = disk.radius_px * std::sqrt(uniform(rng));
    const double a = 2.0 * std::numbers::pi * uniform(rng);
    const double du = r * std::cos(a);
    const double dv = r * std::sin(a);
    emit(disk.u + du, disk.v + dv, disk.depth, sigma_fg);
    emit(disk.u - du, disk.v - dv, disk.depth, sigma_fg);
  }
  if (n % 2 == 1) emit(disk.u, disk.v, disk.depth, sigma_fg);

  // Background wall pixels: inside the box but off the disk.
  const double r2 = disk.radius_px * disk.radius_px;
  for (int k = 0; k < n_background; ++k) {
    for (int attempt = 0; attempt < 100; ++attempt) {
      const double u = box.u_min + box.width() * uniform(rng);
      const double v = box.v_min + box.height() * uniform(rng);
      const double du = u - disk.u;
      const double dv = v - disk.v;
      if (du * du + dv * dv > r2) {
        emit(u, v, wall, sigma_bg);
        break;
      }
    }
  }

  // Raster order, as read from a depth image.
  std::sort(roi.samples.begin(), roi.samples.end(),
            [](const DepthSample& a, const DepthSample& b) {
              return a.v != b.v ? a.v < b.v : a.u < b.u;
            });
  return roi;
}

}  // namespace

std::pair<DetectionFrame, GroundTruth> synthesize_frame(const BodyModel& body, const Pose& pose,
                                                        const PointingTarget& target,
                                                        const NoiseModel& noise,
                                                        const CameraIntrinsics& intr,
                                                        double timestamp, std::mt19937_64& rng) {
  if (auto problems = renderability_problems(body, pose, target, intr); !problems.empty()) {
    throw ScenarioError(std::move(problems));
  }
  const Placement placement = place(body, pose, target);
  const auto disks = render_disks(body, placement, intr);

  DetectionFrame frame;
  frame.timestamp = timestamp;
  frame.face = render_roi(disks[0], noise, noise.n0_face, intr, rng);
  for (std::size_t i = 1; i < disks.size(); ++i) {
    frame.hands.push_back(render_roi(disks[i], noise, noise.n0_hand, intr, rng));
  }
  return {std::move(frame), pose_ground_truth(body, pose, target)};
}

// ---------------------------------------------------------------------------
// Scenario files

namespace {

template <typename T>
void read_opt(const json& j, const char* key, T& out) {
  if (auto it = j.find(key); it != j.end()) out = it->get<T>();
}

PointingTarget target_from_json(const json& j, bool floor, std::size_t index) {
  PointingTarget t;
  t.floor = floor;
  t.name = j.value("name", (floor ? "T" : "D") + std::to_string(index + 1));
  if (floor) {
    t.x = j.at("x").get<double>();
    t.y = j.at("y").get<double>();
  } else {
    t.pitch_deg = j.at("pitch_deg").get<double>();
    t.yaw_deg = j.at("yaw_deg").get<double>();
  }
  return t;
}

}  // namespace

Scenario scenario_from_json(const json& j) {
  Scenario s = Scenario::default_scenario();
  std::vector<std::string> problems;
  try {
    if (!j.is_object()) throw ScenarioError({"scenario: expected a JSON object"});
    read_opt(j, "seed", s.seed);
    read_opt(j, "frames_per_pose", s.frames_per_pose);
    read_opt(j, "frame_rate_hz", s.frame_rate_hz);
    if (auto it = j.find("body"); it != j.end()) {
      auto& b = s.body;
      read_opt(*it, "subject_height", b.subject_height);
      read_opt(*it, "eye_height", b.eye_height);
      read_opt(*it, "shoulder_drop", b.shoulder_drop);
      read_opt(*it, "shoulder_lateral", b.shoulder_lateral);
      read_opt(*it, "arm_length", b.arm_length);
      read_opt(*it, "face_radius", b.face_radius);
      read_opt(*it, "hand_radius", b.hand_radius);
      read_opt(*it, "bbox_margin", b.bbox_margin);
      read_opt(*it, "idle_hand", b.idle_hand);
      read_opt(*it, "idle_hand_height", b.idle_hand_height);
      read_opt(*it, "idle_hand_lateral", b.idle_hand_lateral);
    }
    if (auto it = j.find("noise"); it != j.end()) {
      auto& n = s.noise;
      if (it->is_string() && it->get<std::string>() == "none") {
        n = NoiseModel::noiseless();
      } else {
        read_opt(*it, "sigma0", n.sigma0);
        read_opt(*it, "n0_face", n.n0_face);
        read_opt(*it, "n0_hand", n.n0_hand);
        read_opt(*it, "n_min", n.n_min);
        read_opt(*it, "dropout_start_m", n.dropout_start_m);
        read_opt(*it, "dropout_full_m", n.dropout_full_m);
        read_opt(*it, "dropout_max", n.dropout_max);
        read_opt(*it, "background_fraction", n.background_fraction);
        read_opt(*it, "bbox_jitter_px", n.bbox_jitter_px);
        read_opt(*it, "wall_offset_m", n.wall_offset_m);
      }
    }
    if (auto it = j.find("grid"); it != j.end()) {
      s.positions.clear();
      for (double r : it->at("ranges_m")) {
        for (double b : it->at("bearings_deg")) s.positions.push_back({r, b});
      }
    }
    if (auto it = j.find("positions"); it != j.end()) {
      s.positions.clear();
      for (const auto& p : *it) {
        s.positions.push_back({p.at("range_m").get<double>(), p.value("bearing_deg", 0.0)});
      }
    }
    if (auto it = j.find("floor_positions"); it != j.end()) {
      s.floor_positions.clear();
      for (const auto& p : *it) {
        s.floor_positions.push_back({p.at("range_m").get<double>(), p.value("bearing_deg", 0.0)});
      }
    }
    if (auto it = j.find("directions"); it != j.end()) {
      s.directions.clear();
      for (std::size_t i = 0; i < it->size(); ++i) {
        s.directions.push_back(target_from_json((*it)[i], false, i));
      }
    }
    if (auto it = j.find("targets"); it != j.end()) {
      s.targets.clear();
      for (std::size_t i = 0; i < it->size(); ++i) {
        s.targets.push_back(target_from_json((*it)[i], true, i));
      }
    }
  } catch (const json::exception& e) {
    throw ScenarioError({std::string("scenario: ") + e.what()});
  }
  return s;
}

json scenario_to_json(const Scenario& s) {
  const auto& b = s.body;
  const auto& n = s.noise;
  json positions = json::array();
  for (const auto& p : s.positions) {
    positions.push_back({{"range_m", p.range_m}, {"bearing_deg", p.bearing_deg}});
  }
  json floor_positions = json::array();
  for (const auto& p : s.floor_positions) {
    floor_positions.push_back({{"range_m", p.range_m}, {"bearing_deg", p.bearing_deg}});
  }
  json directions = json::array();
  for (const auto& d : s.directions) {
    directions.push_back({{"name", d.name}, {"pitch_deg", d.pitch_deg}, {"yaw_deg", d.yaw_deg}});
  }
  json targets = json::array();
  for (const auto& t : s.targets) targets.push_back({{"name", t.name}, {"x", t.x}, {"y", t.y}});
  return {
      {"seed", s.seed},
      {"frames_per_pose", s.frames_per_pose},
      {"frame_rate_hz", s.frame_rate_hz},
      {"body",
       {{"subject_height", b.subject_height},
        {"eye_height", b.eye_height},
        {"shoulder_drop", b.shoulder_drop},
        {"shoulder_lateral", b.shoulder_lateral},
        {"arm_length", b.arm_length},
        {"face_radius", b.face_radius},
        {"hand_radius", b.hand_radius},
        {"bbox_margin", b.bbox_margin},
        {"idle_hand", b.idle_hand},
        {"idle_hand_height", b.idle_hand_height},
        {"idle_hand_lateral", b.idle_hand_lateral}}},
      {"noise",
       {{"sigma0", n.sigma0},
        {"n0_face", n.n0_face},
        {"n0_hand", n.n0_hand},
        {"n_min", n.n_min},
        {"dropout_start_m", n.dropout_start_m},
        {"dropout_full_m", n.dropout_full_m},
        {"dropout_max", n.dropout_max},
        {"background_fraction", n.background_fraction},
        {"bbox_jitter_px", n.bbox_jitter_px},
        {"wall_offset_m", n.wall_offset_m}}},
      {"positions", std::move(positions)},
      {"directions", std::move(directions)},
      {"floor_positions", std::move(floor_positions)},
      {"targets", std::move(targets)},
  };
}

json ground_truth_to_json(double timestamp, const GroundTruth& truth) {
  json j = {
      {"t", timestamp},
      {"eye", {truth.eye.x, truth.eye.y, truth.eye.z}},
      {"fingertip", {truth.fingertip.x, truth.fingertip.y, truth.fingertip.z}},
      {"pitch_deg", truth.pitch_deg},
      {"yaw_deg", truth.yaw_deg},
  };
  j["goal"] = truth.floor_goal ? json{truth.floor_goal->x, truth.floor_goal->y} : json(nullptr);
  return j;
}

}  // namespace pointing::sim
