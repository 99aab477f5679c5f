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

#include "pointing/cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include <nlohmann/json.hpp>

#include "pointing/records.hpp"
#include "pointing/report.hpp"

namespace pointing::cli {

using nlohmann::json;

void RunConfig::validate() const {
  const auto& roi = estimator.roi;
  if (!(roi.cobb_ratio > 0.0 && roi.cobb_ratio <= 0.5)) {
    throw ConfigError("cobb_ratio must lie in (0, 0.5]");
  }
  if (!(roi.eps > 0.0)) throw ConfigError("eps must be positive");
  if (roi.min_pts < 1) throw ConfigError("min_pts must be >= 1");
  if (gate.window < 1) throw ConfigError("gate window must be >= 1");
  if (!(gate.tau > 0.0) || !(gate.tau_angle > 0.0)) throw ConfigError("gate thresholds must be positive");
  if (!(gate.horizon_s > 0.0)) throw ConfigError("gate horizon must be positive");
  if (!(tracker.measurement_noise > 0.0)) throw ConfigError("tracker measurement noise must be positive");
  if (tracker.max_misses < 0) throw ConfigError("tracker miss limit must be >= 0");
  if (frames_per_pose && *frames_per_pose < 1) throw ConfigError("frames per pose must be >= 1");
}

CameraIntrinsics load_intrinsics(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open intrinsics file: " + path);
  CameraIntrinsics intr = CameraIntrinsics::default_sensor();
  try {
    const json j = json::parse(in);
    intr.fx = j.at("fx").get<double>();
    intr.fy = j.at("fy").get<double>();
    intr.cx = j.at("cx").get<double>();
    intr.cy = j.at("cy").get<double>();
    intr.width = j.at("width").get<int>();
    intr.height = j.at("height").get<int>();
    intr.camera_height = j.at("camera_height").get<double>();
    intr.hfov_deg = j.value("hfov_deg", 2.0 * std::atan(0.5 * intr.width / intr.fx) * 180.0 / std::numbers::pi);
    intr.validate();
  } catch (const json::exception& e) {
    throw ConfigError("intrinsics " + path + ": " + e.what());
  } catch (const GeometryError& e) {
    throw ConfigError("intrinsics " + path + ": " + e.what());
  }
  return intr;
}

CameraIntrinsics intrinsics_for(const RunConfig& config) {
  if (config.intrinsics_path.empty()) return CameraIntrinsics::default_sensor();
  return load_intrinsics(config.intrinsics_path);
}

sim::Scenario scenario_for(const RunConfig& config, const CameraIntrinsics& intr) {
  sim::Scenario scenario = sim::Scenario::default_scenario();
  if (!config.scenario_path.empty()) {
    std::ifstream in(config.scenario_path);
    if (!in) throw ConfigError("cannot open scenario file: " + config.scenario_path);
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded()) throw ConfigError("scenario " + config.scenario_path + ": invalid JSON");
    try {
      scenario = sim::scenario_from_json(j);
    } catch (const sim::ScenarioError& e) {
      throw ConfigError(e.what());
    }
  }
  if (config.seed) scenario.seed = *config.seed;
  if (config.frames_per_pose) scenario.frames_per_pose = *config.frames_per_pose;
  if (auto problems = sim::validate_scenario(scenario, intr); !problems.empty()) {
    throw ConfigError(sim::ScenarioError(std::move(problems)).what());
  }
  return scenario;
}

// ---------------------------------------------------------------------------
// estimate

namespace {

constexpr std::size_t kBatchSize = 256;
constexpr double kDefaultFrameInterval = 1.0 / 30.0;

class EstimateWriter {
 public:
  EstimateWriter(std::ostream& out, const GateParams& gate, EstimateSummary& summary)
      : out_(out), window_(gate), summary_(summary) {}

  void write(const FrameEstimate& e) {
    out_ << estimate_record(e).dump() << '\n';
    if (e.estimate) ++summary_.estimates;
    std::optional<GoalObservation> obs;
    if (e.goal) {
      ++summary_.goals;
      obs = GoalObservation{*e.goal, e.estimate->pitch_deg, e.estimate->yaw_deg};
    }
    if (auto commit = window_.push(e.timestamp, obs)) {
      out_ << commit_record(*commit).dump() << '\n';
      ++summary_.commits;
    }
  }

 private:
  std::ostream& out_;
  GoalWindow window_;
  EstimateSummary& summary_;
};

}  // namespace

EstimateSummary run_estimate(std::istream& in, std::ostream& out, std::ostream& log,
                             const RunConfig& config, const CameraIntrinsics& intr) {
  EstimateSummary summary;
  EstimateWriter writer(out, config.gate, summary);
  TimestampValidator timestamps;
  TrackerBank bank(intr.width, config.tracker);
  std::vector<DetectionFrame> batch;
  const auto start = std::chrono::steady_clock::now();

  auto flush = [&] {
    for (const auto& e : estimate_batch(batch, config.estimator, intr, config.execution)) {
      writer.write(e);
    }
    batch.clear();
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    DetectionFrame frame;
    try {
      frame = parse_frame_line(line);
    } catch (const FrameFormatError& e) {
      ++summary.skipped;
      log << "warning: line " << line_no << ": " << e.what() << ", skipped\n";
      continue;
    }
    const auto previous = timestamps.last();
    if (!timestamps.accept(frame.timestamp)) {
      ++summary.skipped;
      log << "warning: line " << line_no << ": non-increasing timestamp, skipped\n";
      continue;
    }
    ++summary.frames;

    if (config.track) {
      const double dt = previous ? frame.timestamp - *previous : kDefaultFrameInterval;
      writer.write(estimate_frame(smooth_frame(bank, frame, dt), config.estimator, intr));
    } else {
      batch.push_back(std::move(frame));
      if (batch.size() == kBatchSize) flush();
    }
  }
  if (in.bad()) throw InputError("error reading input stream");
  flush();
  summary.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return summary;
}

std::string format_summary(const EstimateSummary& s) {
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "frames=%zu estimates=%zu yield=%zu/%zu (%.3f) goals=%zu commits=%zu "
                "skipped=%zu fps=%.1f",
                s.frames, s.estimates, s.estimates, s.frames, s.yield(), s.goals, s.commits,
                s.skipped, s.frames_per_second());
  return buf;
}

// ---------------------------------------------------------------------------
// simulate / experiments

std::size_t run_simulate(const sim::Scenario& scenario, const CameraIntrinsics& intr,
                         bool floor_targets, std::ostream& frames, std::ostream* truth) {
  const auto stream = simulate_stream(scenario, intr, floor_targets);
  for (const auto& [frame, gt] : stream) {
    frames << format_frame_line(frame) << '\n';
    if (truth) *truth << sim::ground_truth_to_json(frame.timestamp, gt).dump() << '\n';
  }
  return stream.size();
}

ExperimentArtifacts run_experiment_a_artifacts(const sim::Scenario& scenario,
                                               const RunConfig& config,
                                               const CameraIntrinsics& intr) {
  const auto cells = run_experiment_a(scenario, kAllStrategies, config.estimator.roi, intr,
                                      config.execution);
  ExperimentArtifacts out;
  std::ostringstream csv;
  report::write_angle_csv(csv, cells);
  out.csv = csv.str();
  std::ostringstream svg;
  report::write_polar_heatmap_svg(svg, cells);
  out.svg = svg.str();
  return out;
}

ExperimentArtifacts run_experiment_b_artifacts(const sim::Scenario& scenario,
                                               const RunConfig& config,
                                               const CameraIntrinsics& intr) {
  const auto report = run_experiment_b(scenario, config.estimator.strategy, config.estimator.roi,
                                       intr, config.execution);
  ExperimentArtifacts out;
  std::ostringstream csv;
  report::write_goal_csv(csv, report);
  out.csv = csv.str();
  out.table = report::format_goal_table(report);
  return out;
}

// ---------------------------------------------------------------------------
// bench

std::vector<DetectionFrame> bench_frames(const BenchOptions& options,
                                         const CameraIntrinsics& intr) {
  const auto scenario = sim::Scenario::default_scenario();
  const auto budget = static_cast<std::size_t>(std::max(options.max_samples, 0));
  auto rng = sim::make_rng(options.seed, 0);
  std::uniform_int_distribution<std::size_t> pick_pose(0, scenario.positions.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_dir(0, scenario.directions.size() - 1);

  std::vector<DetectionFrame> frames;
  frames.reserve(static_cast<std::size_t>(std::max(options.frames, 0)));
  for (int k = 0; k < options.frames; ++k) {
    const auto& pose = scenario.positions[pick_pose(rng)];
    const auto& dir = scenario.directions[pick_dir(rng)];
    // Dense ROIs: scale the sample density so near and far frames both
    // approach the per-frame budget.
    sim::NoiseModel noise = scenario.noise;
    const double scale = pose.range_m * pose.range_m / (1.0 + noise.background_fraction);
    noise.n0_face = 0.5 * options.max_samples * scale;
    noise.n0_hand = 0.2 * options.max_samples * scale;
    noise.dropout_max = 0.0;
    auto frame = sim::synthesize_frame(scenario.body, pose, dir, noise, intr,
                                       k * kDefaultFrameInterval, rng)
                     .first;

    std::size_t remaining = budget;
    auto cap = [&remaining](RoiPointSet& roi) {
      if (roi.samples.size() > remaining) roi.samples.resize(remaining);
      remaining -= roi.samples.size();
    };
    cap(*frame.face);
    for (auto& h : frame.hands) cap(h);
    frames.push_back(std::move(frame));
  }
  return frames;
}

std::vector<LatencyStats> run_bench(const BenchOptions& options, const RoiParams& roi,
                                    const CameraIntrinsics& intr) {
  const auto frames = bench_frames(options, intr);
  std::vector<LatencyStats> out;
  for (auto strategy : options.strategies) {
    const EstimatorConfig config{strategy, roi};
    LatencyStats stats;
    stats.strategy = strategy;
    stats.frames = static_cast<int>(frames.size());
    std::vector<double> ms;
    ms.reserve(frames.size());
    double total_samples = 0.0;
    const auto t0 = std::chrono::steady_clock::now();
    for (const auto& frame : frames) {
      std::size_t samples = frame.face ? frame.face->samples.size() : 0;
      for (const auto& h : frame.hands) samples += h.samples.size();
      total_samples += static_cast<double>(samples);
      stats.max_samples = std::max(stats.max_samples, static_cast<int>(samples));

      const auto a = std::chrono::steady_clock::now();
      const auto result = estimate_frame(frame, config, intr);
      const auto b = std::chrono::steady_clock::now();
      stats.estimates += result.estimate ? 1 : 0;
      ms.push_back(std::chrono::duration<double, std::milli>(b - a).count());
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!ms.empty()) {
      std::sort(ms.begin(), ms.end());
      auto quantile = [&ms](double q) {
        const auto idx = static_cast<std::size_t>(std::ceil(q * ms.size())) - 1;
        return ms[std::min(idx, ms.size() - 1)];
      };
      stats.p50_ms = quantile(0.50);
      stats.p99_ms = quantile(0.99);
      stats.max_ms = ms.back();
      stats.mean_samples = total_samples / static_cast<double>(ms.size());
      stats.frames_per_second = elapsed > 0.0 ? ms.size() / elapsed : 0.0;
    }
    out.push_back(stats);
  }
  return out;
}

std::string format_bench(const std::vector<LatencyStats>& stats) {
  std::ostringstream os;
  char line[200];
  std::snprintf(line, sizeof(line), "%-9s %7s %12s %12s %10s %10s %10s %12s\n", "strategy",
                "frames", "mean_samp", "max_samp", "p50_ms", "p99_ms", "max_ms", "frames/s");
  os << line;
  for (const auto& s : stats) {
    std::snprintf(line, sizeof(line), "%-9s %7d %12.1f %12d %10.4f %10.4f %10.4f %12.1f\n",
                  std::string(to_string(s.strategy)).c_str(), s.frames, s.mean_samples,
                  s.max_samples, s.p50_ms, s.p99_ms, s.max_ms, s.frames_per_second);
    os << line;
  }
  return os.str();
}

}  // namespace pointing::cli
