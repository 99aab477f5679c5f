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

// pointing: pointing-gesture estimation from face/hand detections with depth.
//
//   pointing estimate     frame log (JSON lines) -> estimate records
//   pointing simulate     synthetic frame log from a scenario
//   pointing experiment-a pointing-angle accuracy grid (CSV + SVG heatmap)
//   pointing experiment-b floor-target goal error table (CSV + text)
//   pointing bench        per-frame latency of the geometry pipeline

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "pointing/cli/commands.hpp"

namespace {

using namespace pointing;
using namespace pointing::cli;

void add_estimator_flags(CLI::App* cmd, RunConfig& cfg, std::string& strategy) {
  cmd->add_option("--strategy", strategy, "Keypoint strategy: mean|median|closest|dbscan")
      ->capture_default_str();
  cmd->add_option("--eps", cfg.estimator.roi.eps, "DBSCAN depth neighborhood (m)")
      ->capture_default_str();
  cmd->add_option("--min-pts", cfg.estimator.roi.min_pts, "DBSCAN core point threshold")
      ->capture_default_str();
  cmd->add_option("--cobb-ratio", cfg.estimator.roi.cobb_ratio,
                  "CoBB radius as a fraction of min(bbox width, height), in (0, 0.5]")
      ->capture_default_str();
  cmd->add_option("--intrinsics", cfg.intrinsics_path,
                  "Intrinsics JSON {fx,fy,cx,cy,width,height,camera_height[,hfov_deg]}; "
                  "default 640x480, 68 deg hfov, camera 1.2 m above ground");
  cmd->add_flag("--serial", [&cfg](std::int64_t) { cfg.execution = Execution::kSerial; },
                "Use the serial reference path instead of OpenMP");
}

void add_scenario_flags(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--scenario", cfg.scenario_path, "Scenario JSON (default: built-in grid)");
  cmd->add_option("--seed", cfg.seed, "Override the scenario seed");
  cmd->add_option("--frames-per-pose", cfg.frames_per_pose, "Override frames per pose");
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path.string());
  out << content;
}

KeypointStrategy strategy_or_throw(const std::string& name) {
  if (auto s = parse_strategy(name)) return *s;
  throw ConfigError("unknown strategy '" + name + "' (mean|median|closest|dbscan)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pointing-gesture estimation from face/hand detections with sparse depth"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string strategy = "mean";
  std::string gate_mode = "goal";
  double tracker_gate_min = cfg.tracker.gate_min;

  auto* estimate = app.add_subcommand("estimate", "Estimate pointing vectors from a frame log");
  add_estimator_flags(estimate, cfg, strategy);
  estimate->add_option("-i,--input", cfg.input, "Frame log, '-' for stdin")->capture_default_str();
  estimate->add_option("-o,--output", cfg.output, "Estimate stream, '-' for stdout")
      ->capture_default_str();
  estimate->add_flag("--track", cfg.track, "Smooth detections with the Kalman filter bank");
  estimate->add_option("--accel-noise", cfg.tracker.accel_noise, "Tracker process noise (px/s^2)")
      ->capture_default_str();
  estimate->add_option("--meas-noise", cfg.tracker.measurement_noise,
                       "Tracker measurement noise (px)")
      ->capture_default_str();
  estimate->add_option("--gate-min", tracker_gate_min, "Minimum association gate (px)")
      ->capture_default_str();
  estimate->add_option("--gate-max", cfg.tracker.gate_max, "Maximum association gate (px)")
      ->capture_default_str();
  estimate->add_option("--max-misses", cfg.tracker.max_misses,
                       "Frames a track may go unmatched before removal")
      ->capture_default_str();
  estimate->add_option("--window", cfg.gate.window, "Goal commit window size (frames)")
      ->capture_default_str();
  estimate->add_option("--tau", cfg.gate.tau, "Goal covariance trace threshold (m^2)")
      ->capture_default_str();
  estimate->add_option("--tau-angle", cfg.gate.tau_angle,
                       "Direction covariance trace threshold (deg^2)")
      ->capture_default_str();
  estimate->add_option("--gate-mode", gate_mode, "Commit gate on 'goal' or 'direction' covariance")
      ->capture_default_str();

  auto* simulate = app.add_subcommand("simulate", "Write a synthetic frame log");
  add_estimator_flags(simulate, cfg, strategy);
  add_scenario_flags(simulate, cfg);
  bool floor = false;
  std::string truth_path;
  simulate->add_option("-o,--output", cfg.output, "Frame log, '-' for stdout")
      ->capture_default_str();
  simulate->add_option("--truth", truth_path, "Also write ground truth JSON lines here");
  simulate->add_flag("--floor-targets", floor, "Simulate floor targets instead of directions");

  auto* exp_a = app.add_subcommand("experiment-a", "Pointing-angle accuracy over the pose grid");
  add_estimator_flags(exp_a, cfg, strategy);
  add_scenario_flags(exp_a, cfg);
  exp_a->add_option("--out-dir", cfg.out_dir, "Directory for CSV and SVG")->capture_default_str();

  auto* exp_b = app.add_subcommand("experiment-b", "Floor-target goal error per distance");
  add_estimator_flags(exp_b, cfg, strategy);
  add_scenario_flags(exp_b, cfg);
  exp_b->add_option("--out-dir", cfg.out_dir, "Directory for the CSV")->capture_default_str();

  BenchOptions bench_opts;
  auto* bench = app.add_subcommand("bench", "Per-frame latency of the geometry pipeline");
  add_estimator_flags(bench, cfg, strategy);
  bench->add_option("--frames", bench_opts.frames, "Frames to time")->capture_default_str();
  bench->add_option("--max-samples", bench_opts.max_samples, "Depth samples per frame cap")
      ->capture_default_str();
  bench->add_option("--seed", bench_opts.seed, "Frame generator seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    cfg.estimator.strategy = strategy_or_throw(strategy);
    cfg.tracker.gate_min = tracker_gate_min;
    if (gate_mode == "goal") {
      cfg.gate.mode = GateMode::kGoal;
    } else if (gate_mode == "direction") {
      cfg.gate.mode = GateMode::kDirection;
    } else {
      throw ConfigError("gate mode must be 'goal' or 'direction'");
    }
    cfg.validate();
    const CameraIntrinsics intr = intrinsics_for(cfg);

    if (*estimate) {
      std::ifstream file_in;
      std::istream* in = &std::cin;
      if (cfg.input != "-") {
        file_in.open(cfg.input);
        if (!file_in) throw InputError("cannot open input: " + cfg.input);
        in = &file_in;
      }
      std::ofstream file_out;
      std::ostream* out = &std::cout;
      if (cfg.output != "-") {
        file_out.open(cfg.output);
        if (!file_out) throw ConfigError("cannot open output: " + cfg.output);
        out = &file_out;
      }
      const auto summary = run_estimate(*in, *out, std::cerr, cfg, intr);
      std::cerr << format_summary(summary) << '\n';
    } else if (*simulate) {
      const auto scenario = scenario_for(cfg, intr);
      std::ofstream file_out;
      std::ostream* out = &std::cout;
      if (cfg.output != "-") {
        file_out.open(cfg.output);
        if (!file_out) throw ConfigError("cannot open output: " + cfg.output);
        out = &file_out;
      }
      std::ofstream truth;
      if (!truth_path.empty()) {
        truth.open(truth_path);
        if (!truth) throw ConfigError("cannot open truth output: " + truth_path);
      }
      const auto n = run_simulate(scenario, intr, floor, *out, truth_path.empty() ? nullptr : &truth);
      std::cerr << "wrote " << n << " frames\n";
    } else if (*exp_a) {
      const auto scenario = scenario_for(cfg, intr);
      std::filesystem::create_directories(cfg.out_dir);
      const auto artifacts = run_experiment_a_artifacts(scenario, cfg, intr);
      const std::filesystem::path dir(cfg.out_dir);
      write_file(dir / "experiment_a.csv", artifacts.csv);
      write_file(dir / "experiment_a_heatmap.svg", artifacts.svg);
      std::cout << "wrote " << (dir / "experiment_a.csv").string() << " and "
                << (dir / "experiment_a_heatmap.svg").string() << '\n';
    } else if (*exp_b) {
      const auto scenario = scenario_for(cfg, intr);
      std::filesystem::create_directories(cfg.out_dir);
      const auto artifacts = run_experiment_b_artifacts(scenario, cfg, intr);
      const std::filesystem::path dir(cfg.out_dir);
      write_file(dir / "experiment_b.csv", artifacts.csv);
      write_file(dir / "experiment_b.txt", artifacts.table);
      std::cout << artifacts.table;
    } else if (*bench) {
      if (bench_opts.frames < 1 || bench_opts.max_samples < 1) {
        throw ConfigError("--frames and --max-samples must be positive");
      }
      std::cout << format_bench(run_bench(bench_opts, cfg.estimator.roi, intr));
      // An empty frame must pass straight through.
      const auto empty = estimate_frame(DetectionFrame{}, cfg.estimator, intr);
      std::cout << "empty frame: " << (empty.reason ? to_string(*empty.reason) : "ok") << '\n';
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitOk;
}
