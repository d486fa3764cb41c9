// Copyright 2026 The asmkit Authors
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

#include "asmkit/harness/experiment.hpp"

#include <fstream>
#include <functional>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

namespace asmkit::harness {

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw std::runtime_error("config error at " + path + ": " + what);
}

double get_num(const json& j, const std::string& path, const char* key,
               double fallback) {
  if (!j.contains(key)) return fallback;
  const json& v = j.at(key);
  if (!v.is_number()) schema_error(path + "." + key, "expected a number");
  return v.get<double>();
}

int get_int(const json& j, const std::string& path, const char* key, int fallback) {
  if (!j.contains(key)) return fallback;
  const json& v = j.at(key);
  if (!v.is_number_integer()) schema_error(path + "." + key, "expected an integer");
  return v.get<int>();
}

std::string get_str(const json& j, const std::string& path, const char* key,
                    const std::string& fallback) {
  if (!j.contains(key)) return fallback;
  const json& v = j.at(key);
  if (!v.is_string()) schema_error(path + "." + key, "expected a string");
  return v.get<std::string>();
}

RewardKind parse_reward(const std::string& s, const std::string& path) {
  if (s == "sdf") return RewardKind::SdfQuery;
  if (s == "sixdof_keypoints") return RewardKind::SixDofKeypoints;
  if (s == "collinear_keypoints") return RewardKind::CollinearKeypoints;
  if (s == "chamfer") return RewardKind::Chamfer;
  schema_error(path, "unknown reward kind '" + s + "'");
}

sapu::Strategy parse_strategy(const std::string& s, const std::string& path) {
  if (s == "baseline") return sapu::Strategy::Baseline;
  if (s == "filter_only") return sapu::Strategy::FilterOnly;
  if (s == "weight_only") return sapu::Strategy::WeightOnly;
  if (s == "filter_and_weight") return sapu::Strategy::FilterAndWeight;
  schema_error(path, "unknown sapu strategy '" + s + "'");
}

curriculum::Mode parse_mode(const std::string& s, const std::string& path) {
  if (s == "none") return curriculum::Mode::None;
  if (s == "standard") return curriculum::Mode::Standard;
  if (s == "sampling") return curriculum::Mode::Sampling;
  schema_error(path, "unknown curriculum mode '" + s + "'");
}

const char* strategy_name(sapu::Strategy s) {
  switch (s) {
    case sapu::Strategy::Baseline: return "baseline";
    case sapu::Strategy::FilterOnly: return "filter_only";
    case sapu::Strategy::WeightOnly: return "weight_only";
    case sapu::Strategy::FilterAndWeight: return "filter_and_weight";
  }
  return "?";
}

const char* mode_name(curriculum::Mode m) {
  switch (m) {
    case curriculum::Mode::None: return "none";
    case curriculum::Mode::Standard: return "standard";
    case curriculum::Mode::Sampling: return "sampling";
  }
  return "?";
}

const char* scheme_name(control::Scheme s) {
  switch (s) {
    case control::Scheme::Nominal: return "nominal";
    case control::Scheme::Pid: return "pid";
    case control::Scheme::Plai: return "plai";
    case control::Scheme::LeakyPlai: return "leaky_plai";
  }
  return "?";
}

const char* disturbance_name(control::DisturbanceKind d) {
  switch (d) {
    case control::DisturbanceKind::Ideal: return "ideal";
    case control::DisturbanceKind::Friction: return "friction";
    case control::DisturbanceKind::Gravity: return "gravity";
  }
  return "?";
}

double dense_weight_for(RewardKind kind) {
  return kind == RewardKind::SdfQuery ? 10.0 : 1.0;
}

double mean(const std::vector<double>& v) {
  if (v.empty()) return 0.0;
  return std::accumulate(v.begin(), v.end(), 0.0) / v.size();
}

struct TrainRows {
  std::string variant;
  std::uint64_t seed;
  std::vector<TrainRecord> records;
};

void write_training_csv(const std::filesystem::path& path,
                        const std::vector<TrainRows>& rows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out.precision(17);
  out << "variant,seed,iteration,mean_return,success_rate,engagement_rate,"
         "z_low_m,sapu_inclusion\n";
  for (const auto& tr : rows) {
    for (const auto& r : tr.records) {
      out << tr.variant << ',' << tr.seed << ',' << r.iteration << ','
          << r.mean_return << ',' << r.success_rate << ',' << r.engagement_rate
          << ',' << r.z_low << ',' << r.sapu_inclusion << '\n';
    }
  }
}

}  // namespace

ExperimentConfig load_experiment_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config: " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::runtime_error("config parse error in " + path.string() + ": " +
                             e.what());
  }

  ExperimentConfig cfg;
  cfg.name = get_str(j, "$", "name", "experiment");
  const std::string kind = get_str(j, "$", "experiment", "");
  if (kind == "reward-ablation") {
    cfg.kind = ExperimentKind::RewardAblation;
  } else if (kind == "sapu-ablation") {
    cfg.kind = ExperimentKind::SapuAblation;
  } else if (kind == "curriculum-ablation") {
    cfg.kind = ExperimentKind::CurriculumAblation;
  } else if (kind == "control-ablation") {
    cfg.kind = ExperimentKind::ControlAblation;
  } else {
    schema_error("$.experiment", "unknown experiment '" + kind + "'");
  }

  if (j.contains("assets")) {
    const json& a = j.at("assets");
    const std::string shape = get_str(a, "$.assets", "kind", "round");
    if (shape == "round") {
      cfg.asset.kind = geom::BoreShape::Round;
    } else if (shape == "rect") {
      cfg.asset.kind = geom::BoreShape::Rect;
    } else {
      schema_error("$.assets.kind", "expected 'round' or 'rect'");
    }
    cfg.asset.size = get_num(a, "$.assets", "size_m", cfg.asset.size);
    cfg.asset.clearance = get_num(a, "$.assets", "clearance_m", cfg.asset.clearance);
    if (cfg.asset.size <= 0.0 || cfg.asset.clearance <= 0.0) {
      schema_error("$.assets", "size_m and clearance_m must be > 0");
    }
  }

  if (j.contains("reward")) {
    const json& r = j.at("reward");
    cfg.env.reward = parse_reward(get_str(r, "$.reward", "kind", "sdf"), "$.reward.kind");
    cfg.env.sdf_floor = get_num(r, "$.reward", "sdf_floor_m", cfg.env.sdf_floor);
    cfg.env.success_bonus = get_num(r, "$.reward", "success_bonus", cfg.env.success_bonus);
  }

  if (j.contains("env")) {
    const json& e = j.at("env");
    cfg.env.horizon = get_int(e, "$.env", "horizon", cfg.env.horizon);
    cfg.env.contact_tol = get_num(e, "$.env", "contact_tol_m", cfg.env.contact_tol);
    const double pos_scale =
        get_num(e, "$.env", "pos_action_scale_m", cfg.env.pos_action_scale.x());
    cfg.env.pos_action_scale.setConstant(pos_scale);
    cfg.env.rot_action_scale =
        get_num(e, "$.env", "rot_action_scale_rad", cfg.env.rot_action_scale);
    cfg.env.randomization.plug_xy_half_range =
        get_num(e, "$.env", "xy_half_range_m", cfg.env.randomization.plug_xy_half_range);
    cfg.env.randomization.obs_noise_half_range =
        get_num(e, "$.env", "obs_noise_m", cfg.env.randomization.obs_noise_half_range);
  }

  if (j.contains("sapu")) {
    const json& s = j.at("sapu");
    cfg.sapu.strategy = parse_strategy(
        get_str(s, "$.sapu", "strategy", "filter_and_weight"), "$.sapu.strategy");
    cfg.sapu.eps_ip = get_num(s, "$.sapu", "eps_ip_m", cfg.sapu.eps_ip);
    cfg.sapu.eps_d = get_num(s, "$.sapu", "eps_d_m", cfg.sapu.eps_d);
  }

  if (j.contains("curriculum")) {
    const json& c = j.at("curriculum");
    cfg.curriculum.mode =
        parse_mode(get_str(c, "$.curriculum", "mode", "sampling"), "$.curriculum.mode");
    cfg.curriculum.z_low = get_num(c, "$.curriculum", "z_low_m", cfg.curriculum.z_low);
    cfg.curriculum.z_high = get_num(c, "$.curriculum", "z_high_m", cfg.curriculum.z_high);
    cfg.curriculum.z_low_min = cfg.curriculum.z_low;
    cfg.curriculum.z_low_max = cfg.curriculum.z_high;
    cfg.curriculum.dz_inc = get_num(c, "$.curriculum", "dz_inc_m", cfg.curriculum.dz_inc);
    cfg.curriculum.dz_dec = get_num(c, "$.curriculum", "dz_dec_m", cfg.curriculum.dz_dec);
  }

  if (j.contains("trainer")) {
    const json& t = j.at("trainer");
    cfg.trainer.iterations = get_int(t, "$.trainer", "iterations", cfg.trainer.iterations);
    cfg.trainer.population = get_int(t, "$.trainer", "population", cfg.trainer.population);
    cfg.trainer.elite_fraction =
        get_num(t, "$.trainer", "elite_fraction", cfg.trainer.elite_fraction);
    cfg.trainer.episodes_per_candidate = get_int(
        t, "$.trainer", "episodes_per_candidate", cfg.trainer.episodes_per_candidate);
    cfg.trainer.eval_episodes =
        get_int(t, "$.trainer", "eval_episodes", cfg.trainer.eval_episodes);
  }

  if (j.contains("control")) {
    const json& c = j.at("control");
    cfg.control_trials = get_int(c, "$.control", "trials", cfg.control_trials);
    cfg.control_goals = get_int(c, "$.control", "goals", cfg.control_goals);
    cfg.reach.control_steps =
        get_int(c, "$.control", "control_steps", cfg.reach.control_steps);
    cfg.reach.friction_force =
        get_num(c, "$.control", "friction_force_n", cfg.reach.friction_force);
    cfg.reach.gravity_accel =
        get_num(c, "$.control", "gravity_accel", cfg.reach.gravity_accel);
  }

  if (j.contains("seeds")) {
    const json& s = j.at("seeds");
    if (!s.is_array() || s.empty()) schema_error("$.seeds", "expected a non-empty array");
    cfg.seeds.clear();
    for (const auto& v : s) {
      if (!v.is_number_integer()) schema_error("$.seeds", "expected integers");
      cfg.seeds.push_back(v.get<std::uint64_t>());
    }
  }
  return cfg;
}

namespace {

// Shared loop for the three learning ablations: train each variant on each
// seed, collect final evaluation rates.
ExperimentResult run_learning_ablation(
    const ExperimentConfig& config, const std::filesystem::path& out_dir,
    int threads,
    const std::vector<std::pair<std::string,
                                std::function<void(ExperimentConfig&)>>>& variants) {
  ExperimentResult result;
  result.config = config;
  const auto assets = make_toy_assets(config.asset);
  std::vector<TrainRows> rows;

  for (const auto& [variant_name, apply_variant] : variants) {
    VariantSummary summary;
    summary.variant = variant_name;
    for (std::uint64_t seed : config.seeds) {
      ExperimentConfig vc = config;
      apply_variant(vc);
      vc.env.dense_weight = dense_weight_for(vc.env.reward);
      vc.trainer.seed = mix_seed({seed, std::hash<std::string>{}(variant_name)});
      if (threads > 0) vc.trainer.threads = threads;
      const TrainResult train =
          cem_train(assets, vc.env, vc.sapu, vc.curriculum, vc.trainer);
      summary.final_success.push_back(train.final_success_rate);
      summary.final_engagement.push_back(train.final_engagement_rate);
      rows.push_back({variant_name, seed, train.records});
    }
    summary.mean_success = mean(summary.final_success);
    result.variants.push_back(std::move(summary));
  }

  std::filesystem::create_directories(out_dir);
  result.records_csv = out_dir / "records.csv";
  write_training_csv(result.records_csv, rows);

  json summary;
  summary["name"] = config.name;
  summary["eps_k_scaled_m"] = assets->eps_k;
  for (const auto& v : result.variants) {
    summary["variants"][v.variant] = {
        {"final_success", v.final_success},
        {"final_engagement", v.final_engagement},
        {"mean_success", v.mean_success},
    };
  }
  result.summary_json = out_dir / "summary.json";
  std::ofstream(result.summary_json) << summary.dump(2) << '\n';
  return result;
}

ExperimentResult run_control_ablation(const ExperimentConfig& config,
                                      const std::filesystem::path& out_dir) {
  ExperimentResult result;
  result.config = config;

  std::filesystem::create_directories(out_dir);
  result.records_csv = out_dir / "records.csv";
  std::ofstream csv(result.records_csv);
  csv.precision(17);
  csv << "variant,disturbance,goal,trial,steady_state_error_m\n";

  json summary;
  summary["name"] = config.name;

  const std::vector<control::Scheme> schemes = {
      control::Scheme::Nominal, control::Scheme::Pid, control::Scheme::Plai};
  const std::vector<control::DisturbanceKind> conditions = {
      control::DisturbanceKind::Ideal, control::DisturbanceKind::Friction,
      control::DisturbanceKind::Gravity};

  // Fixed goal set; trials jitter the start pose.
  std::vector<Pose6D> goals;
  for (int g = 0; g < config.control_goals; ++g) {
    Rng rng(mix_seed({0x60A15, static_cast<std::uint64_t>(g)}));
    goals.emplace_back(
        Eigen::Vector3d(rng.uniform(-0.05, 0.05), rng.uniform(-0.05, 0.05),
                        rng.uniform(-0.05, 0.05)),
        quaternion_from_rotation_vector({0.0, 0.0, rng.uniform(-0.1, 0.1)}));
  }

  // PID integral gain tuned per condition; grid reported in the summary.
  std::map<std::string, double> pid_ki;
  for (auto cond : conditions) {
    control::ReachConfig tune = config.reach;
    tune.scheme = control::Scheme::Pid;
    tune.disturbance = cond;
    tune.goal = goals[0];
    tune.pos_action_scale = control::default_pos_action_scale(control::Scheme::Pid);
    tune.rot_action_scale = control::default_rot_action_scale(control::Scheme::Pid);
    const control::PidTuneResult tuned = control::tune_pid(tune, 6, 0xBEEF);
    pid_ki[disturbance_name(cond)] = tuned.best_ki;
    json grid = json::array();
    for (const auto& [ki, err] : tuned.grid) grid.push_back({ki, err});
    summary["pid_grid"][disturbance_name(cond)] = grid;
  }

  for (auto scheme : schemes) {
    VariantSummary vs;
    vs.variant = scheme_name(scheme);
    for (auto cond : conditions) {
      std::vector<double> errors;
      for (int g = 0; g < static_cast<int>(goals.size()); ++g) {
        for (int t = 0; t < config.control_trials; ++t) {
          control::ReachConfig rc = config.reach;
          rc.scheme = scheme;
          rc.disturbance = cond;
          rc.goal = goals[g];
          rc.pos_action_scale = control::default_pos_action_scale(scheme);
          rc.rot_action_scale = control::default_rot_action_scale(scheme);
          if (scheme == control::Scheme::Pid) {
            rc.controller.ki =
                control::Vector6d::Constant(pid_ki[disturbance_name(cond)]);
          }
          Rng rng(mix_seed({0x7125A1, static_cast<std::uint64_t>(g),
                            static_cast<std::uint64_t>(t)}));
          rc.start.position = Eigen::Vector3d(rng.uniform(-0.02, 0.02),
                                              rng.uniform(-0.02, 0.02),
                                              rng.uniform(-0.02, 0.02));
          const double err = control::run_reach_episode(rc).steady_state_error;
          errors.push_back(err);
          csv << vs.variant << ',' << disturbance_name(cond) << ',' << g << ','
              << t << ',' << err << '\n';
        }
      }
      vs.steady_state_error[disturbance_name(cond)] = mean(errors);
    }
    result.variants.push_back(vs);
  }

  for (const auto& v : result.variants) {
    for (const auto& [cond, err] : v.steady_state_error) {
      summary["variants"][v.variant][cond] = err;
    }
  }
  result.summary_json = out_dir / "summary.json";
  std::ofstream(result.summary_json) << summary.dump(2) << '\n';
  return result;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& config,
                                const std::filesystem::path& out_dir,
                                int threads) {
  using Variant = std::pair<std::string, std::function<void(ExperimentConfig&)>>;
  switch (config.kind) {
    case ExperimentKind::RewardAblation: {
      std::vector<Variant> variants;
      for (RewardKind k :
           {RewardKind::SdfQuery, RewardKind::SixDofKeypoints,
            RewardKind::CollinearKeypoints, RewardKind::Chamfer}) {
        variants.emplace_back(reward_kind_name(k),
                              [k](ExperimentConfig& c) { c.env.reward = k; });
      }
      return run_learning_ablation(config, out_dir, threads, variants);
    }
    case ExperimentKind::SapuAblation: {
      std::vector<Variant> variants;
      for (sapu::Strategy s :
           {sapu::Strategy::Baseline, sapu::Strategy::FilterOnly,
            sapu::Strategy::WeightOnly, sapu::Strategy::FilterAndWeight}) {
        variants.emplace_back(strategy_name(s),
                              [s](ExperimentConfig& c) { c.sapu.strategy = s; });
      }
      return run_learning_ablation(config, out_dir, threads, variants);
    }
    case ExperimentKind::CurriculumAblation: {
      std::vector<Variant> variants;
      for (curriculum::Mode m :
           {curriculum::Mode::None, curriculum::Mode::Standard,
            curriculum::Mode::Sampling}) {
        variants.emplace_back(mode_name(m),
                              [m](ExperimentConfig& c) { c.curriculum.mode = m; });
      }
      return run_learning_ablation(config, out_dir, threads, variants);
    }
    case ExperimentKind::ControlAblation:
      return run_control_ablation(config, out_dir);
  }
  throw std::logic_error("unknown experiment kind");
}

ExperimentResult run_experiment(const std::filesystem::path& config_path,
                                const std::filesystem::path& out_dir,
                                int threads) {
  return run_experiment(load_experiment_config(config_path), out_dir, threads);
}

}  // namespace asmkit::harness
