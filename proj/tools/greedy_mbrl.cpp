// Copyright 2026 The greedy-mbrl Authors. All rights reserved.
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

#include <cstdio>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "gmbrl/csv.hpp"
#include "gmbrl/dbp.hpp"
#include "gmbrl/experiment.hpp"
#include "gmbrl/svg_plot.hpp"

namespace {

constexpr int kExitValidation = 2;

gmbrl::RewardKind parse_reward_kind(const std::string& name) {
  if (name == "gaussian") return gmbrl::RewardKind::kGaussian;
  if (name == "bernoulli") return gmbrl::RewardKind::kBernoulli;
  if (name == "deterministic") return gmbrl::RewardKind::kDeterministic;
  throw std::invalid_argument("unknown reward kind '" + name + "'");
}

gmbrl::DbpGenerator parse_generator(const std::string& spec) {
  const std::size_t colon = spec.find(':');
  if (colon == std::string::npos) {
    throw std::invalid_argument("generator spec wants kind:param, e.g. geom:0.5");
  }
  const std::string kind = spec.substr(0, colon);
  gmbrl::DbpGenerator generator;
  generator.param = std::stod(spec.substr(colon + 1));
  if (kind == "geom") {
    generator.kind = gmbrl::DbpGenerator::Kind::kGeometricDrop;
    if (generator.param < 0.0 || generator.param > 1.0) {
      throw std::invalid_argument("geom drop probability must be in [0,1]");
    }
  } else if (kind == "mult") {
    generator.kind = gmbrl::DbpGenerator::Kind::kMultiplicativeDecay;
    if (generator.param < 0.0 || generator.param > 1.0) {
      throw std::invalid_argument("mult decay floor must be in [0,1]");
    }
  } else {
    throw std::invalid_argument("unknown generator '" + kind + "' (geom | mult)");
  }
  return generator;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-horizon tabular MDP benchmarking: greedy (1-step planning) "
               "model-based agents, their full-planning baselines, and exact "
               "regret/PAC/complexity accounting."};
  app.require_subcommand(1);

  // run
  auto* run = app.add_subcommand("run", "run an agent over seeds and write CSVs");
  gmbrl::ExperimentConfig config;
  std::string rewards = "gaussian";
  std::string out_dir;
  bool no_clamp = false;
  run->add_option("--env", config.env, "chain:N | grid:N | random:S,A,H,B[,seed] | *.mdp.json")
      ->required();
  run->add_option("--agent", config.agent, "rtdp | ucrl2 | ucrl2-gp | euler | euler-gp")
      ->required();
  run->add_option("--episodes", config.episodes, "episodes per seed");
  run->add_option("--delta", config.delta, "confidence level in (0,1)");
  run->add_option("--seeds", config.num_seeds, "number of seeds");
  run->add_option("--seed", config.base_seed, "base seed the per-run streams derive from");
  run->add_option("--rewards", rewards, "gaussian | bernoulli | deterministic");
  run->add_option("--out", out_dir, "output directory")->required();
  run->add_flag("--no-clamp", no_clamp, "disable clamping full-planning values (sensitivity)");
  run->add_flag("--timing", config.record_wall_time,
                "record wall time per episode (reruns then differ byte-wise)");

  // plot
  auto* plot = app.add_subcommand("plot", "render aggregate CSVs as an SVG");
  std::string plot_in;
  std::string plot_out;
  plot->add_option("--in", plot_in, "directory holding *_aggregate.csv files")->required();
  plot->add_option("--out", plot_out, "output SVG path")->required();

  // dbp-verify
  auto* dbp = app.add_subcommand("dbp-verify", "Monte-Carlo check of the decreasing-process bound");
  std::string generator_spec = "geom:0.5";
  double bound_c = 1.0;
  double dbp_delta = 0.05;
  int trials = 2000;
  int rounds = 1000;
  std::uint64_t dbp_seed = 0;
  dbp->add_option("--gen", generator_spec, "geom:q | mult:alpha");
  dbp->add_option("--c", bound_c, "process bound C");
  dbp->add_option("--delta", dbp_delta, "confidence level in (0,1)");
  dbp->add_option("--trials", trials, "Monte-Carlo trials");
  dbp->add_option("--rounds", rounds, "steps per trial");
  dbp->add_option("--seed", dbp_seed, "base seed");

  // complexity
  auto* complexity = app.add_subcommand("complexity", "compare backup-operation counters");
  std::string dir_a;
  std::string dir_b;
  complexity->add_option("--in", dir_a, "run directory (numerator)")->required();
  complexity->add_option("--vs", dir_b, "run directory (denominator)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : kExitValidation;
  }

  try {
    if (*run) {
      config.reward_kind = parse_reward_kind(rewards);
      config.clamp_full_planning = !no_clamp;
      config.validate();
      const std::vector<gmbrl::SeedRun> runs = gmbrl::run_experiment(config);
      gmbrl::write_experiment_csv(config, runs, out_dir);
      std::printf("%s on %s: %d seeds x %d episodes -> %s\n", config.agent.c_str(),
                  config.env.c_str(), config.num_seeds, config.episodes, out_dir.c_str());
      double final_mean = 0.0;
      for (const gmbrl::SeedRun& r : runs) final_mean += r.records.back().regret_cum;
      final_mean /= static_cast<double>(runs.size());
      std::printf("final regret (seed mean): %s\n", gmbrl::format_number(final_mean).c_str());
    } else if (*plot) {
      gmbrl::write_text_file(plot_out, gmbrl::plot_from_directory(plot_in));
      std::printf("wrote %s\n", plot_out.c_str());
    } else if (*dbp) {
      const gmbrl::DbpGenerator generator = parse_generator(generator_spec);
      const gmbrl::BoundCheck check =
          gmbrl::verify_bound(generator, bound_c, dbp_delta, trials, rounds, dbp_seed);
      std::printf("threshold 9C ln(3/delta) = %.6f: %d/%d violations (frequency %.6f)\n",
                  check.threshold, check.violations, check.trials, check.frequency());
      std::printf("threshold C(1+2sqrt(ln(2/delta)))^2 = %.6f: %d/%d violations (frequency %.6f)\n",
                  check.threshold_sharp, check.violations_sharp, check.trials,
                  check.frequency_sharp());
      std::printf("delta = %.6f -> %s\n", dbp_delta,
                  check.frequency() <= dbp_delta ? "within budget" : "EXCEEDS budget");
    } else if (*complexity) {
      const gmbrl::ComplexityReport report = gmbrl::complexity_report(dir_a, dir_b);
      std::printf("%-12s mean backup_ops/episode: %s\n", report.agent_a.c_str(),
                  gmbrl::format_number(report.mean_ops_a).c_str());
      std::printf("%-12s mean backup_ops/episode: %s\n", report.agent_b.c_str(),
                  gmbrl::format_number(report.mean_ops_b).c_str());
      std::printf("ratio: %s\n", gmbrl::format_number(report.ratio).c_str());
    }
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitValidation;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
