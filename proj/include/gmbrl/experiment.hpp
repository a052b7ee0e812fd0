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

#ifndef GMBRL_EXPERIMENT_HPP_
#define GMBRL_EXPERIMENT_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gmbrl/agent.hpp"
#include "gmbrl/environments.hpp"
#include "gmbrl/mdp.hpp"

namespace gmbrl {

// One experiment: an agent on an environment for a number of episodes,
// repeated over seeds. Seeds run in parallel (the GREEDY_MBRL_THREADS
// environment variable caps the worker count); every run owns its agent,
// model, and RNG, and per-seed RNG streams derive from
// child_seed(base_seed, "seed-<i>") so runs never share draws.
struct ExperimentConfig {
  std::string env = "chain:5";  // chain:N | grid:N | random:S,A,H,B[,seed] | *.mdp.json
  std::string agent = "rtdp";   // rtdp | ucrl2 | ucrl2-gp | euler | euler-gp
  int episodes = 3000;
  double delta = 0.05;
  int num_seeds = 5;
  std::uint64_t base_seed = 0;
  RewardKind reward_kind = RewardKind::kGaussian;
  bool clamp_full_planning = true;
  // Wall time is informational only (the complexity accounting uses backup
  // operation counters); leaving it off keeps reruns byte-identical.
  bool record_wall_time = false;

  void validate() const;  // throws std::invalid_argument
};

// Per-episode accounting. The regret increment is exact dynamic
// programming (V*_1(s_1) minus the evaluated value of the episode's
// materialized policy), never a Monte-Carlo return.
struct EpisodeRecord {
  int episode = 0;  // 1-based
  double regret_inc = 0.0;
  double regret_cum = 0.0;
  std::uint64_t backup_ops = 0;
  double update_total = 0.0;
  double optimism_margin = 0.0;  // min over (s, t) of upper value minus V*
  std::uint64_t wall_ns = 0;
};

struct SeedRun {
  int seed_index = 0;
  std::vector<EpisodeRecord> records;
};

// Parses an environment spec string; file paths ending in .mdp.json load
// the serialized format. The reward kind applies to the generated families
// only (a loaded file already fixes its distributions).
TabularMdp build_environment(const std::string& spec, RewardKind reward_kind);

std::vector<SeedRun> run_experiment(const ExperimentConfig& config);
std::vector<SeedRun> run_experiment(const ExperimentConfig& config, const TabularMdp& mdp);

// CSV layout under an output directory: one `<agent>_seed<i>.csv` per seed
// with header
//   episode,regret_inc,regret_cum,backup_ops,update_total,optimism_margin,wall_ns
// plus `<agent>_aggregate.csv` carrying `_mean`/`_std` columns per metric.
void write_experiment_csv(const ExperimentConfig& config, const std::vector<SeedRun>& runs,
                          const std::string& out_dir);
std::string seed_csv_path(const std::string& dir, const std::string& agent, int seed_index);
std::string aggregate_csv_path(const std::string& dir, const std::string& agent);
std::string render_seed_csv(std::span<const EpisodeRecord> records);
std::string render_aggregate_csv(const std::vector<SeedRun>& runs);

// `*_aggregate.csv` files under a directory, sorted by filename.
std::vector<std::string> find_aggregates(const std::string& dir);

// N_eps for each grid point: the number of episodes whose exact regret
// increment exceeds eps. Nonincreasing in eps.
std::vector<std::int64_t> pac_counters(std::span<const EpisodeRecord> records,
                                       std::span<const double> eps_grid);

// Mean backup operations per episode of the single aggregate in each
// directory, and their ratio. Used to verify the full-planning vs greedy
// cost factor.
struct ComplexityReport {
  std::string agent_a;
  std::string agent_b;
  double mean_ops_a = 0.0;
  double mean_ops_b = 0.0;
  double ratio = 0.0;  // a / b
};
ComplexityReport complexity_report(const std::string& dir_a, const std::string& dir_b);

// Thread cap for the parallel-seed loop (GREEDY_MBRL_THREADS, clamped to
// [1, requested]).
int seed_worker_count(int requested);

}  // namespace gmbrl

#endif  // GMBRL_EXPERIMENT_HPP_
