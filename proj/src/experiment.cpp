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

#include "gmbrl/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <limits>
#include <stdexcept>

#include "gmbrl/csv.hpp"
#include "gmbrl/dp.hpp"

namespace gmbrl {

namespace {

const char* kSeedColumns[] = {"regret_inc",   "regret_cum",      "backup_ops",
                              "update_total", "optimism_margin", "wall_ns"};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    const std::size_t end = text.find(sep, begin);
    if (end == std::string::npos) {
      parts.push_back(text.substr(begin));
      break;
    }
    parts.push_back(text.substr(begin, end - begin));
    begin = end + 1;
  }
  return parts;
}

int parse_positive_int(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const int value = std::stoi(text, &used);
    if (used == text.size() && value > 0) return value;
  } catch (const std::exception&) {
  }
  throw std::invalid_argument("invalid " + what + " '" + text + "'");
}

}  // namespace

void ExperimentConfig::validate() const {
  if (episodes < 1) throw std::invalid_argument("config: episodes must be >= 1");
  if (delta <= 0.0 || delta >= 1.0) throw std::invalid_argument("config: delta must be in (0,1)");
  if (num_seeds < 1) throw std::invalid_argument("config: need at least one seed");
  build_environment(env, reward_kind);  // reject bad specs before any run starts
  if (agent != "rtdp" && agent != "ucrl2" && agent != "ucrl2-gp" && agent != "euler" &&
      agent != "euler-gp") {
    throw std::invalid_argument("config: unknown agent '" + agent + "'");
  }
}

TabularMdp build_environment(const std::string& spec, RewardKind reward_kind) {
  if (spec.ends_with(".mdp.json")) {
    return load_mdp(read_text_file(spec));
  }
  const std::size_t colon = spec.find(':');
  const std::string family = spec.substr(0, colon);
  const std::string args = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (family == "chain") {
    ChainSpec chain;
    chain.length = parse_positive_int(args, "chain length");
    chain.reward_kind = reward_kind;
    return make_chain(chain);
  }
  if (family == "grid") {
    GridChainSpec grid;
    grid.side = parse_positive_int(args, "grid side");
    grid.reward_kind = reward_kind;
    return make_grid_chain(grid);
  }
  if (family == "random") {
    const std::vector<std::string> parts = split(args, ',');
    if (parts.size() != 4 && parts.size() != 5) {
      throw std::invalid_argument("random spec wants S,A,H,branching[,seed]");
    }
    RandomMdpSpec random;
    random.num_states = parse_positive_int(parts[0], "S");
    random.num_actions = parse_positive_int(parts[1], "A");
    random.horizon = parse_positive_int(parts[2], "H");
    random.branching = parse_positive_int(parts[3], "branching");
    random.seed = parts.size() == 5 ? std::stoull(parts[4]) : 0;
    random.reward_kind = reward_kind;
    return make_random_mdp(random);
  }
  throw std::invalid_argument("unknown environment spec '" + spec +
                              "' (chain:N | grid:N | random:S,A,H,B[,seed] | *.mdp.json)");
}

int seed_worker_count(int requested) {
  int workers = requested;
  if (const char* cap_text = std::getenv("GREEDY_MBRL_THREADS")) {
    try {
      const int cap = std::stoi(cap_text);
      if (cap >= 1) workers = std::min(workers, cap);
    } catch (const std::exception&) {
      // Unparseable cap: ignore and use the request.
    }
  }
  return std::max(workers, 1);
}

namespace {

SeedRun run_one_seed(const ExperimentConfig& config, const TabularMdp& mdp,
                     const ValueTable& v_star, int seed_index) {
  SeedRun run;
  run.seed_index = seed_index;
  run.records.reserve(config.episodes);

  const std::uint64_t seed =
      child_seed(config.base_seed, "seed-" + std::to_string(seed_index));
  Rng env_rng(child_seed(seed, "env"));

  std::unique_ptr<Agent> agent =
      make_agent(config.agent, mdp, config.episodes, config.delta, config.clamp_full_planning);
  const double v_star_start = v_star(1, mdp.start_state());
  double cumulative = 0.0;

  for (int k = 1; k <= config.episodes; ++k) {
    const DeterministicPolicy policy = agent->materialize_policy();

    const auto begin = std::chrono::steady_clock::now();
    const EpisodeOutcome outcome = agent->run_episode(env_rng);
    const auto end = std::chrono::steady_clock::now();

    const ValueTable v_pi = evaluate_policy(mdp, policy);
    const double increment = v_star_start - v_pi(1, mdp.start_state());
    if (increment < -1e-9) {
      throw std::runtime_error("regret increment " + std::to_string(increment) +
                               " below -1e-9 at episode " + std::to_string(k) +
                               "; policy evaluation exceeded the optimal value");
    }
    cumulative += increment;

    double margin = std::numeric_limits<double>::infinity();
    const ValueTable& upper = agent->upper_values();
    for (int t = 1; t <= mdp.horizon(); ++t) {
      for (int s = 0; s < mdp.num_states(); ++s) {
        margin = std::min(margin, upper(t, s) - v_star(t, s));
      }
    }

    EpisodeRecord record;
    record.episode = k;
    record.regret_inc = increment;
    record.regret_cum = cumulative;
    record.backup_ops = outcome.q_evals;
    record.update_total = outcome.update_total;
    record.optimism_margin = margin;
    record.wall_ns =
        config.record_wall_time
            ? static_cast<std::uint64_t>(
                  std::chrono::duration_cast<std::chrono::nanoseconds>(end - begin).count())
            : 0;
    run.records.push_back(record);
  }
  return run;
}

}  // namespace

std::vector<SeedRun> run_experiment(const ExperimentConfig& config, const TabularMdp& mdp) {
  config.validate();
  const ValueTable v_star = value_iteration(mdp);

  std::vector<SeedRun> runs(config.num_seeds);
  const int workers = seed_worker_count(config.num_seeds);
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic) num_threads(workers)
  for (int i = 0; i < config.num_seeds; ++i) {
    try {
      runs[i] = run_one_seed(config, mdp, v_star, i);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return runs;
}

std::vector<SeedRun> run_experiment(const ExperimentConfig& config) {
  const TabularMdp mdp = build_environment(config.env, config.reward_kind);
  return run_experiment(config, mdp);
}

std::string render_seed_csv(std::span<const EpisodeRecord> records) {
  std::string out = "episode,regret_inc,regret_cum,backup_ops,update_total,optimism_margin,wall_ns\n";
  for (const EpisodeRecord& r : records) {
    out += std::to_string(r.episode);
    out += ',';
    out += format_number(r.regret_inc);
    out += ',';
    out += format_number(r.regret_cum);
    out += ',';
    out += std::to_string(r.backup_ops);
    out += ',';
    out += format_number(r.update_total);
    out += ',';
    out += format_number(r.optimism_margin);
    out += ',';
    out += std::to_string(r.wall_ns);
    out += '\n';
  }
  return out;
}

namespace {

double record_field(const EpisodeRecord& r, int column) {
  switch (column) {
    case 0: return r.regret_inc;
    case 1: return r.regret_cum;
    case 2: return static_cast<double>(r.backup_ops);
    case 3: return r.update_total;
    case 4: return r.optimism_margin;
    default: return static_cast<double>(r.wall_ns);
  }
}

}  // namespace

std::string render_aggregate_csv(const std::vector<SeedRun>& runs) {
  if (runs.empty()) throw std::invalid_argument("aggregate: no runs");
  const std::size_t episodes = runs.front().records.size();
  for (const SeedRun& run : runs) {
    if (run.records.size() != episodes) {
      throw std::invalid_argument("aggregate: run lengths disagree");
    }
  }

  std::string out = "episode";
  for (const char* name : kSeedColumns) {
    out += ',';
    out += name;
    out += "_mean,";
    out += name;
    out += "_std";
  }
  out += '\n';

  const double n = static_cast<double>(runs.size());
  for (std::size_t k = 0; k < episodes; ++k) {
    out += std::to_string(runs.front().records[k].episode);
    for (int column = 0; column < 6; ++column) {
      double mean = 0.0;
      for (const SeedRun& run : runs) mean += record_field(run.records[k], column);
      mean /= n;
      double var = 0.0;
      for (const SeedRun& run : runs) {
        const double d = record_field(run.records[k], column) - mean;
        var += d * d;
      }
      var /= n;
      out += ',';
      out += format_number(mean);
      out += ',';
      out += format_number(std::sqrt(var));
    }
    out += '\n';
  }
  return out;
}

std::string seed_csv_path(const std::string& dir, const std::string& agent, int seed_index) {
  return dir + "/" + agent + "_seed" + std::to_string(seed_index) + ".csv";
}

std::string aggregate_csv_path(const std::string& dir, const std::string& agent) {
  return dir + "/" + agent + "_aggregate.csv";
}

void write_experiment_csv(const ExperimentConfig& config, const std::vector<SeedRun>& runs,
                          const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  for (const SeedRun& run : runs) {
    write_text_file(seed_csv_path(out_dir, config.agent, run.seed_index),
                    render_seed_csv(run.records));
  }
  write_text_file(aggregate_csv_path(out_dir, config.agent), render_aggregate_csv(runs));
}

std::vector<std::string> find_aggregates(const std::string& dir) {
  std::vector<std::string> paths;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    if (name.ends_with("_aggregate.csv")) paths.push_back(entry.path().string());
  }
  std::sort(paths.begin(), paths.end());
  return paths;
}

std::vector<std::int64_t> pac_counters(std::span<const EpisodeRecord> records,
                                       std::span<const double> eps_grid) {
  std::vector<std::int64_t> counts;
  counts.reserve(eps_grid.size());
  for (double eps : eps_grid) {
    std::int64_t n = 0;
    for (const EpisodeRecord& r : records) {
      if (r.regret_inc > eps) ++n;
    }
    counts.push_back(n);
  }
  return counts;
}

namespace {

std::pair<std::string, double> dir_mean_ops(const std::string& dir) {
  const std::vector<std::string> aggregates = find_aggregates(dir);
  if (aggregates.size() != 1) {
    throw std::invalid_argument("complexity: " + dir + " holds " +
                                std::to_string(aggregates.size()) +
                                " aggregate files; expected exactly one");
  }
  const CsvTable table = read_csv(aggregates.front());
  const int column = table.column("backup_ops_mean");
  if (table.rows.empty()) throw std::invalid_argument("complexity: empty aggregate in " + dir);
  double mean = 0.0;
  for (const auto& row : table.rows) mean += row[column];
  mean /= static_cast<double>(table.rows.size());

  std::string agent = std::filesystem::path(aggregates.front()).filename().string();
  agent.resize(agent.size() - std::string("_aggregate.csv").size());
  return {agent, mean};
}

}  // namespace

ComplexityReport complexity_report(const std::string& dir_a, const std::string& dir_b) {
  ComplexityReport report;
  const auto [agent_a, ops_a] = dir_mean_ops(dir_a);
  const auto [agent_b, ops_b] = dir_mean_ops(dir_b);
  report.agent_a = agent_a;
  report.agent_b = agent_b;
  report.mean_ops_a = ops_a;
  report.mean_ops_b = ops_b;
  report.ratio = ops_a / ops_b;
  return report;
}

}  // namespace gmbrl
