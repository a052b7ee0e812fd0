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

#include <cstdlib>
#include <filesystem>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "gmbrl/csv.hpp"
#include "gmbrl/experiment.hpp"
#include "gmbrl/svg_plot.hpp"

using namespace gmbrl;

namespace {

const std::string kFixtureDir = GMBRL_TEST_FIXTURE_DIR;

std::string fresh_dir(const std::string& tag) {
  const std::string path =
      (std::filesystem::temp_directory_path() / ("gmbrl_test_" + tag)).string();
  std::filesystem::remove_all(path);
  std::filesystem::create_directories(path);
  return path;
}

}  // namespace

TEST_CASE("environment spec parsing") {
  CHECK(build_environment("chain:7", RewardKind::kGaussian).num_states() == 7);
  CHECK(build_environment("grid:4", RewardKind::kGaussian).num_states() == 16);
  const TabularMdp random = build_environment("random:5,3,4,2,99", RewardKind::kBernoulli);
  CHECK(random.num_states() == 5);
  CHECK(random.num_actions() == 3);
  CHECK(random.max_support() == 2);

  CHECK_THROWS_AS(build_environment("chain", RewardKind::kGaussian), std::invalid_argument);
  CHECK_THROWS_AS(build_environment("chain:x", RewardKind::kGaussian), std::invalid_argument);
  CHECK_THROWS_AS(build_environment("maze:4", RewardKind::kGaussian), std::invalid_argument);
  CHECK_THROWS_AS(build_environment("random:5,3", RewardKind::kGaussian), std::invalid_argument);

  // Serialized environments load through the same entry point.
  CHECK(build_environment(kFixtureDir + "/chain3.mdp.json", RewardKind::kGaussian)
            .num_states() == 3);
}

TEST_CASE("config validation rejects nonsense") {
  ExperimentConfig config;
  config.env = "chain:4";
  config.agent = "rtdp";
  config.episodes = 0;
  CHECK_THROWS_AS(config.validate(), std::invalid_argument);
  config.episodes = 10;
  config.delta = 1.5;
  CHECK_THROWS_AS(config.validate(), std::invalid_argument);
  config.delta = 0.1;
  config.agent = "sarsa";
  CHECK_THROWS_AS(config.validate(), std::invalid_argument);
  config.agent = "rtdp";
  CHECK_NOTHROW(config.validate());
}

TEST_CASE("exact-model agent on a one-state environment has zero regret") {
  ExperimentConfig config;
  config.env = "random:1,2,3,1";
  config.agent = "rtdp";
  config.episodes = 10;
  config.num_seeds = 1;
  const std::vector<SeedRun> runs = run_experiment(config);
  REQUIRE(runs.size() == 1);
  for (std::size_t k = 1; k < runs[0].records.size(); ++k) {
    CHECK(runs[0].records[k].regret_inc == 0.0);
  }
}

TEST_CASE("reruns are byte-identical") {
  ExperimentConfig config;
  config.env = "chain:4";
  config.agent = "ucrl2-gp";
  config.episodes = 40;
  config.num_seeds = 2;
  config.delta = 0.1;

  const std::vector<SeedRun> first = run_experiment(config);
  const std::vector<SeedRun> second = run_experiment(config);
  CHECK(render_aggregate_csv(first) == render_aggregate_csv(second));
  for (int i = 0; i < 2; ++i) {
    CHECK(render_seed_csv(first[i].records) == render_seed_csv(second[i].records));
  }
}

TEST_CASE("regret accounting invariants hold for every agent") {
  for (const char* agent : {"rtdp", "ucrl2", "ucrl2-gp", "euler", "euler-gp"}) {
    ExperimentConfig config;
    config.env = "chain:4";
    config.agent = agent;
    config.episodes = 50;
    config.num_seeds = 1;
    config.delta = 0.1;
    const std::vector<SeedRun> runs = run_experiment(config);
    double previous = 0.0;
    for (const EpisodeRecord& record : runs[0].records) {
      CHECK(record.regret_inc >= -1e-9);
      CHECK(record.regret_cum >= previous);
      previous = record.regret_cum;
      CHECK(record.optimism_margin >= -1e-9);
      CHECK(record.wall_ns == 0);  // timing off by default
    }
    CHECK(previous <= 50.0 * 4);  // K * H
  }
}

TEST_CASE("wall time is recorded only when asked for") {
  ExperimentConfig config;
  config.env = "chain:3";
  config.agent = "rtdp";
  config.episodes = 5;
  config.num_seeds = 1;
  config.record_wall_time = true;
  const std::vector<SeedRun> runs = run_experiment(config);
  bool any_nonzero = false;
  for (const EpisodeRecord& record : runs[0].records) any_nonzero |= record.wall_ns > 0;
  CHECK(any_nonzero);
}

TEST_CASE("per-seed CSVs carry the documented schema") {
  ExperimentConfig config;
  config.env = "chain:3";
  config.agent = "rtdp";
  config.episodes = 5;
  config.num_seeds = 2;
  const std::string dir = fresh_dir("schema");
  write_experiment_csv(config, run_experiment(config), dir);

  const CsvTable seed0 = read_csv(seed_csv_path(dir, "rtdp", 0));
  CHECK(seed0.header ==
        std::vector<std::string>{"episode", "regret_inc", "regret_cum", "backup_ops",
                                 "update_total", "optimism_margin", "wall_ns"});
  CHECK(seed0.rows.size() == 5);

  const CsvTable aggregate = read_csv(aggregate_csv_path(dir, "rtdp"));
  CHECK(aggregate.column("regret_cum_mean") == 3);
  CHECK(aggregate.column("regret_cum_std") == 4);
  CHECK(aggregate.rows.size() == 5);
}

TEST_CASE("pac counters count exceedances and decrease in epsilon") {
  std::vector<EpisodeRecord> records(6);
  const double increments[] = {0.5, 0.0, 0.25, 0.7, 0.0, 0.1};
  for (int i = 0; i < 6; ++i) records[i].regret_inc = increments[i];

  const std::vector<double> grid = {0.0, 0.2, 0.6, 4.0};
  const std::vector<std::int64_t> counts = pac_counters(records, grid);
  CHECK(counts == std::vector<std::int64_t>{4, 3, 1, 0});  // eps >= H gives zero
  for (std::size_t i = 1; i < counts.size(); ++i) CHECK(counts[i] <= counts[i - 1]);
}

TEST_CASE("complexity report recovers the factor-of-S saving") {
  const std::string dir_full = fresh_dir("full");
  const std::string dir_greedy = fresh_dir("greedy");

  ExperimentConfig config;
  config.env = "chain:6";
  config.episodes = 4;
  config.num_seeds = 2;
  config.delta = 0.1;
  config.agent = "ucrl2";
  write_experiment_csv(config, run_experiment(config), dir_full);
  config.agent = "ucrl2-gp";
  write_experiment_csv(config, run_experiment(config), dir_greedy);

  const ComplexityReport report = complexity_report(dir_full, dir_greedy);
  CHECK(report.agent_a == "ucrl2");
  CHECK(report.agent_b == "ucrl2-gp");
  CHECK(report.ratio == 6.0);  // exactly S
}

TEST_CASE("csv reader reports malformed lines") {
  const std::string dir = fresh_dir("badcsv");
  write_text_file(dir + "/bad.csv", "a,b\n1,2\n3,oops\n");
  CHECK_THROWS_WITH_AS(read_csv(dir + "/bad.csv"), doctest::Contains("line 3"),
                       std::invalid_argument);
  write_text_file(dir + "/short.csv", "a,b\n1\n");
  CHECK_THROWS_WITH_AS(read_csv(dir + "/short.csv"), doctest::Contains("line 2"),
                       std::invalid_argument);
}

TEST_CASE("plots render deterministically and reject empty input") {
  const std::string dir = fresh_dir("plots");
  CHECK_THROWS_AS(plot_from_directory(dir), std::invalid_argument);

  ExperimentConfig config;
  config.env = "chain:3";
  config.agent = "rtdp";
  config.episodes = 6;
  config.num_seeds = 1;  // single seed: zero-width bands
  write_experiment_csv(config, run_experiment(config), dir);
  const std::string svg = plot_from_directory(dir);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("polyline") != std::string::npos);
  CHECK(svg == plot_from_directory(dir));

  PlotSeries empty;
  empty.label = "x";
  CHECK_THROWS_AS(render_regret_plot({empty}), std::invalid_argument);
}

TEST_CASE("golden plot fixture stays byte-stable") {
  const std::string svg = plot_from_directory(kFixtureDir + "/toy_run");
  CHECK(svg == read_text_file(kFixtureDir + "/toy_plot.svg"));
}

TEST_CASE("learning curves flatten and greedy variants track the planners") {
  // Small enough that the confidence widths resolve within the run: every
  // agent's regret goes sublinear and each greedy variant lands within a
  // factor of two of its full-planning counterpart.
  std::vector<double> finals;
  for (const char* agent : {"ucrl2", "ucrl2-gp", "euler", "euler-gp"}) {
    ExperimentConfig config;
    config.env = "chain:5";
    config.agent = agent;
    config.episodes = 3000;
    config.delta = 0.05;
    config.num_seeds = 2;
    const std::vector<SeedRun> runs = run_experiment(config);

    double first_quartile = 0.0;
    double last_quartile = 0.0;
    double final_regret = 0.0;
    for (const SeedRun& run : runs) {
      first_quartile += run.records[3000 / 4 - 1].regret_cum;
      last_quartile +=
          run.records[3000 - 1].regret_cum - run.records[3 * 3000 / 4 - 1].regret_cum;
      final_regret += run.records.back().regret_cum;
    }
    CHECK(last_quartile <= 0.5 * first_quartile);
    finals.push_back(final_regret / 2.0);
  }
  CHECK(finals[1] <= 2.0 * finals[0]);  // ucrl2-gp vs ucrl2
  CHECK(finals[3] <= 2.0 * finals[2]);  // euler-gp vs euler
}

TEST_CASE("seed worker count honors the environment cap") {
  unsetenv("GREEDY_MBRL_THREADS");
  CHECK(seed_worker_count(8) == 8);
  setenv("GREEDY_MBRL_THREADS", "3", 1);
  CHECK(seed_worker_count(8) == 3);
  CHECK(seed_worker_count(2) == 2);
  setenv("GREEDY_MBRL_THREADS", "junk", 1);
  CHECK(seed_worker_count(4) == 4);
  unsetenv("GREEDY_MBRL_THREADS");
}
