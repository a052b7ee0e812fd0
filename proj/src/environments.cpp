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

#include "gmbrl/environments.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "gmbrl/rng.hpp"
#include "json.hpp"

namespace gmbrl {

namespace {

RewardDistribution::Kind to_dist_kind(RewardKind kind) {
  switch (kind) {
    case RewardKind::kDeterministic:
      return RewardDistribution::Kind::kDeterministic;
    case RewardKind::kBernoulli:
      return RewardDistribution::Kind::kBernoulli;
    case RewardKind::kGaussian:
      return RewardDistribution::Kind::kGaussian;
  }
  return RewardDistribution::Kind::kDeterministic;
}

// Reward cell in the selected family. Gaussian cells get unit noise.
RewardDistribution reward_cell(RewardKind kind, double mean) {
  RewardDistribution r;
  r.kind = to_dist_kind(kind);
  r.mean = mean;
  r.stddev = kind == RewardKind::kGaussian ? 1.0 : 0.0;
  return r;
}

struct TableBuilder {
  TableBuilder(int num_states, int num_actions)
      : num_states(num_states),
        num_actions(num_actions),
        transitions(static_cast<std::size_t>(num_states) * num_actions * num_states, 0.0),
        rewards(static_cast<std::size_t>(num_states) * num_actions) {}

  double& p(int s, int a, int s2) {
    return transitions[(static_cast<std::size_t>(s) * num_actions + a) * num_states + s2];
  }
  RewardDistribution& r(int s, int a) {
    return rewards[static_cast<std::size_t>(s) * num_actions + a];
  }

  int num_states;
  int num_actions;
  std::vector<double> transitions;
  std::vector<RewardDistribution> rewards;
};

}  // namespace

TabularMdp make_chain(const ChainSpec& spec) {
  const int n = spec.length;
  if (n < 2) throw std::invalid_argument("make_chain: length must be >= 2");

  TableBuilder b(n, 2);
  const double slip = 1.0 / n;
  const double succeed = 1.0 - slip;  // slip + succeed rounds to exactly 1
  for (int s = 0; s < n; ++s) {
    const int left = std::max(s - 1, 0);
    const int right = std::min(s + 1, n - 1);
    b.p(s, kChainLeft, left) = 1.0;
    b.p(s, kChainRight, right) += succeed;
    b.p(s, kChainRight, left) += slip;
  }
  b.r(n - 1, kChainRight) = reward_cell(spec.reward_kind, 1.0);
  b.r(0, kChainLeft) = reward_cell(spec.reward_kind, 0.0);

  return TabularMdp(n, 2, /*horizon=*/n, /*start_state=*/0, std::move(b.transitions),
                    std::move(b.rewards));
}

TabularMdp make_grid_chain(const GridChainSpec& spec) {
  const int n = spec.side;
  if (n < 2) throw std::invalid_argument("make_grid_chain: side must be >= 2");

  const int num_states = n * n;
  const int horizon = 2 * n - 1;
  TableBuilder b(num_states, 2);
  const double slip = 1.0 / horizon;
  const double succeed = 1.0 - slip;
  const auto cell = [n](int row, int col) { return row * n + col; };

  for (int row = 0; row < n; ++row) {
    for (int col = 0; col < n; ++col) {
      const int s = cell(row, col);
      // down: forward is row+1, slipping moves up; both clamp at the walls.
      b.p(s, kGridDown, cell(std::min(row + 1, n - 1), col)) += succeed;
      b.p(s, kGridDown, cell(std::max(row - 1, 0), col)) += slip;
      // right: forward is col+1, slipping moves left.
      b.p(s, kGridRight, cell(row, std::min(col + 1, n - 1))) += succeed;
      b.p(s, kGridRight, cell(row, std::max(col - 1, 0))) += slip;
    }
  }

  const int goal = cell(n - 1, n - 1);
  b.r(goal, kGridDown) = reward_cell(spec.reward_kind, 1.0);
  b.r(goal, kGridRight) = reward_cell(spec.reward_kind, 1.0);
  if (spec.noise_on_adjacent) {
    // The two actions whose slip lands in the start corner.
    b.r(cell(0, 1), kGridRight) = reward_cell(spec.reward_kind, 0.0);
    b.r(cell(1, 0), kGridDown) = reward_cell(spec.reward_kind, 0.0);
  } else {
    // Actions taken at the start corner; their slips clamp back into it.
    b.r(cell(0, 0), kGridDown) = reward_cell(spec.reward_kind, 0.0);
    b.r(cell(0, 0), kGridRight) = reward_cell(spec.reward_kind, 0.0);
  }

  return TabularMdp(num_states, 2, horizon, /*start_state=*/cell(0, 0),
                    std::move(b.transitions), std::move(b.rewards));
}

TabularMdp make_random_mdp(const RandomMdpSpec& spec) {
  if (spec.num_states < 1 || spec.num_actions < 1 || spec.horizon < 1) {
    throw std::invalid_argument("make_random_mdp: S, A, H must be positive");
  }
  if (spec.branching < 1 || spec.branching > spec.num_states) {
    throw std::invalid_argument("make_random_mdp: branching must be in [1, S]");
  }

  Rng rng(child_seed(spec.seed, "random-mdp"));
  TableBuilder b(spec.num_states, spec.num_actions);
  std::vector<int> successors(spec.num_states);
  std::vector<double> raw(spec.branching);

  for (int s = 0; s < spec.num_states; ++s) {
    for (int a = 0; a < spec.num_actions; ++a) {
      std::iota(successors.begin(), successors.end(), 0);
      for (int i = 0; i < spec.branching; ++i) {  // partial Fisher-Yates
        const int j = i + static_cast<int>(rng.uniform01() * (spec.num_states - i));
        std::swap(successors[i], successors[std::min(j, spec.num_states - 1)]);
      }
      std::sort(successors.begin(), successors.begin() + spec.branching);

      double total = 0.0;
      for (double& w : raw) {
        w = rng.uniform(0.2, 1.0);  // bounded below so no entry underflows
        total += w;
      }
      // Last entry takes the complement so the ascending row sum is exact.
      double partial = 0.0;
      for (int i = 0; i + 1 < spec.branching; ++i) {
        const double p = raw[i] / total;
        b.p(s, a, successors[i]) = p;
        partial += p;
      }
      b.p(s, a, successors[spec.branching - 1]) = 1.0 - partial;

      b.r(s, a) = reward_cell(spec.reward_kind, rng.uniform01());
    }
  }

  return TabularMdp(spec.num_states, spec.num_actions, spec.horizon, /*start_state=*/0,
                    std::move(b.transitions), std::move(b.rewards));
}

namespace {

const char* kind_name(RewardDistribution::Kind kind) {
  switch (kind) {
    case RewardDistribution::Kind::kDeterministic:
      return "deterministic";
    case RewardDistribution::Kind::kBernoulli:
      return "bernoulli";
    case RewardDistribution::Kind::kGaussian:
      return "gaussian";
  }
  return "deterministic";
}

void append_number(std::string& out, double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  out += buf;
}

}  // namespace

std::string save_mdp(const TabularMdp& mdp) {
  std::string out;
  out += "{\n";
  out += "  \"S\": " + std::to_string(mdp.num_states()) + ",\n";
  out += "  \"A\": " + std::to_string(mdp.num_actions()) + ",\n";
  out += "  \"H\": " + std::to_string(mdp.horizon()) + ",\n";
  out += "  \"start\": " + std::to_string(mdp.start_state()) + ",\n";
  out += "  \"transitions\": [\n";
  for (int s = 0; s < mdp.num_states(); ++s) {
    out += "    [\n";
    for (int a = 0; a < mdp.num_actions(); ++a) {
      out += "      [";
      const std::span<const double> row = mdp.transition_row(s, a);
      for (int s2 = 0; s2 < mdp.num_states(); ++s2) {
        if (s2 > 0) out += ", ";
        append_number(out, row[s2]);
      }
      out += a + 1 < mdp.num_actions() ? "],\n" : "]\n";
    }
    out += s + 1 < mdp.num_states() ? "    ],\n" : "    ]\n";
  }
  out += "  ],\n";
  out += "  \"rewards\": [\n";
  for (int s = 0; s < mdp.num_states(); ++s) {
    out += "    [";
    for (int a = 0; a < mdp.num_actions(); ++a) {
      if (a > 0) out += ", ";
      const RewardDistribution& r = mdp.reward(s, a);
      out += "{\"kind\": \"";
      out += kind_name(r.kind);
      out += "\", \"mean\": ";
      append_number(out, r.mean);
      out += ", \"std\": ";
      append_number(out, r.stddev);
      out += "}";
    }
    out += s + 1 < mdp.num_states() ? "],\n" : "]\n";
  }
  out += "  ]\n";
  out += "}\n";
  return out;
}

TabularMdp load_mdp(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("load_mdp: malformed document: ") + e.what());
  }

  try {
    const int num_states = doc.at("S").get<int>();
    const int num_actions = doc.at("A").get<int>();
    const int horizon = doc.at("H").get<int>();
    const int start = doc.at("start").get<int>();

    const auto& transitions = doc.at("transitions");
    const auto& rewards = doc.at("rewards");
    if (static_cast<int>(transitions.size()) != num_states ||
        static_cast<int>(rewards.size()) != num_states) {
      throw std::invalid_argument("load_mdp: table size disagrees with S");
    }

    std::vector<double> p;
    p.reserve(static_cast<std::size_t>(num_states) * num_actions * num_states);
    std::vector<RewardDistribution> r;
    r.reserve(static_cast<std::size_t>(num_states) * num_actions);

    for (int s = 0; s < num_states; ++s) {
      if (static_cast<int>(transitions[s].size()) != num_actions ||
          static_cast<int>(rewards[s].size()) != num_actions) {
        throw std::invalid_argument("load_mdp: action dimension mismatch at s=" +
                                    std::to_string(s));
      }
      for (int a = 0; a < num_actions; ++a) {
        const auto& row = transitions[s][a];
        if (static_cast<int>(row.size()) != num_states) {
          throw std::invalid_argument("load_mdp: row (s=" + std::to_string(s) + ", a=" +
                                      std::to_string(a) + ") has wrong length");
        }
        for (int s2 = 0; s2 < num_states; ++s2) p.push_back(row[s2].get<double>());

        const auto& cell = rewards[s][a];
        RewardDistribution dist;
        const std::string kind = cell.at("kind").get<std::string>();
        if (kind == "deterministic") {
          dist.kind = RewardDistribution::Kind::kDeterministic;
        } else if (kind == "bernoulli") {
          dist.kind = RewardDistribution::Kind::kBernoulli;
        } else if (kind == "gaussian") {
          dist.kind = RewardDistribution::Kind::kGaussian;
        } else {
          throw std::invalid_argument("load_mdp: unknown reward kind '" + kind + "' at (s=" +
                                      std::to_string(s) + ", a=" + std::to_string(a) + ")");
        }
        dist.mean = cell.at("mean").get<double>();
        dist.stddev = cell.at("std").get<double>();
        r.push_back(dist);
      }
    }

    // The TabularMdp constructor re-validates stochasticity and names the
    // offending (s, a) itself.
    return TabularMdp(num_states, num_actions, horizon, start, std::move(p), std::move(r));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("load_mdp: malformed document: ") + e.what());
  }
}

}  // namespace gmbrl
