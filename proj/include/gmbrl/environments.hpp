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

#ifndef GMBRL_ENVIRONMENTS_HPP_
#define GMBRL_ENVIRONMENTS_HPP_

#include <cstdint>
#include <string>
#include <string_view>

#include "gmbrl/mdp.hpp"

namespace gmbrl {

// Family used for an environment's nonzero-mean reward cells. Gaussian is
// the benchmark default; Bernoulli and Deterministic are the bounded-reward
// variants the invariant suites run on.
enum class RewardKind { kDeterministic, kBernoulli, kGaussian };

// Chain of N states. Start at the left end (state 0), actions {left, right}.
// Trying to move right succeeds with probability 1 - 1/N and otherwise moves
// left; left always moves left; both ends clamp. The reward has mean 1 for
// trying to move right at the rightmost state, mean 0 with unit Gaussian
// noise (in Gaussian mode) for moving backwards from the start state, and is
// exactly 0 everywhere else. The horizon is H = N, so only episodes that
// head right every step can score.
struct ChainSpec {
  int length = 2;  // N >= 2
  RewardKind reward_kind = RewardKind::kGaussian;
};

enum ChainAction : int { kChainLeft = 0, kChainRight = 1 };

// N x N grid. Start at the upper-left corner, goal at the lower-right,
// actions {down, right}. Each move slips backwards (up for down, left for
// right, clamped at the walls) with probability 1/H where H = 2N - 1. Taking
// either action at the goal corner has reward mean 1; the mean-0 noisy
// reward sits on the actions taken at the start corner (their slips move
// back into it) unless `noise_on_adjacent` flips it onto the two
// neighboring cells' actions whose slips enter the corner. The shortest path
// needs all H steps, so a single slip forfeits the goal reward.
struct GridChainSpec {
  int side = 2;  // N >= 2
  RewardKind reward_kind = RewardKind::kGaussian;
  bool noise_on_adjacent = false;
};

enum GridAction : int { kGridDown = 0, kGridRight = 1 };

// Seeded generator for test instances: every (s, a) row gets exactly
// `branching` nonzero successors and a reward mean drawn uniform [0, 1].
struct RandomMdpSpec {
  int num_states = 2;
  int num_actions = 2;
  int horizon = 2;
  int branching = 2;  // 1 <= branching <= num_states
  std::uint64_t seed = 0;
  RewardKind reward_kind = RewardKind::kBernoulli;
};

TabularMdp make_chain(const ChainSpec& spec);
TabularMdp make_grid_chain(const GridChainSpec& spec);
TabularMdp make_random_mdp(const RandomMdpSpec& spec);

// Textual JSON document with fields {S, A, H, start, transitions, rewards};
// probabilities carry 17 significant digits so load(save(m)) == m exactly.
// The canonical file extension is `.mdp.json`.
std::string save_mdp(const TabularMdp& mdp);

// Parses and validates a document produced by save_mdp (or by hand).
// Malformed documents and non-stochastic rows throw std::invalid_argument
// naming the offending location.
TabularMdp load_mdp(std::string_view json_text);

}  // namespace gmbrl

#endif  // GMBRL_ENVIRONMENTS_HPP_
