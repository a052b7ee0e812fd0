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

#ifndef GMBRL_DP_HPP_
#define GMBRL_DP_HPP_

#include <functional>
#include <span>
#include <vector>

#include "gmbrl/mdp.hpp"
#include "gmbrl/rng.hpp"

// Exact dynamic-programming oracles over the true model. All functions are
// pure given (inputs, seed) and safe to call from concurrent runs.

namespace gmbrl {

// One application of the optimal Bellman operator: for each state,
// max_a { r(s,a) + p(.|s,a)^T v_next }, ties to the lowest action index.
std::vector<double> optimal_backup(const TabularMdp& mdp, std::span<const double> v_next);

// Backward induction from t = H down to 1; row H+1 stays zero.
ValueTable value_iteration(const TabularMdp& mdp);

// Greedy action extraction: for every (t, s), the argmax action of the
// backup against values.row(t + 1).
DeterministicPolicy greedy_policy(const TabularMdp& mdp, const ValueTable& values);

// Value of a fixed policy by backward induction.
ValueTable evaluate_policy(const TabularMdp& mdp, const DeterministicPolicy& policy);

// Visitation weights w_t(s, a) of `policy` started at `start`: w_1 puts all
// mass on (start, policy(1, start)) and rolls forward through the kernel.
OccupancyTable occupancy(const TabularMdp& mdp, const DeterministicPolicy& policy, int start);

// Chooses the action for timestep t at the given state.
using ActionProvider = std::function<int(int t, int state)>;

// Samples one H-step episode from the true kernel and reward distributions.
// Deterministic given the generator state. An out-of-range action from the
// provider throws std::out_of_range.
Trajectory sample_episode(const TabularMdp& mdp, const ActionProvider& act, Rng& rng);

// Single environment step shared by sample_episode and the agents.
TrajectoryStep sample_step(const TabularMdp& mdp, int t, int state, int action, Rng& rng);

}  // namespace gmbrl

#endif  // GMBRL_DP_HPP_
