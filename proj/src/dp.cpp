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

#include "gmbrl/dp.hpp"

#include <stdexcept>
#include <string>

#include "gmbrl/kernels.hpp"

namespace gmbrl {

std::vector<double> optimal_backup(const TabularMdp& mdp, std::span<const double> v_next) {
  if (v_next.size() != static_cast<std::size_t>(mdp.num_states())) {
    throw std::invalid_argument("optimal_backup: value vector has wrong length");
  }
  std::vector<double> out(mdp.num_states());
  kernels::backup_max(mdp, v_next, out);
  return out;
}

ValueTable value_iteration(const TabularMdp& mdp) {
  ValueTable values(mdp.horizon(), mdp.num_states());
  for (int t = mdp.horizon(); t >= 1; --t) {
    kernels::backup_max(mdp, values.row(t + 1), values.row(t));
  }
  return values;
}

DeterministicPolicy greedy_policy(const TabularMdp& mdp, const ValueTable& values) {
  DeterministicPolicy policy(mdp.horizon(), mdp.num_states());
  std::vector<double> scratch(mdp.num_states());
  std::vector<int> argmax(mdp.num_states());
  for (int t = 1; t <= mdp.horizon(); ++t) {
    kernels::backup_max(mdp, values.row(t + 1), scratch, argmax);
    for (int s = 0; s < mdp.num_states(); ++s) policy(t, s) = argmax[s];
  }
  return policy;
}

ValueTable evaluate_policy(const TabularMdp& mdp, const DeterministicPolicy& policy) {
  if (policy.horizon() != mdp.horizon() || policy.num_states() != mdp.num_states()) {
    throw std::invalid_argument("evaluate_policy: policy shape mismatch");
  }
  ValueTable values(mdp.horizon(), mdp.num_states());
  for (int t = mdp.horizon(); t >= 1; --t) {
    kernels::backup_policy(mdp, policy.row(t), values.row(t + 1), values.row(t));
  }
  return values;
}

OccupancyTable occupancy(const TabularMdp& mdp, const DeterministicPolicy& policy, int start) {
  if (start < 0 || start >= mdp.num_states()) {
    throw std::invalid_argument("occupancy: start state out of range");
  }
  OccupancyTable table(mdp.horizon(), mdp.num_states(), mdp.num_actions());
  table(1, start, policy(1, start)) = 1.0;
  std::vector<double> state_weights(mdp.num_states());
  for (int t = 1; t < mdp.horizon(); ++t) {
    kernels::occupancy_fold(mdp, table.slice(t), state_weights);
    for (int s = 0; s < mdp.num_states(); ++s) {
      if (state_weights[s] > 0.0) table(t + 1, s, policy(t + 1, s)) = state_weights[s];
    }
  }
  return table;
}

TrajectoryStep sample_step(const TabularMdp& mdp, int t, int state, int action, Rng& rng) {
  if (action < 0 || action >= mdp.num_actions()) {
    throw std::out_of_range("sample_step: action " + std::to_string(action) +
                            " out of range at t=" + std::to_string(t) +
                            ", state=" + std::to_string(state));
  }
  const double reward = mdp.reward(state, action).sample(rng);
  const std::span<const double> row = mdp.transition_row(state, action);
  const std::span<const int> support = mdp.support(state, action);
  const double u = rng.uniform01();
  double cumulative = 0.0;
  int next = support.back();  // accumulated row can undershoot u by rounding
  for (int s2 : support) {
    cumulative += row[s2];
    if (u < cumulative) {
      next = s2;
      break;
    }
  }
  return {t, state, action, reward, next};
}

Trajectory sample_episode(const TabularMdp& mdp, const ActionProvider& act, Rng& rng) {
  Trajectory trajectory;
  trajectory.reserve(mdp.horizon());
  int state = mdp.start_state();
  for (int t = 1; t <= mdp.horizon(); ++t) {
    const int action = act(t, state);
    trajectory.push_back(sample_step(mdp, t, state, action, rng));
    state = trajectory.back().next_state;
  }
  return trajectory;
}

}  // namespace gmbrl
