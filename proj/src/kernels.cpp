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

#include "gmbrl/kernels.hpp"

namespace gmbrl::kernels {

namespace {

inline void backup_max_state(const TabularMdp& mdp, int s, std::span<const double> v_next,
                             std::span<double> out, std::span<int> argmax) {
  double best = q_value(mdp, s, 0, v_next);
  int best_a = 0;
  for (int a = 1; a < mdp.num_actions(); ++a) {
    const double q = q_value(mdp, s, a, v_next);
    if (q > best) {
      best = q;
      best_a = a;
    }
  }
  out[s] = best;
  if (!argmax.empty()) argmax[s] = best_a;
}

inline void occupancy_fold_state(const TabularMdp& mdp, int s2, std::span<const double> w_slice,
                                 std::span<double> state_weights_next) {
  const int num_actions = mdp.num_actions();
  double w = 0.0;
  for (int s = 0; s < mdp.num_states(); ++s) {
    for (int a = 0; a < num_actions; ++a) {
      const double ws = w_slice[static_cast<std::size_t>(s) * num_actions + a];
      if (ws > 0.0) w += ws * mdp.transition(s, a, s2);
    }
  }
  state_weights_next[s2] = w;
}

}  // namespace

void backup_max(const TabularMdp& mdp, std::span<const double> v_next,
                std::span<double> out, std::span<int> argmax) {
  const int num_states = mdp.num_states();
#pragma omp parallel for schedule(static) if (num_states >= kParallelGrain)
  for (int s = 0; s < num_states; ++s) backup_max_state(mdp, s, v_next, out, argmax);
}

void backup_policy(const TabularMdp& mdp, std::span<const int> actions,
                   std::span<const double> v_next, std::span<double> out) {
  const int num_states = mdp.num_states();
#pragma omp parallel for schedule(static) if (num_states >= kParallelGrain)
  for (int s = 0; s < num_states; ++s) out[s] = q_value(mdp, s, actions[s], v_next);
}

void occupancy_fold(const TabularMdp& mdp, std::span<const double> w_slice,
                    std::span<double> state_weights_next) {
  const int num_states = mdp.num_states();
#pragma omp parallel for schedule(static) if (num_states >= kParallelGrain)
  for (int s2 = 0; s2 < num_states; ++s2)
    occupancy_fold_state(mdp, s2, w_slice, state_weights_next);
}

namespace serial {

void backup_max(const TabularMdp& mdp, std::span<const double> v_next,
                std::span<double> out, std::span<int> argmax) {
  for (int s = 0; s < mdp.num_states(); ++s) backup_max_state(mdp, s, v_next, out, argmax);
}

void backup_policy(const TabularMdp& mdp, std::span<const int> actions,
                   std::span<const double> v_next, std::span<double> out) {
  for (int s = 0; s < mdp.num_states(); ++s) out[s] = q_value(mdp, s, actions[s], v_next);
}

void occupancy_fold(const TabularMdp& mdp, std::span<const double> w_slice,
                    std::span<double> state_weights_next) {
  for (int s2 = 0; s2 < mdp.num_states(); ++s2)
    occupancy_fold_state(mdp, s2, w_slice, state_weights_next);
}

}  // namespace serial

}  // namespace gmbrl::kernels
