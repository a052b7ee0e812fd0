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

#ifndef GMBRL_KERNELS_HPP_
#define GMBRL_KERNELS_HPP_

#include <span>

#include "gmbrl/mdp.hpp"

// Data-parallel inner loops of the dynamic-programming layer. Each kernel
// comes in two flavors: a plain serial loop (namespace serial, the reference
// implementation the tests compare against) and an OpenMP version that
// parallelizes over states once the state count clears kParallelGrain.
// Per-state work is identical in both, so outputs match bitwise.

namespace gmbrl::kernels {

// States below this run the serial path; OpenMP overhead dominates otherwise.
inline constexpr int kParallelGrain = 256;

// Q-value of one (s, a) against the next-step value row, summed over the
// transition support in ascending successor order. Every DP routine funnels
// through this so recomputed values are bitwise reproducible.
inline double q_value(const TabularMdp& mdp, int s, int a, std::span<const double> v_next) {
  double q = mdp.mean_reward(s, a);
  const std::span<const double> row = mdp.transition_row(s, a);
  for (int s2 : mdp.support(s, a)) q += row[s2] * v_next[s2];
  return q;
}

// out[s] = max_a q_value(s, a); ties break to the lowest action index.
// argmax may be empty when only values are needed.
void backup_max(const TabularMdp& mdp, std::span<const double> v_next,
                std::span<double> out, std::span<int> argmax = {});

// out[s] = q_value(s, actions[s]).
void backup_policy(const TabularMdp& mdp, std::span<const int> actions,
                   std::span<const double> v_next, std::span<double> out);

// state_weights_next[s'] = sum_{s,a} w_slice[s*A+a] * p(s'|s,a).
// Gather form: each target state accumulates over (s, a) in a fixed order.
void occupancy_fold(const TabularMdp& mdp, std::span<const double> w_slice,
                    std::span<double> state_weights_next);

namespace serial {
void backup_max(const TabularMdp& mdp, std::span<const double> v_next,
                std::span<double> out, std::span<int> argmax = {});
void backup_policy(const TabularMdp& mdp, std::span<const int> actions,
                   std::span<const double> v_next, std::span<double> out);
void occupancy_fold(const TabularMdp& mdp, std::span<const double> w_slice,
                    std::span<double> state_weights_next);
}  // namespace serial

}  // namespace gmbrl::kernels

#endif  // GMBRL_KERNELS_HPP_
