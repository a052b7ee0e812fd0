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

#include "gmbrl/rtdp.hpp"

#include <algorithm>
#include <vector>

#include "gmbrl/kernels.hpp"

namespace gmbrl {

RtdpAgent::RtdpAgent(const TabularMdp& mdp)
    : mdp_(mdp), values_(mdp.horizon(), mdp.num_states()) {
  for (int t = 1; t <= mdp_.horizon(); ++t) {
    const double ceiling = static_cast<double>(mdp_.horizon() - (t - 1));
    for (int s = 0; s < mdp_.num_states(); ++s) values_(t, s) = ceiling;
  }
}

DeterministicPolicy RtdpAgent::materialize_policy() { return greedy_policy(mdp_, values_); }

EpisodeOutcome RtdpAgent::run_episode(Rng& env_rng) {
  ValueTable updated = values_;
  EpisodeOutcome outcome;

  const auto act = [&](int t, int s) -> int {
    double best = kernels::q_value(mdp_, s, 0, values_.row(t + 1));
    int best_a = 0;
    for (int a = 1; a < mdp_.num_actions(); ++a) {
      const double q = kernels::q_value(mdp_, s, a, values_.row(t + 1));
      if (q > best) {
        best = q;
        best_a = a;
      }
    }
    outcome.q_evals += mdp_.num_actions();
    const double previous = values_(t, s);
    updated(t, s) = std::min(previous, best);
    outcome.update_total += previous - updated(t, s);
    return best_a;
  };

  outcome.trajectory = sample_episode(mdp_, act, env_rng);
  values_ = std::move(updated);
  ++episodes_;
  return outcome;
}

}  // namespace gmbrl
