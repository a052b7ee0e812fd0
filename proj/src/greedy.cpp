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

#include "gmbrl/greedy.hpp"

#include <algorithm>
#include <vector>

namespace gmbrl {

namespace {

int argmax_lowest(std::span<const double> q) {
  int best = 0;
  for (int a = 1; a < static_cast<int>(q.size()); ++a) {
    if (q[a] > q[best]) best = a;
  }
  return best;
}

}  // namespace

GreedyAgent::GreedyAgent(const TabularMdp& mdp, Backend backend, BonusParams params)
    : mdp_(mdp),
      backend_(backend),
      params_(params),
      model_(mdp.num_states(), mdp.num_actions()),
      upper_(mdp.horizon(), mdp.num_states()) {
  for (int t = 1; t <= mdp_.horizon(); ++t) {
    const double ceiling = static_cast<double>(mdp_.horizon() - (t - 1));
    for (int s = 0; s < mdp_.num_states(); ++s) upper_(t, s) = ceiling;
  }
  if (backend_ == Backend::kEulerGp) {
    lower_ = ValueTable(mdp_.horizon(), mdp_.num_states(), 0.0);
  }
}

void GreedyAgent::optimistic_q_row(int s, int t, std::span<double> q_out) const {
  if (backend_ == Backend::kUcrl2Gp) {
    ucrl2gp_q(model_, s, upper_.row(t + 1), params_, q_out);
  } else {
    eulergp_q(model_, s, upper_.row(t + 1), lower_.row(t + 1), params_, q_out);
  }
}

DeterministicPolicy GreedyAgent::materialize_policy() {
  DeterministicPolicy policy(mdp_.horizon(), mdp_.num_states());
  std::vector<double> q(mdp_.num_actions());
  for (int t = 1; t <= mdp_.horizon(); ++t) {
    for (int s = 0; s < mdp_.num_states(); ++s) {
      optimistic_q_row(s, t, q);
      policy(t, s) = argmax_lowest(q);
    }
  }
  return policy;
}

EpisodeOutcome GreedyAgent::run_episode(Rng& env_rng) {
  ValueTable upper_updated = upper_;
  ValueTable lower_updated = lower_;
  EpisodeOutcome outcome;
  std::vector<double> q(mdp_.num_actions());

  const auto act = [&](int t, int s) -> int {
    optimistic_q_row(s, t, q);
    outcome.q_evals += mdp_.num_actions();
    const int a = argmax_lowest(q);

    const double previous = upper_(t, s);
    upper_updated(t, s) = std::min(previous, q[a]);
    outcome.update_total += previous - upper_updated(t, s);

    if (backend_ == Backend::kEulerGp) {
      const double lower_q =
          eulergp_q_lower(model_, s, a, upper_.row(t + 1), lower_.row(t + 1), params_);
      lower_updated(t, s) = std::max(lower_(t, s), lower_q);
    }
    return a;
  };

  outcome.trajectory = sample_episode(mdp_, act, env_rng);

  model_.batch_update(outcome.trajectory);
  upper_ = std::move(upper_updated);
  lower_ = std::move(lower_updated);
  ++episodes_;
  return outcome;
}

}  // namespace gmbrl
