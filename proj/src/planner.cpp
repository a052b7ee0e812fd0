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

#include "gmbrl/planner.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace gmbrl {

FullPlanningAgent::FullPlanningAgent(const TabularMdp& mdp, Backend backend, BonusParams params,
                                     bool clamp_to_previous)
    : mdp_(mdp),
      backend_(backend),
      params_(params),
      clamp_to_previous_(clamp_to_previous),
      model_(mdp.num_states(), mdp.num_actions()),
      upper_(mdp.horizon(), mdp.num_states()) {
  for (int t = 1; t <= mdp_.horizon(); ++t) {
    const double ceiling = static_cast<double>(mdp_.horizon() - (t - 1));
    for (int s = 0; s < mdp_.num_states(); ++s) upper_(t, s) = ceiling;
  }
  if (backend_ == Backend::kEuler) {
    lower_ = ValueTable(mdp_.horizon(), mdp_.num_states(), 0.0);
  }
}

PlanResult FullPlanningAgent::plan() const {
  PlanResult result;
  result.upper = ValueTable(mdp_.horizon(), mdp_.num_states());
  if (backend_ == Backend::kEuler) {
    result.lower = ValueTable(mdp_.horizon(), mdp_.num_states());
  }
  result.policy = DeterministicPolicy(mdp_.horizon(), mdp_.num_states());

  std::vector<double> q(mdp_.num_actions());
  for (int t = mdp_.horizon(); t >= 1; --t) {
    for (int s = 0; s < mdp_.num_states(); ++s) {
      if (backend_ == Backend::kUcrl2) {
        ucrl2gp_q(model_, s, result.upper.row(t + 1), params_, q);
      } else {
        eulergp_q(model_, s, result.upper.row(t + 1), result.lower.row(t + 1), params_, q);
      }
      result.backup_ops += mdp_.num_actions();

      int best = 0;
      for (int a = 1; a < mdp_.num_actions(); ++a) {
        if (q[a] > q[best]) best = a;
      }
      result.policy(t, s) = best;
      result.upper(t, s) = clamp_to_previous_ ? std::min(upper_(t, s), q[best]) : q[best];

      if (backend_ == Backend::kEuler) {
        const double lower_q = eulergp_q_lower(model_, s, best, result.upper.row(t + 1),
                                               result.lower.row(t + 1), params_);
        result.lower(t, s) =
            clamp_to_previous_ ? std::max(lower_(t, s), lower_q) : lower_q;
      }
    }
  }
  return result;
}

DeterministicPolicy FullPlanningAgent::materialize_policy() {
  if (!pending_plan_) pending_plan_ = plan();
  return pending_plan_->policy;
}

EpisodeOutcome FullPlanningAgent::run_episode(Rng& env_rng) {
  if (!pending_plan_) pending_plan_ = plan();
  PlanResult current = std::move(*pending_plan_);
  pending_plan_.reset();

  EpisodeOutcome outcome;
  outcome.q_evals = current.backup_ops;
  for (int t = 1; t <= mdp_.horizon(); ++t) {
    for (int s = 0; s < mdp_.num_states(); ++s) {
      outcome.update_total += upper_(t, s) - current.upper(t, s);
    }
  }

  const DeterministicPolicy& policy = current.policy;
  const auto act = [&policy](int t, int s) { return policy(t, s); };
  outcome.trajectory = sample_episode(mdp_, act, env_rng);

  model_.batch_update(outcome.trajectory);
  upper_ = std::move(current.upper);
  if (backend_ == Backend::kEuler) lower_ = std::move(current.lower);
  ++episodes_;
  return outcome;
}

}  // namespace gmbrl
