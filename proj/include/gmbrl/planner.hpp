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

#ifndef GMBRL_PLANNER_HPP_
#define GMBRL_PLANNER_HPP_

#include <cstdint>
#include <optional>

#include "gmbrl/agent.hpp"
#include "gmbrl/bonus.hpp"
#include "gmbrl/empirical.hpp"

namespace gmbrl {

// One full optimistic planning pass: backward induction over every (s, t).
struct PlanResult {
  ValueTable upper;
  ValueTable lower;  // empty unless the backend tracks lower values
  DeterministicPolicy policy;
  std::uint64_t backup_ops = 0;  // optimistic Q evaluations: S*A*H per pass
};

// Full-planning baselines: same bonus backends as the greedy agents, but
// every episode recomputes optimistic values for all states and timesteps.
// Within a pass, layer t backs up against the freshly computed layer t+1 of
// the same pass (unlike the greedy agents, which read the previous
// episode's row). Values are clamped against the previous episode's tables
// by default so the same decreasing-value invariant suite covers every
// agent; the unclamped variant is kept behind a flag for sensitivity runs.
class FullPlanningAgent : public Agent {
 public:
  enum class Backend { kUcrl2, kEuler };

  FullPlanningAgent(const TabularMdp& mdp, Backend backend, BonusParams params,
                    bool clamp_to_previous = true);

  DeterministicPolicy materialize_policy() override;
  EpisodeOutcome run_episode(Rng& env_rng) override;

  const ValueTable& upper_values() const override { return upper_; }
  const ValueTable* lower_values() const override {
    return backend_ == Backend::kEuler ? &lower_ : nullptr;
  }
  int episodes_run() const override { return episodes_; }

  const EmpiricalModel& model() const { return model_; }

  // The planning pass alone, from the frozen model and previous tables.
  PlanResult plan() const;

 private:
  const TabularMdp& mdp_;
  Backend backend_;
  BonusParams params_;
  bool clamp_to_previous_;
  EmpiricalModel model_;
  ValueTable upper_;
  ValueTable lower_;
  std::optional<PlanResult> pending_plan_;  // memoized between materialize and run
  int episodes_ = 0;
};

}  // namespace gmbrl

#endif  // GMBRL_PLANNER_HPP_
