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

#ifndef GMBRL_GREEDY_HPP_
#define GMBRL_GREEDY_HPP_

#include "gmbrl/agent.hpp"
#include "gmbrl/bonus.hpp"
#include "gmbrl/empirical.hpp"

namespace gmbrl {

// 1-step-planning scaffold with a pluggable bonus backend. Per step it
// computes the optimistic Q row only at the current state (A evaluations,
// the whole point of the scheme), acts greedily, and applies the
// min-update to the upper value at the one visited cell; the Bernstein
// backend also tracks lower values through the max-update at the chosen
// action. The model commits in one batch at episode end and values are
// double-buffered, so everything an episode reads is frozen k-1 data.
class GreedyAgent : public Agent {
 public:
  enum class Backend { kUcrl2Gp, kEulerGp };

  GreedyAgent(const TabularMdp& mdp, Backend backend, BonusParams params);

  DeterministicPolicy materialize_policy() override;
  EpisodeOutcome run_episode(Rng& env_rng) override;

  const ValueTable& upper_values() const override { return upper_; }
  const ValueTable* lower_values() const override {
    return backend_ == Backend::kEulerGp ? &lower_ : nullptr;
  }
  int episodes_run() const override { return episodes_; }

  const EmpiricalModel& model() const { return model_; }
  const BonusParams& params() const { return params_; }
  Backend backend() const { return backend_; }

  // Optimistic Q row at state s for timestep t, from the frozen data.
  void optimistic_q_row(int s, int t, std::span<double> q_out) const;

 private:
  const TabularMdp& mdp_;
  Backend backend_;
  BonusParams params_;
  EmpiricalModel model_;
  ValueTable upper_;
  ValueTable lower_;  // Bernstein backend only
  int episodes_ = 0;
};

}  // namespace gmbrl

#endif  // GMBRL_GREEDY_HPP_
