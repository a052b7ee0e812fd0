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

#ifndef GMBRL_RTDP_HPP_
#define GMBRL_RTDP_HPP_

#include "gmbrl/agent.hpp"

namespace gmbrl {

// Real-time dynamic programming against the exact model. Values start at
// the optimistic ceiling H - (t - 1). Each step acts greedily on the frozen
// previous-episode value row t+1 and writes the maximal Q back into the
// current-episode table at the one visited (t, s) cell; the write is never
// read within the same episode (double-buffered tables, swapped at episode
// end). The write-back is clamped against the previous value: analytically
// the Bellman value never exceeds it, and the clamp keeps the decrease exact
// in floating point as well.
class RtdpAgent : public Agent {
 public:
  explicit RtdpAgent(const TabularMdp& mdp);

  DeterministicPolicy materialize_policy() override;
  EpisodeOutcome run_episode(Rng& env_rng) override;

  const ValueTable& upper_values() const override { return values_; }
  int episodes_run() const override { return episodes_; }

 private:
  const TabularMdp& mdp_;
  ValueTable values_;  // V-bar after the last completed episode
  int episodes_ = 0;
};

}  // namespace gmbrl

#endif  // GMBRL_RTDP_HPP_
