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

#ifndef GMBRL_AGENT_HPP_
#define GMBRL_AGENT_HPP_

#include <cstdint>
#include <memory>
#include <string_view>

#include "gmbrl/dp.hpp"
#include "gmbrl/mdp.hpp"
#include "gmbrl/rng.hpp"

namespace gmbrl {

struct EpisodeOutcome {
  Trajectory trajectory;
  // Optimistic Q evaluations charged to the agent this episode (one unit per
  // state-action Q computation). Policy materialization is harness
  // instrumentation and is never charged here.
  std::uint64_t q_evals = 0;
  // Total upper-value decrease over the cells updated this episode.
  double update_total = 0.0;
};

// Episodic agent protocol. Episode k's policy is a deterministic function of
// the data frozen at the end of episode k-1; materialize_policy() spells
// that policy out over every (state, timestep) so the harness can evaluate
// it exactly, and run_episode() then acts, updates values, and commits the
// episode's experience. Calling materialize_policy() right before
// run_episode() therefore yields exactly the actions the episode takes.
//
// One agent instance per run; instances are single-threaded, but independent
// runs may execute concurrently.
class Agent {
 public:
  virtual ~Agent() = default;

  virtual DeterministicPolicy materialize_policy() = 0;
  virtual EpisodeOutcome run_episode(Rng& env_rng) = 0;

  // Upper value table after the last completed episode.
  virtual const ValueTable& upper_values() const = 0;
  // Lower value table for agents that track one; null otherwise.
  virtual const ValueTable* lower_values() const { return nullptr; }

  virtual int episodes_run() const = 0;
};

// ids: rtdp | ucrl2 | ucrl2-gp | euler | euler-gp. Throws
// std::invalid_argument for anything else. max_episodes and delta size the
// confidence widths of the learning agents; rtdp ignores them.
std::unique_ptr<Agent> make_agent(std::string_view id, const TabularMdp& mdp, int max_episodes,
                                  double delta, bool clamp_full_planning = true);

}  // namespace gmbrl

#endif  // GMBRL_AGENT_HPP_
