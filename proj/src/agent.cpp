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

#include "gmbrl/agent.hpp"

#include <stdexcept>
#include <string>

#include "gmbrl/greedy.hpp"
#include "gmbrl/planner.hpp"
#include "gmbrl/rtdp.hpp"

namespace gmbrl {

std::unique_ptr<Agent> make_agent(std::string_view id, const TabularMdp& mdp, int max_episodes,
                                  double delta, bool clamp_full_planning) {
  if (id == "rtdp") {
    return std::make_unique<RtdpAgent>(mdp);
  }
  if (id == "ucrl2-gp") {
    return std::make_unique<GreedyAgent>(mdp, GreedyAgent::Backend::kUcrl2Gp,
                                         BonusParams::ucrl2(mdp, max_episodes, delta));
  }
  if (id == "euler-gp") {
    return std::make_unique<GreedyAgent>(mdp, GreedyAgent::Backend::kEulerGp,
                                         BonusParams::euler(mdp, max_episodes, delta));
  }
  if (id == "ucrl2") {
    return std::make_unique<FullPlanningAgent>(mdp, FullPlanningAgent::Backend::kUcrl2,
                                               BonusParams::ucrl2(mdp, max_episodes, delta),
                                               clamp_full_planning);
  }
  if (id == "euler") {
    return std::make_unique<FullPlanningAgent>(mdp, FullPlanningAgent::Backend::kEuler,
                                               BonusParams::euler(mdp, max_episodes, delta),
                                               clamp_full_planning);
  }
  throw std::invalid_argument("unknown agent id '" + std::string(id) +
                              "' (expected rtdp | ucrl2 | ucrl2-gp | euler | euler-gp)");
}

}  // namespace gmbrl
