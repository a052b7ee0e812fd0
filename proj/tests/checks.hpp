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

#ifndef GMBRL_TESTS_CHECKS_HPP_
#define GMBRL_TESTS_CHECKS_HPP_

#include <cstdint>
#include <string>

#include "gmbrl/greedy.hpp"
#include "gmbrl/mdp.hpp"

// Verification routines shared by the unit tests and the acceptance suite.
// Each one runs an agent and re-derives the quantity under test through an
// independent route (policy evaluation on one side, occupancy-weighted
// sums on the other).

namespace gmbrl::test {

// Exact value-update identity of the exact-model agent: per episode,
//   Vbar^{k-1}_1(s_1) - V^{pi_k}_1(s_1)
//     = sum_t sum_s w_tk(s) (Vbar^{k-1}_t(s) - updated_t(s)),
// the left side via policy evaluation, the right via occupancy weights.
// Returns the largest |LHS - RHS| over the run.
double rtdp_update_identity_gap(const TabularMdp& mdp, int episodes, std::uint64_t seed);

// Per-episode two-term upper bound on the same difference for the
// optimistic-model agents:
//   LHS <= sum_t E[update] + sum_t E[(r~ - r) + (p~ - p)^T Vbar_{t+1}],
// all expectations taken exactly through occupancy weights. Returns the
// smallest slack (RHS - LHS) over the run; anything >= -1e-9 is a pass.
double greedy_update_bound_min_slack(const TabularMdp& mdp, GreedyAgent::Backend backend,
                                     int episodes, double delta, std::uint64_t seed);

// Pointwise value invariants over a full run of any agent id.
struct InvariantScan {
  double min_upper_margin = 0.0;    // min over (k,s,t) of upper - V*
  double max_upper_increase = 0.0;  // max over (k,s,t) of upper_k - upper_{k-1}
  double max_lower_margin = 0.0;    // max over (k,s,t) of lower - V* (lower-tracking agents)
  double max_lower_decrease = 0.0;  // max over (k,s,t) of lower_{k-1} - lower_k
  bool tracks_lower = false;
  bool policy_reproduced = true;    // materialized policy matched every action taken
};
InvariantScan scan_agent_invariants(const TabularMdp& mdp, const std::string& agent_id,
                                    int episodes, double delta, std::uint64_t seed);

}  // namespace gmbrl::test

#endif  // GMBRL_TESTS_CHECKS_HPP_
