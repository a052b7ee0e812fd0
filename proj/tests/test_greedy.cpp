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

#include "checks.hpp"
#include "doctest.h"
#include "gmbrl/environments.hpp"
#include "gmbrl/greedy.hpp"

using namespace gmbrl;

namespace {

TabularMdp bernoulli_chain(int n) {
  ChainSpec spec;
  spec.length = n;
  spec.reward_kind = RewardKind::kBernoulli;
  return make_chain(spec);
}

GreedyAgent make(const TabularMdp& mdp, GreedyAgent::Backend backend, int episodes,
                 double delta) {
  const BonusParams params = backend == GreedyAgent::Backend::kUcrl2Gp
                                 ? BonusParams::ucrl2(mdp, episodes, delta)
                                 : BonusParams::euler(mdp, episodes, delta);
  return GreedyAgent(mdp, backend, params);
}

}  // namespace

TEST_CASE("one-step planning costs exactly A*H per episode") {
  const TabularMdp mdp = bernoulli_chain(6);
  for (auto backend : {GreedyAgent::Backend::kUcrl2Gp, GreedyAgent::Backend::kEulerGp}) {
    GreedyAgent agent = make(mdp, backend, 50, 0.1);
    Rng rng(5);
    for (int k = 0; k < 50; ++k) {
      const EpisodeOutcome outcome = agent.run_episode(rng);
      CHECK(outcome.q_evals == static_cast<std::uint64_t>(2 * 6));
      CHECK(outcome.update_total >= 0.0);
    }
  }
}

TEST_CASE("at most H upper cells change per episode") {
  const TabularMdp mdp = bernoulli_chain(5);
  GreedyAgent agent = make(mdp, GreedyAgent::Backend::kUcrl2Gp, 200, 0.05);
  Rng rng(11);
  for (int k = 0; k < 200; ++k) {
    const ValueTable before = agent.upper_values();
    agent.run_episode(rng);
    const ValueTable& after = agent.upper_values();
    int changed = 0;
    for (int t = 1; t <= mdp.horizon(); ++t) {
      for (int s = 0; s < mdp.num_states(); ++s) {
        if (after(t, s) != before(t, s)) ++changed;
        CHECK(after(t, s) <= before(t, s));
      }
    }
    CHECK(changed <= mdp.horizon());
  }
}

TEST_CASE("value invariants hold across a full run of both backends") {
  const TabularMdp mdp = bernoulli_chain(5);
  for (const char* id : {"ucrl2-gp", "euler-gp"}) {
    for (std::uint64_t seed : {0, 1}) {
      const test::InvariantScan scan = test::scan_agent_invariants(mdp, id, 300, 0.05, seed);
      CHECK(scan.min_upper_margin >= -1e-9);
      CHECK(scan.max_upper_increase <= 0.0);
      CHECK(scan.policy_reproduced);
      if (scan.tracks_lower) {
        CHECK(scan.max_lower_margin <= 1e-9);   // lower values never cross V*
        CHECK(scan.max_lower_decrease <= 0.0);  // and never decrease
      }
    }
  }
}

TEST_CASE("the optimistic-model update bound holds every episode") {
  const TabularMdp mdp = bernoulli_chain(5);
  CHECK(test::greedy_update_bound_min_slack(mdp, GreedyAgent::Backend::kUcrl2Gp, 120, 0.1, 21) >=
        -1e-9);
  CHECK(test::greedy_update_bound_min_slack(mdp, GreedyAgent::Backend::kEulerGp, 120, 0.1, 22) >=
        -1e-9);
}

TEST_CASE("episode-1 rows are count-free and tie to the first action") {
  const TabularMdp mdp = bernoulli_chain(4);
  GreedyAgent agent = make(mdp, GreedyAgent::Backend::kUcrl2Gp, 10, 0.1);
  std::vector<double> q(2);
  agent.optimistic_q_row(mdp.start_state(), 1, q);
  CHECK(q[0] == q[1]);  // nothing observed yet, both actions look identical
  const DeterministicPolicy policy = agent.materialize_policy();
  CHECK(policy(1, mdp.start_state()) == 0);
}

TEST_CASE("lower values stay below upper values under the Bernstein backend") {
  const TabularMdp mdp = bernoulli_chain(5);
  GreedyAgent agent = make(mdp, GreedyAgent::Backend::kEulerGp, 300, 0.05);
  Rng rng(31);
  for (int k = 0; k < 300; ++k) agent.run_episode(rng);
  const ValueTable& upper = agent.upper_values();
  const ValueTable& lower = *agent.lower_values();
  for (int t = 1; t <= mdp.horizon(); ++t) {
    for (int s = 0; s < mdp.num_states(); ++s) {
      CHECK(lower(t, s) <= upper(t, s) + 1e-9);
      CHECK(lower(t, s) >= 0.0);
    }
  }
}
