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

#include "gmbrl/dbp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "gmbrl/dp.hpp"
#include "gmbrl/kernels.hpp"
#include "gmbrl/rtdp.hpp"

namespace gmbrl {

namespace {
constexpr double kTraceSlack = 1e-12;
}

void validate_trace(const DbpTrace& trace) {
  if (trace.values.empty()) throw std::invalid_argument("DbpTrace: empty value sequence");
  if (trace.cond_expectations.size() + 1 != trace.values.size()) {
    throw std::invalid_argument("DbpTrace: expectations must align with steps 1..K");
  }
  if (trace.bound < 0.0 || trace.values[0] != trace.bound) {
    throw std::invalid_argument("DbpTrace: X_0 must equal the bound C >= 0");
  }
  for (std::size_t k = 1; k < trace.values.size(); ++k) {
    if (trace.values[k] < -kTraceSlack) {
      throw std::invalid_argument("DbpTrace: negative value at step " + std::to_string(k));
    }
    if (trace.values[k] > trace.values[k - 1] + kTraceSlack) {
      throw std::invalid_argument("DbpTrace: increase at step " + std::to_string(k));
    }
    if (trace.cond_expectations[k - 1] > trace.values[k - 1] + kTraceSlack) {
      throw std::invalid_argument("DbpTrace: conditional expectation exceeds X_{k-1} at step " +
                                  std::to_string(k));
    }
  }
}

std::vector<double> dbp_regret(const DbpTrace& trace) {
  validate_trace(trace);
  std::vector<double> partial(trace.cond_expectations.size());
  double sum = 0.0;
  for (std::size_t k = 0; k < partial.size(); ++k) {
    sum += trace.values[k] - trace.cond_expectations[k];
    partial[k] = sum;
  }
  return partial;
}

DbpTrace synth_dbp(const DbpGenerator& generator, double bound, int rounds, Rng& rng) {
  if (bound < 0.0) throw std::invalid_argument("synth_dbp: bound must be >= 0");
  if (rounds < 1) throw std::invalid_argument("synth_dbp: rounds must be >= 1");
  if (generator.param < 0.0 || generator.param > 1.0) {
    throw std::invalid_argument("synth_dbp: generator parameter must be in [0,1]");
  }

  DbpTrace trace;
  trace.bound = bound;
  trace.values.reserve(rounds + 1);
  trace.cond_expectations.reserve(rounds);
  trace.values.push_back(bound);

  double x = bound;
  for (int k = 0; k < rounds; ++k) {
    switch (generator.kind) {
      case DbpGenerator::Kind::kGeometricDrop:
        trace.cond_expectations.push_back((1.0 - generator.param) * x);
        if (rng.bernoulli(generator.param)) x = 0.0;
        break;
      case DbpGenerator::Kind::kMultiplicativeDecay:
        trace.cond_expectations.push_back(0.5 * (1.0 + generator.param) * x);
        x *= rng.uniform(generator.param, 1.0);
        break;
    }
    trace.values.push_back(x);
  }
  return trace;
}

std::vector<DbpTrace> rtdp_coupled_traces(const TabularMdp& mdp, int episodes, Rng& rng) {
  const int horizon = mdp.horizon();
  const int num_states = mdp.num_states();

  std::vector<DbpTrace> traces(static_cast<std::size_t>(horizon) * num_states);
  for (int t = 1; t <= horizon; ++t) {
    for (int s = 0; s < num_states; ++s) {
      DbpTrace& trace = traces[static_cast<std::size_t>(t - 1) * num_states + s];
      trace.bound = static_cast<double>(horizon - (t - 1));
      trace.values.push_back(trace.bound);
    }
  }

  RtdpAgent agent(mdp);
  std::vector<double> scratch(num_states);
  for (int k = 0; k < episodes; ++k) {
    const ValueTable previous = agent.upper_values();
    const DeterministicPolicy policy = agent.materialize_policy();
    const OccupancyTable weights = occupancy(mdp, policy, mdp.start_state());

    for (int t = 1; t <= horizon; ++t) {
      kernels::backup_max(mdp, previous.row(t + 1), scratch);
      for (int s = 0; s < num_states; ++s) {
        DbpTrace& trace = traces[static_cast<std::size_t>(t - 1) * num_states + s];
        const double prev = previous(t, s);
        const double updated = std::min(prev, scratch[s]);  // the value a visit writes
        const double w = weights.state_weight(t, s);
        trace.cond_expectations.push_back(w * updated + (1.0 - w) * prev);
      }
    }

    agent.run_episode(rng);
    const ValueTable& current = agent.upper_values();
    for (int t = 1; t <= horizon; ++t) {
      for (int s = 0; s < num_states; ++s) {
        traces[static_cast<std::size_t>(t - 1) * num_states + s].values.push_back(current(t, s));
      }
    }
  }
  return traces;
}

BoundCheck verify_bound(const DbpGenerator& generator, double bound, double delta, int trials,
                        int rounds, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("verify_bound: trials must be >= 1");
  if (delta <= 0.0 || delta >= 1.0) throw std::invalid_argument("verify_bound: delta in (0,1)");
  if (generator.param < 0.0 || generator.param > 1.0 || bound < 0.0 || rounds < 1) {
    // Reject here so nothing can throw inside the parallel trial loop.
    throw std::invalid_argument("verify_bound: invalid generator configuration");
  }

  BoundCheck check;
  check.trials = trials;
  check.threshold = 9.0 * bound * std::log(3.0 / delta);
  const double root = 1.0 + 2.0 * std::sqrt(std::log(2.0 / delta));
  check.threshold_sharp = bound * root * root;

  int violations = 0;
  int violations_sharp = 0;
#pragma omp parallel for schedule(static) reduction(+ : violations, violations_sharp)
  for (int trial = 0; trial < trials; ++trial) {
    Rng rng(hash64(seed, static_cast<std::uint64_t>(trial)));
    const DbpTrace trace = synth_dbp(generator, bound, rounds, rng);
    const std::vector<double> regret = dbp_regret(trace);
    const double sup = regret.back();  // partial sums are nondecreasing
    if (sup >= check.threshold) ++violations;
    if (sup >= check.threshold_sharp) ++violations_sharp;
  }
  check.violations = violations;
  check.violations_sharp = violations_sharp;
  return check;
}

}  // namespace gmbrl
