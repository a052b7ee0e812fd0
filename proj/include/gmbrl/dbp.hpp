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

#ifndef GMBRL_DBP_HPP_
#define GMBRL_DBP_HPP_

#include <cstdint>
#include <vector>

#include "gmbrl/mdp.hpp"
#include "gmbrl/rng.hpp"

// Decreasing bounded processes: nonincreasing, nonnegative adapted sequences
// started at a constant C. Their "regret" R_K sums the per-step drifts
// X_{k-1} - E[X_k | F_{k-1}], and with probability at least 1 - delta it
// never crosses C (1 + 2 sqrt(ln(2/delta)))^2, hence never 9 C ln(3/delta).
// This module realizes such processes with analytically known conditional
// expectations and measures how often the thresholds are crossed.

namespace gmbrl {

struct DbpTrace {
  double bound = 0.0;                      // C = X_0
  std::vector<double> values;              // X_0 .. X_K
  std::vector<double> cond_expectations;   // E[X_k | F_{k-1}] for k = 1 .. K
};

// Throws std::invalid_argument naming the first offending step when the
// trace is not a decreasing bounded process (or the supplied expectations
// are inconsistent with it). Comparisons carry a 1e-12 slack for rounding.
void validate_trace(const DbpTrace& trace);

// Partial sums R_1 .. R_K of X_{k-1} - E[X_k | F_{k-1}]. Validates first.
std::vector<double> dbp_regret(const DbpTrace& trace);

struct DbpGenerator {
  enum class Kind {
    kGeometricDrop,        // holds at C, drops to 0 with probability q per step
    kMultiplicativeDecay,  // X_k = X_{k-1} * U_k, U_k ~ Uniform[alpha, 1]
  };
  Kind kind = Kind::kGeometricDrop;
  double param = 0.5;  // q or alpha
};

// One realized trace of `rounds` steps with exact conditional expectations:
// (1 - q) X_{k-1} for the drop generator, (1 + alpha)/2 X_{k-1} for the
// decay generator.
DbpTrace synth_dbp(const DbpGenerator& generator, double bound, int rounds, Rng& rng);

// Per-(s, t) value sequences of a fresh RTDP run on `mdp`, each a realized
// decreasing bounded process with C = H - (t - 1). The conditional
// expectation of step k is w * updated + (1 - w) * previous, where w is the
// occupancy probability of visiting (s, t) under the episode's policy and
// `updated` is the (deterministic given the history) value the visit would
// write. Traces are ordered by (t, s).
std::vector<DbpTrace> rtdp_coupled_traces(const TabularMdp& mdp, int episodes, Rng& rng);

struct BoundCheck {
  double threshold = 0.0;        // 9 C ln(3/delta)
  double threshold_sharp = 0.0;  // C (1 + 2 sqrt(ln(2/delta)))^2
  int trials = 0;
  int violations = 0;        // sup_K R_K >= threshold
  int violations_sharp = 0;  // sup_K R_K >= threshold_sharp
  double frequency() const { return static_cast<double>(violations) / trials; }
  double frequency_sharp() const { return static_cast<double>(violations_sharp) / trials; }
};

// Monte-Carlo check of the concentration bound: `trials` independent traces
// of `rounds` steps each (trials run in parallel; trial i draws from a child
// seed of `seed`). R_K is nondecreasing, so its supremum over the truncated
// horizon is the final partial sum.
BoundCheck verify_bound(const DbpGenerator& generator, double bound, double delta, int trials,
                        int rounds, std::uint64_t seed);

}  // namespace gmbrl

#endif  // GMBRL_DBP_HPP_
