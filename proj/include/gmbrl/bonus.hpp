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

#ifndef GMBRL_BONUS_HPP_
#define GMBRL_BONUS_HPP_

#include <span>
#include <vector>

#include "gmbrl/empirical.hpp"
#include "gmbrl/mdp.hpp"

// Optimistic Q construction: the confidence-width constants and the two
// bonus backends (Hoeffding/L1 widths and empirical-Bernstein widths). Both
// backends read only frozen end-of-previous-episode statistics, which keeps
// the policies they induce measurable w.r.t. that episode's history.

namespace gmbrl {

// Confidence-width constants, fixed at construction. T is the total sample
// budget max_episodes * H; the widths carry ln(c*S*A*T/delta') terms, so T
// must be known up front. delta' is delta/4 for the L1 backend and delta/9
// for the Bernstein backend.
struct BonusParams {
  int num_states = 0;
  int num_actions = 0;
  int horizon = 0;
  double delta = 1.0;
  double delta_prime = 1.0;
  double total_samples = 0.0;  // T

  // L1 backend: reward width ln(2SAT/delta'), transition width ln(3SAT/delta').
  double log_reward = 0.0;
  double log_transition = 0.0;

  // Bernstein backend, all from log_term = ln(4SAT/delta'):
  //   L = 2 sqrt(log_term), J = (2H/3) log_term,
  //   B_v = sqrt(2 log_term), B_p = H sqrt(2 log_term).
  double log_term = 0.0;
  double width_scale = 0.0;        // L
  double second_order_cap = 0.0;   // J
  double value_sensitivity = 0.0;  // B_v
  double model_sensitivity = 0.0;  // B_p

  static BonusParams ucrl2(const TabularMdp& mdp, int max_episodes, double delta);
  static BonusParams euler(const TabularMdp& mdp, int max_episodes, double delta);
  // All widths zero: the optimistic Q degenerates to the empirical Q.
  // Used to check that the planners reduce to value iteration in the
  // infinite-data limit.
  static BonusParams exact(const TabularMdp& mdp);
};

struct L1MaxResult {
  double value;
  std::vector<double> distribution;
};

// max over distributions P' with ||P' - p_hat||_1 <= radius of P'^T v,
// solved by moving min(radius/2, 1 - p_hat(s*)) mass onto the v-argmax
// state and draining states in ascending-v order. An all-zeros p_hat (the
// unvisited-pair row) is treated as the full simplex: the result is a point
// mass on the argmax. Ties break to the lowest state index.
L1MaxResult l1_inner_max(std::span<const double> p_hat, double radius,
                         std::span<const double> v);

// L1/Hoeffding backend: per-action optimistic Q row at state s against the
// next-step upper-value row.
//   r~(s,a) = r^(s,a) + sqrt(2 log_reward / (n v 1))
//   radius(s,a) = sqrt(4 S log_transition / (n v 1))
//   Q(s,a) = r~ + max_{P' in CI} P'^T v
void ucrl2gp_q(const EmpiricalModel& model, int s, std::span<const double> v_upper_next,
               const BonusParams& params, std::span<double> q_out);

// The optimistic model pair (r~, p~) behind one entry of the row above.
// Exposed so harness-side accounting can weigh (r~ - r) and (p~ - p)^T v
// exactly.
struct OptimisticEntry {
  double reward;                     // r~(s,a)
  std::vector<double> distribution;  // p~(.|s,a)
};
OptimisticEntry ucrl2gp_optimistic_model(const EmpiricalModel& model, int s, int a,
                                         std::span<const double> v_upper_next,
                                         const BonusParams& params);

// Bernstein backend pieces. b_r is the reward bonus; phi the transition
// confidence of a value row; value_bonus the full b_pv term with pairing
// row v_pair (the upper row for Q-bar, the lower row for Q-underbar):
//   b_r = sqrt(2 VarR log_term / (n v 1)) + 14 log_term / (3 (n v 1))
//   phi(p^, v) = sqrt(2 Var_{p^}(v) log_term / (n v 1)) + 2H log_term / (3 (n v 1))
//   b_pv = phi(p^, v_pair) + (4J + B_p)/(n v 1) + B_v ||vu - vl||_{2,p^} / sqrt(n v 1)
double euler_reward_bonus(const EmpiricalModel& model, int s, int a, const BonusParams& params);
double euler_phi(const EmpiricalModel& model, int s, int a, std::span<const double> v,
                 const BonusParams& params);
double euler_value_bonus(const EmpiricalModel& model, int s, int a,
                         std::span<const double> v_pair, std::span<const double> v_upper_next,
                         std::span<const double> v_lower_next, const BonusParams& params);

// Per-action upper Q row: Q(s,a) = r^ + b_r + p^^T vu + b_pv(vu pairing).
void eulergp_q(const EmpiricalModel& model, int s, std::span<const double> v_upper_next,
               std::span<const double> v_lower_next, const BonusParams& params,
               std::span<double> q_out);

// Lower Q for one action: Q(s,a) = r^ - b_r + p^^T vl - b_pv(vl pairing).
// Only the chosen action's lower value is ever needed.
double eulergp_q_lower(const EmpiricalModel& model, int s, int a,
                       std::span<const double> v_upper_next,
                       std::span<const double> v_lower_next, const BonusParams& params);

}  // namespace gmbrl

#endif  // GMBRL_BONUS_HPP_
