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

#include "gmbrl/bonus.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace gmbrl {

BonusParams BonusParams::ucrl2(const TabularMdp& mdp, int max_episodes, double delta) {
  if (delta <= 0.0 || delta >= 1.0) throw std::invalid_argument("delta must be in (0,1)");
  if (max_episodes < 1) throw std::invalid_argument("max_episodes must be >= 1");
  BonusParams p;
  p.num_states = mdp.num_states();
  p.num_actions = mdp.num_actions();
  p.horizon = mdp.horizon();
  p.delta = delta;
  p.delta_prime = delta / 4.0;
  p.total_samples = static_cast<double>(max_episodes) * mdp.horizon();
  const double sat = static_cast<double>(p.num_states) * p.num_actions * p.total_samples;
  p.log_reward = std::log(2.0 * sat / p.delta_prime);
  p.log_transition = std::log(3.0 * sat / p.delta_prime);
  return p;
}

BonusParams BonusParams::euler(const TabularMdp& mdp, int max_episodes, double delta) {
  if (delta <= 0.0 || delta >= 1.0) throw std::invalid_argument("delta must be in (0,1)");
  if (max_episodes < 1) throw std::invalid_argument("max_episodes must be >= 1");
  BonusParams p;
  p.num_states = mdp.num_states();
  p.num_actions = mdp.num_actions();
  p.horizon = mdp.horizon();
  p.delta = delta;
  p.delta_prime = delta / 9.0;
  p.total_samples = static_cast<double>(max_episodes) * mdp.horizon();
  const double sat = static_cast<double>(p.num_states) * p.num_actions * p.total_samples;
  p.log_term = std::log(4.0 * sat / p.delta_prime);
  p.width_scale = 2.0 * std::sqrt(p.log_term);
  p.second_order_cap = 2.0 * p.horizon * p.log_term / 3.0;
  p.value_sensitivity = std::sqrt(2.0 * p.log_term);
  p.model_sensitivity = p.horizon * std::sqrt(2.0 * p.log_term);
  return p;
}

BonusParams BonusParams::exact(const TabularMdp& mdp) {
  BonusParams p;
  p.num_states = mdp.num_states();
  p.num_actions = mdp.num_actions();
  p.horizon = mdp.horizon();
  return p;
}

L1MaxResult l1_inner_max(std::span<const double> p_hat, double radius,
                         std::span<const double> v) {
  if (p_hat.size() != v.size()) {
    throw std::invalid_argument("l1_inner_max: dimension mismatch");
  }
  const int n = static_cast<int>(v.size());

  int best = 0;
  for (int i = 1; i < n; ++i) {
    if (v[i] > v[best]) best = i;
  }

  L1MaxResult result;
  result.distribution.assign(p_hat.begin(), p_hat.end());

  const bool unvisited = std::all_of(p_hat.begin(), p_hat.end(), [](double p) { return p == 0.0; });
  if (unvisited) {
    // No mass constraint to respect: the confidence set is the whole simplex.
    result.distribution[best] = 1.0;
    result.value = v[best];
    return result;
  }

  double add = std::min(radius / 2.0, 1.0 - result.distribution[best]);
  if (add < 0.0) add = 0.0;
  result.distribution[best] += add;

  // Drain the added mass from the cheapest states first.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    if (v[i] != v[j]) return v[i] < v[j];
    return i < j;
  });
  double remaining = add;
  for (int i : order) {
    if (remaining <= 0.0) break;
    if (i == best) continue;
    const double take = std::min(result.distribution[i], remaining);
    result.distribution[i] -= take;
    remaining -= take;
  }

  double value = 0.0;
  for (int i = 0; i < n; ++i) value += result.distribution[i] * v[i];
  result.value = value;
  return result;
}

namespace {

inline double l1_radius(const EmpiricalModel& model, int s, int a, const BonusParams& params) {
  const double den = static_cast<double>(model.denominator(s, a));
  return std::sqrt(4.0 * params.num_states * params.log_transition / den);
}

inline double reward_width(const EmpiricalModel& model, int s, int a,
                           const BonusParams& params) {
  const double den = static_cast<double>(model.denominator(s, a));
  return std::sqrt(2.0 * params.log_reward / den);
}

}  // namespace

void ucrl2gp_q(const EmpiricalModel& model, int s, std::span<const double> v_upper_next,
               const BonusParams& params, std::span<double> q_out) {
  for (int a = 0; a < model.num_actions(); ++a) {
    const double optimistic_reward = model.mean_reward(s, a) + reward_width(model, s, a, params);
    const std::vector<double> row = model.p_hat_row(s, a);
    const L1MaxResult inner = l1_inner_max(row, l1_radius(model, s, a, params), v_upper_next);
    q_out[a] = optimistic_reward + inner.value;
  }
}

OptimisticEntry ucrl2gp_optimistic_model(const EmpiricalModel& model, int s, int a,
                                         std::span<const double> v_upper_next,
                                         const BonusParams& params) {
  OptimisticEntry entry;
  entry.reward = model.mean_reward(s, a) + reward_width(model, s, a, params);
  const std::vector<double> row = model.p_hat_row(s, a);
  entry.distribution =
      l1_inner_max(row, l1_radius(model, s, a, params), v_upper_next).distribution;
  return entry;
}

double euler_reward_bonus(const EmpiricalModel& model, int s, int a, const BonusParams& params) {
  const double den = static_cast<double>(model.denominator(s, a));
  return std::sqrt(2.0 * model.reward_variance(s, a) * params.log_term / den) +
         14.0 * params.log_term / (3.0 * den);
}

double euler_phi(const EmpiricalModel& model, int s, int a, std::span<const double> v,
                 const BonusParams& params) {
  const double den = static_cast<double>(model.denominator(s, a));
  return std::sqrt(2.0 * model.p_hat_variance(s, a, v) * params.log_term / den) +
         2.0 * params.horizon * params.log_term / (3.0 * den);
}

double euler_value_bonus(const EmpiricalModel& model, int s, int a,
                         std::span<const double> v_pair, std::span<const double> v_upper_next,
                         std::span<const double> v_lower_next, const BonusParams& params) {
  const double den = static_cast<double>(model.denominator(s, a));
  return euler_phi(model, s, a, v_pair, params) +
         (4.0 * params.second_order_cap + params.model_sensitivity) / den +
         params.value_sensitivity * model.p_hat_l2_diff(s, a, v_upper_next, v_lower_next) /
             std::sqrt(den);
}

void eulergp_q(const EmpiricalModel& model, int s, std::span<const double> v_upper_next,
               std::span<const double> v_lower_next, const BonusParams& params,
               std::span<double> q_out) {
  for (int a = 0; a < model.num_actions(); ++a) {
    q_out[a] = model.mean_reward(s, a) + euler_reward_bonus(model, s, a, params) +
               model.p_hat_dot(s, a, v_upper_next) +
               euler_value_bonus(model, s, a, v_upper_next, v_upper_next, v_lower_next, params);
  }
}

double eulergp_q_lower(const EmpiricalModel& model, int s, int a,
                       std::span<const double> v_upper_next,
                       std::span<const double> v_lower_next, const BonusParams& params) {
  return model.mean_reward(s, a) - euler_reward_bonus(model, s, a, params) +
         model.p_hat_dot(s, a, v_lower_next) -
         euler_value_bonus(model, s, a, v_lower_next, v_upper_next, v_lower_next, params);
}

}  // namespace gmbrl
