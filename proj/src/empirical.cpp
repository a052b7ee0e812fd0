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

#include "gmbrl/empirical.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace gmbrl {

EmpiricalModel::EmpiricalModel(int num_states, int num_actions)
    : num_states_(num_states),
      num_actions_(num_actions),
      visits_(static_cast<std::size_t>(num_states) * num_actions, 0),
      counts_(static_cast<std::size_t>(num_states) * num_actions * num_states, 0),
      reward_sum_(static_cast<std::size_t>(num_states) * num_actions, 0.0),
      reward_sq_sum_(static_cast<std::size_t>(num_states) * num_actions, 0.0),
      seen_(static_cast<std::size_t>(num_states) * num_actions) {
  if (num_states <= 0 || num_actions <= 0) {
    throw std::invalid_argument("EmpiricalModel: S and A must be positive");
  }
}

void EmpiricalModel::observe(int s, int a, double reward, int next_state) {
  if (s < 0 || s >= num_states_ || a < 0 || a >= num_actions_ || next_state < 0 ||
      next_state >= num_states_) {
    throw std::out_of_range("EmpiricalModel::observe: transition (s=" + std::to_string(s) +
                            ", a=" + std::to_string(a) + ", s'=" + std::to_string(next_state) +
                            ") outside the model's state-action space");
  }
  const std::size_t sa = index(s, a);
  visits_[sa] += 1;
  reward_sum_[sa] += reward;
  reward_sq_sum_[sa] += reward * reward;
  std::int64_t& count = counts_[sa * num_states_ + next_state];
  if (count == 0) {
    auto& seen = seen_[sa];
    seen.insert(std::lower_bound(seen.begin(), seen.end(), next_state), next_state);
  }
  count += 1;
}

void EmpiricalModel::batch_update(const Trajectory& trajectory) {
  for (const TrajectoryStep& step : trajectory) {
    observe(step.state, step.action, step.reward, step.next_state);
  }
}

double EmpiricalModel::reward_variance(int s, int a) const {
  const double n = static_cast<double>(denominator(s, a));
  const double mean = reward_sum_[index(s, a)] / n;
  const double second = reward_sq_sum_[index(s, a)] / n;
  return std::max(second - mean * mean, 0.0);
}

std::vector<double> EmpiricalModel::p_hat_row(int s, int a) const {
  std::vector<double> row(num_states_, 0.0);
  const double n = static_cast<double>(denominator(s, a));
  for (int s2 : seen_successors(s, a)) {
    row[s2] = static_cast<double>(counts_[index(s, a) * num_states_ + s2]) / n;
  }
  return row;
}

double EmpiricalModel::p_hat_dot(int s, int a, std::span<const double> v) const {
  const double n = static_cast<double>(denominator(s, a));
  double sum = 0.0;
  for (int s2 : seen_successors(s, a)) {
    sum += static_cast<double>(counts_[index(s, a) * num_states_ + s2]) * v[s2];
  }
  return sum / n;
}

double EmpiricalModel::p_hat_variance(int s, int a, std::span<const double> v) const {
  const double n = static_cast<double>(denominator(s, a));
  double first = 0.0;
  double second = 0.0;
  for (int s2 : seen_successors(s, a)) {
    const double p = static_cast<double>(counts_[index(s, a) * num_states_ + s2]);
    first += p * v[s2];
    second += p * v[s2] * v[s2];
  }
  first /= n;
  second /= n;
  return std::max(second - first * first, 0.0);
}

double EmpiricalModel::p_hat_l2_diff(int s, int a, std::span<const double> v1,
                                     std::span<const double> v2) const {
  const double n = static_cast<double>(denominator(s, a));
  double sum = 0.0;
  for (int s2 : seen_successors(s, a)) {
    const double d = v1[s2] - v2[s2];
    sum += static_cast<double>(counts_[index(s, a) * num_states_ + s2]) * d * d;
  }
  return std::sqrt(sum / n);
}

}  // namespace gmbrl
