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

#ifndef GMBRL_EMPIRICAL_HPP_
#define GMBRL_EMPIRICAL_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "gmbrl/mdp.hpp"

namespace gmbrl {

// Streaming sufficient statistics of the environment: visit counts n(s,a),
// transition counts n(s,a,s'), and the reward first/second moments behind
// the empirical mean and (population) variance. Updates land in one batch at
// episode end, so during an episode every read sees the frozen
// end-of-previous-episode state; batch_update is the commit boundary.
//
// The n-or-1 denominator convention lives here, once: all derived
// quantities divide by max(n, 1). With n = 0 the empirical transition row is
// all-zeros (so any p_hat inner product is 0) and the reward statistics are
// 0; exploration bonuses are responsible for keeping unvisited pairs
// maximally optimistic.
class EmpiricalModel {
 public:
  EmpiricalModel(int num_states, int num_actions);

  // Folds a single transition in. batch_update is the episode-level entry
  // point; this one is the ingestion primitive (also handy in tests).
  void observe(int s, int a, double reward, int next_state);

  // Folds all H transitions of an episode in at once.
  void batch_update(const Trajectory& trajectory);

  std::int64_t visit_count(int s, int a) const { return visits_[index(s, a)]; }
  std::int64_t denominator(int s, int a) const {  // n(s,a) v 1
    const std::int64_t n = visits_[index(s, a)];
    return n > 0 ? n : 1;
  }

  // All derived statistics of one pair in one shot.
  struct Estimates {
    std::int64_t visits;
    double mean_reward;
    double reward_variance;
    std::vector<double> p_hat;
  };
  Estimates estimates(int s, int a) const {
    return {visit_count(s, a), mean_reward(s, a), reward_variance(s, a), p_hat_row(s, a)};
  }

  double mean_reward(int s, int a) const {
    return reward_sum_[index(s, a)] / static_cast<double>(denominator(s, a));
  }
  // Population variance of the observed rewards, clamped at >= 0.
  double reward_variance(int s, int a) const;

  std::span<const std::int64_t> transition_counts(int s, int a) const {
    return {counts_.data() + index(s, a) * num_states_, static_cast<std::size_t>(num_states_)};
  }
  // Successors observed so far at (s, a), ascending. A subset of the true
  // support, so inner products over it cost O(support).
  std::span<const int> seen_successors(int s, int a) const {
    const auto& seen = seen_[index(s, a)];
    return {seen.data(), seen.size()};
  }

  double p_hat(int s, int a, int s2) const {
    return static_cast<double>(counts_[index(s, a) * num_states_ + s2]) /
           static_cast<double>(denominator(s, a));
  }
  // Dense empirical row; all-zeros when n = 0.
  std::vector<double> p_hat_row(int s, int a) const;

  // p_hat(.|s,a)^T v. Zero when n = 0.
  double p_hat_dot(int s, int a, std::span<const double> v) const;
  // Var_{p_hat}(v), clamped at >= 0; zero when n = 0.
  double p_hat_variance(int s, int a, std::span<const double> v) const;
  // sqrt( sum_{s'} p_hat(s') (v1(s') - v2(s'))^2 ).
  double p_hat_l2_diff(int s, int a, std::span<const double> v1,
                       std::span<const double> v2) const;

  int num_states() const { return num_states_; }
  int num_actions() const { return num_actions_; }

 private:
  std::size_t index(int s, int a) const {
    return static_cast<std::size_t>(s) * num_actions_ + a;
  }

  int num_states_;
  int num_actions_;
  std::vector<std::int64_t> visits_;        // S*A
  std::vector<std::int64_t> counts_;        // S*A*S
  std::vector<double> reward_sum_;          // S*A
  std::vector<double> reward_sq_sum_;       // S*A
  std::vector<std::vector<int>> seen_;      // S*A sorted successor lists
};

}  // namespace gmbrl

#endif  // GMBRL_EMPIRICAL_HPP_
