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

#ifndef GMBRL_MDP_HPP_
#define GMBRL_MDP_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "gmbrl/rng.hpp"

namespace gmbrl {

// Per-(state, action) reward distribution. The mean is what every dynamic
// programming backup uses; sampling only happens inside episodes.
struct RewardDistribution {
  enum class Kind { kDeterministic, kBernoulli, kGaussian };

  Kind kind = Kind::kDeterministic;
  double mean = 0.0;
  double stddev = 0.0;  // Gaussian only

  double sample(Rng& rng) const {
    switch (kind) {
      case Kind::kDeterministic:
        return mean;
      case Kind::kBernoulli:
        return rng.bernoulli(mean) ? 1.0 : 0.0;
      case Kind::kGaussian:
        return rng.gaussian(mean, stddev);
    }
    return mean;
  }

  bool operator==(const RewardDistribution&) const = default;
};

// Ground-truth finite-horizon MDP with time-independent dynamics:
// S states, A actions, horizon H, dense row-stochastic transition table and
// one RewardDistribution per (s, a). Alongside the dense table it keeps the
// nonzero-successor index list of every (s, a), so inner products cost
// O(support) instead of O(S); max_support() is the largest such list.
//
// Construction validates everything (rows sum to 1 within 1e-12, entries
// nonnegative, start state in range) and throws std::invalid_argument with
// the offending (s, a) otherwise.
class TabularMdp {
 public:
  TabularMdp(int num_states, int num_actions, int horizon, int start_state,
             std::vector<double> transitions,  // S*A*S, row-major (s, a, s')
             std::vector<RewardDistribution> rewards);  // S*A, row-major

  int num_states() const { return num_states_; }
  int num_actions() const { return num_actions_; }
  int horizon() const { return horizon_; }
  int start_state() const { return start_state_; }
  int max_support() const { return max_support_; }

  double transition(int s, int a, int s2) const {
    return transitions_[(static_cast<std::size_t>(s) * num_actions_ + a) * num_states_ + s2];
  }
  std::span<const double> transition_row(int s, int a) const {
    return {transitions_.data() + (static_cast<std::size_t>(s) * num_actions_ + a) * num_states_,
            static_cast<std::size_t>(num_states_)};
  }
  // Indices of the nonzero entries of transition_row(s, a), ascending.
  std::span<const int> support(int s, int a) const {
    const std::size_t sa = static_cast<std::size_t>(s) * num_actions_ + a;
    return {support_.data() + support_begin_[sa],
            support_begin_[sa + 1] - support_begin_[sa]};
  }

  const RewardDistribution& reward(int s, int a) const {
    return rewards_[static_cast<std::size_t>(s) * num_actions_ + a];
  }
  double mean_reward(int s, int a) const { return reward(s, a).mean; }

  bool operator==(const TabularMdp&) const = default;

 private:
  int num_states_;
  int num_actions_;
  int horizon_;
  int start_state_;
  std::vector<double> transitions_;
  std::vector<RewardDistribution> rewards_;
  std::vector<int> support_;
  std::vector<std::size_t> support_begin_;  // S*A + 1 offsets into support_
  int max_support_;
};

// (H+1) x S table of real values indexed by timestep t in [1, H+1] and
// state. Row H+1 is the terminal convention and stays identically zero.
class ValueTable {
 public:
  ValueTable() = default;
  ValueTable(int horizon, int num_states, double fill = 0.0);

  double operator()(int t, int s) const { return values_[index(t, s)]; }
  double& operator()(int t, int s) { return values_[index(t, s)]; }

  std::span<const double> row(int t) const {
    return {values_.data() + index(t, 0), static_cast<std::size_t>(num_states_)};
  }
  std::span<double> row(int t) {
    return {values_.data() + index(t, 0), static_cast<std::size_t>(num_states_)};
  }

  int horizon() const { return horizon_; }
  int num_states() const { return num_states_; }
  bool empty() const { return values_.empty(); }

  bool operator==(const ValueTable&) const = default;

 private:
  std::size_t index(int t, int s) const {
    return static_cast<std::size_t>(t - 1) * num_states_ + s;
  }

  int horizon_ = 0;
  int num_states_ = 0;
  std::vector<double> values_;
};

// H x S table of action indices; t is 1-based like ValueTable.
class DeterministicPolicy {
 public:
  DeterministicPolicy() = default;
  DeterministicPolicy(int horizon, int num_states, int action = 0)
      : horizon_(horizon),
        num_states_(num_states),
        actions_(static_cast<std::size_t>(horizon) * num_states, action) {}

  int operator()(int t, int s) const { return actions_[index(t, s)]; }
  int& operator()(int t, int s) { return actions_[index(t, s)]; }

  std::span<const int> row(int t) const {
    return {actions_.data() + index(t, 0), static_cast<std::size_t>(num_states_)};
  }

  int horizon() const { return horizon_; }
  int num_states() const { return num_states_; }
  bool empty() const { return actions_.empty(); }

  bool operator==(const DeterministicPolicy&) const = default;

 private:
  std::size_t index(int t, int s) const {
    return static_cast<std::size_t>(t - 1) * num_states_ + s;
  }

  int horizon_ = 0;
  int num_states_ = 0;
  std::vector<int> actions_;
};

// H x S x A visitation weights w_t(s, a): the probability a fixed policy
// occupies (s, a) at timestep t starting from a fixed state.
class OccupancyTable {
 public:
  OccupancyTable(int horizon, int num_states, int num_actions)
      : horizon_(horizon),
        num_states_(num_states),
        num_actions_(num_actions),
        weights_(static_cast<std::size_t>(horizon) * num_states * num_actions, 0.0) {}

  double operator()(int t, int s, int a) const { return weights_[index(t, s, a)]; }
  double& operator()(int t, int s, int a) { return weights_[index(t, s, a)]; }

  // S*A slice for timestep t, row-major (s, a).
  std::span<const double> slice(int t) const {
    return {weights_.data() + index(t, 0, 0),
            static_cast<std::size_t>(num_states_) * num_actions_};
  }
  std::span<double> slice(int t) {
    return {weights_.data() + index(t, 0, 0),
            static_cast<std::size_t>(num_states_) * num_actions_};
  }

  double state_weight(int t, int s) const {
    double w = 0.0;
    for (int a = 0; a < num_actions_; ++a) w += (*this)(t, s, a);
    return w;
  }

  int horizon() const { return horizon_; }
  int num_states() const { return num_states_; }
  int num_actions() const { return num_actions_; }

 private:
  std::size_t index(int t, int s, int a) const {
    return (static_cast<std::size_t>(t - 1) * num_states_ + s) * num_actions_ + a;
  }

  int horizon_ = 0;
  int num_states_ = 0;
  int num_actions_ = 0;
  std::vector<double> weights_;
};

struct TrajectoryStep {
  int t;  // 1-based timestep
  int state;
  int action;
  double reward;
  int next_state;
};

// One H-step episode: consecutive steps chain (next_state == following
// state) and the first state is the episode's start state.
using Trajectory = std::vector<TrajectoryStep>;

}  // namespace gmbrl

#endif  // GMBRL_MDP_HPP_
