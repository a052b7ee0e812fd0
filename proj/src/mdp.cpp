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

#include "gmbrl/mdp.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gmbrl {

namespace {
constexpr double kRowSumTolerance = 1e-12;
}

TabularMdp::TabularMdp(int num_states, int num_actions, int horizon, int start_state,
                       std::vector<double> transitions,
                       std::vector<RewardDistribution> rewards)
    : num_states_(num_states),
      num_actions_(num_actions),
      horizon_(horizon),
      start_state_(start_state),
      transitions_(std::move(transitions)),
      rewards_(std::move(rewards)),
      max_support_(0) {
  if (num_states_ <= 0 || num_actions_ <= 0 || horizon_ <= 0) {
    throw std::invalid_argument("TabularMdp: S, A, H must be positive");
  }
  if (start_state_ < 0 || start_state_ >= num_states_) {
    throw std::invalid_argument("TabularMdp: start state " + std::to_string(start_state_) +
                                " out of range [0, " + std::to_string(num_states_) + ")");
  }
  const std::size_t want_p =
      static_cast<std::size_t>(num_states_) * num_actions_ * num_states_;
  if (transitions_.size() != want_p) {
    throw std::invalid_argument("TabularMdp: transition table has " +
                                std::to_string(transitions_.size()) + " entries, expected " +
                                std::to_string(want_p));
  }
  if (rewards_.size() != static_cast<std::size_t>(num_states_) * num_actions_) {
    throw std::invalid_argument("TabularMdp: reward table size mismatch");
  }

  support_begin_.assign(static_cast<std::size_t>(num_states_) * num_actions_ + 1, 0);
  for (int s = 0; s < num_states_; ++s) {
    for (int a = 0; a < num_actions_; ++a) {
      const std::span<const double> row = transition_row(s, a);
      double sum = 0.0;
      int nonzero = 0;
      for (int s2 = 0; s2 < num_states_; ++s2) {
        const double p = row[s2];
        if (p < 0.0) {
          throw std::invalid_argument("TabularMdp: negative probability at (s=" +
                                      std::to_string(s) + ", a=" + std::to_string(a) +
                                      ", s'=" + std::to_string(s2) + ")");
        }
        sum += p;
        if (p > 0.0) {
          support_.push_back(s2);
          ++nonzero;
        }
      }
      if (std::abs(sum - 1.0) > kRowSumTolerance) {
        throw std::invalid_argument("TabularMdp: row (s=" + std::to_string(s) + ", a=" +
                                    std::to_string(a) + ") sums to " + std::to_string(sum));
      }
      const RewardDistribution& r = rewards_[static_cast<std::size_t>(s) * num_actions_ + a];
      if (r.kind == RewardDistribution::Kind::kBernoulli && (r.mean < 0.0 || r.mean > 1.0)) {
        throw std::invalid_argument("TabularMdp: Bernoulli mean out of [0,1] at (s=" +
                                    std::to_string(s) + ", a=" + std::to_string(a) + ")");
      }
      if (r.stddev < 0.0) {
        throw std::invalid_argument("TabularMdp: negative reward stddev at (s=" +
                                    std::to_string(s) + ", a=" + std::to_string(a) + ")");
      }
      support_begin_[static_cast<std::size_t>(s) * num_actions_ + a + 1] = support_.size();
      if (nonzero > max_support_) max_support_ = nonzero;
    }
  }
}

ValueTable::ValueTable(int horizon, int num_states, double fill)
    : horizon_(horizon),
      num_states_(num_states),
      values_(static_cast<std::size_t>(horizon + 1) * num_states, 0.0) {
  if (fill != 0.0) {
    for (int t = 1; t <= horizon_; ++t) {
      for (int s = 0; s < num_states_; ++s) (*this)(t, s) = fill;
    }
  }
}

}  // namespace gmbrl
