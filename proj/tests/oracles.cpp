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

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <utility>

#include "gmbrl/dp.hpp"

namespace gmbrl::test {

double expectimax_value(const TabularMdp& mdp, int state, int t) {
  if (t > mdp.horizon()) return 0.0;
  double best = -1e300;
  for (int a = 0; a < mdp.num_actions(); ++a) {
    double q = mdp.mean_reward(state, a);
    for (int s2 : mdp.support(state, a)) {
      q += mdp.transition(state, a, s2) * expectimax_value(mdp, s2, t + 1);
    }
    best = std::max(best, q);
  }
  return best;
}

namespace {

// (t, s) pairs reachable from (start, 1) under any action sequence.
std::vector<std::pair<int, int>> reachable_slots(const TabularMdp& mdp, int start) {
  std::vector<std::pair<int, int>> slots;
  std::set<int> frontier{start};
  for (int t = 1; t <= mdp.horizon(); ++t) {
    std::set<int> next;
    for (int s : frontier) {
      slots.emplace_back(t, s);
      for (int a = 0; a < mdp.num_actions(); ++a) {
        for (int s2 : mdp.support(s, a)) next.insert(s2);
      }
    }
    frontier = std::move(next);
  }
  return slots;
}

}  // namespace

double enumerate_best_start_value(const TabularMdp& mdp) {
  const int start = mdp.start_state();
  const std::vector<std::pair<int, int>> slots = reachable_slots(mdp, start);
  double combos = 1.0;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    combos *= mdp.num_actions();
    if (combos > 0x1p25) {
      throw std::invalid_argument("enumerate_best_start_value: too many policies");
    }
  }

  DeterministicPolicy policy(mdp.horizon(), mdp.num_states());
  std::vector<int> digits(slots.size(), 0);
  double best = -1e300;
  while (true) {
    for (std::size_t i = 0; i < slots.size(); ++i) {
      policy(slots[i].first, slots[i].second) = digits[i];
    }
    best = std::max(best, evaluate_policy(mdp, policy)(1, start));

    std::size_t i = 0;  // odometer
    while (i < digits.size()) {
      if (++digits[i] < mdp.num_actions()) break;
      digits[i] = 0;
      ++i;
    }
    if (i == digits.size()) break;
  }
  return best;
}

double minimal_positive_gap(const TabularMdp& mdp) {
  const std::size_t slots = static_cast<std::size_t>(mdp.num_states()) * mdp.horizon();
  double combos = 1.0;
  for (std::size_t i = 0; i < slots; ++i) {
    combos *= mdp.num_actions();
    if (combos > 0x1p25) throw std::invalid_argument("minimal_positive_gap: MDP too large");
  }

  const ValueTable v_star = value_iteration(mdp);
  DeterministicPolicy policy(mdp.horizon(), mdp.num_states());
  std::vector<int> digits(slots, 0);
  double gap = 1e300;
  while (true) {
    for (std::size_t i = 0; i < slots; ++i) {
      policy(static_cast<int>(i / mdp.num_states()) + 1,
             static_cast<int>(i % mdp.num_states())) = digits[i];
    }
    const ValueTable v_pi = evaluate_policy(mdp, policy);
    for (int s = 0; s < mdp.num_states(); ++s) {
      const double d = v_star(1, s) - v_pi(1, s);
      if (d > 1e-12) gap = std::min(gap, d);
    }

    std::size_t i = 0;
    while (i < digits.size()) {
      if (++digits[i] < mdp.num_actions()) break;
      digits[i] = 0;
      ++i;
    }
    if (i == digits.size()) break;
  }
  if (gap == 1e300) throw std::invalid_argument("minimal_positive_gap: every policy is optimal");
  return gap;
}

// ---------------------------------------------------------------------------
// Dense two-phase simplex (Bland's rule). Small and slow, which is fine: the
// instances here have a couple dozen columns.

namespace {

constexpr double kLpTolerance = 1e-9;

struct Tableau {
  int rows = 0;
  int cols = 0;  // structural + slack/surplus + artificial
  std::vector<std::vector<double>> body;  // rows x (cols + 1), last column is RHS
  std::vector<double> objective;          // cols + 1, reduced costs; last is -value
  std::vector<int> basis;

  void pivot(int pivot_row, int pivot_col) {
    std::vector<double>& prow = body[pivot_row];
    const double scale = prow[pivot_col];
    for (double& x : prow) x /= scale;
    for (int r = 0; r < rows; ++r) {
      if (r == pivot_row) continue;
      const double factor = body[r][pivot_col];
      if (factor == 0.0) continue;
      for (int j = 0; j <= cols; ++j) body[r][j] -= factor * prow[j];
    }
    const double factor = objective[pivot_col];
    if (factor != 0.0) {
      for (int j = 0; j <= cols; ++j) objective[j] -= factor * prow[j];
    }
    basis[pivot_row] = pivot_col;
  }

  // Maximizes until no reduced cost is positive. Returns false on iteration
  // blowup (should not happen with Bland's rule).
  bool run(const std::vector<bool>& blocked) {
    for (int iteration = 0; iteration < 20000; ++iteration) {
      int entering = -1;
      for (int j = 0; j < cols; ++j) {  // Bland: lowest eligible index
        if (!blocked[j] && objective[j] > kLpTolerance) {
          entering = j;
          break;
        }
      }
      if (entering < 0) return true;

      int leaving = -1;
      double best_ratio = 0.0;
      for (int r = 0; r < rows; ++r) {
        if (body[r][entering] > kLpTolerance) {
          const double ratio = body[r][cols] / body[r][entering];
          if (leaving < 0 || ratio < best_ratio - kLpTolerance ||
              (ratio < best_ratio + kLpTolerance && basis[r] < basis[leaving])) {
            leaving = r;
            best_ratio = ratio;
          }
        }
      }
      if (leaving < 0) return false;  // unbounded; cannot happen on our polytopes
      pivot(leaving, entering);
    }
    return false;
  }
};

}  // namespace

double lp_maximize(const std::vector<std::vector<double>>& a, const std::vector<double>& b,
                   const std::vector<char>& relations, const std::vector<double>& c) {
  const int m = static_cast<int>(a.size());
  const int n = static_cast<int>(c.size());
  if (static_cast<int>(b.size()) != m || static_cast<int>(relations.size()) != m) {
    throw std::invalid_argument("lp_maximize: shape mismatch");
  }

  // Normalize to nonnegative RHS, count extra columns.
  std::vector<std::vector<double>> rows_a = a;
  std::vector<double> rhs = b;
  std::vector<char> rel = relations;
  for (int r = 0; r < m; ++r) {
    if (rhs[r] < 0.0) {
      for (double& x : rows_a[r]) x = -x;
      rhs[r] = -rhs[r];
      rel[r] = rel[r] == '<' ? '>' : rel[r] == '>' ? '<' : '=';
    }
  }
  int slack_count = 0;
  int artificial_count = 0;
  for (char r : rel) {
    if (r == '<' || r == '>') ++slack_count;
    if (r == '>' || r == '=') ++artificial_count;
  }

  Tableau t;
  t.rows = m;
  t.cols = n + slack_count + artificial_count;
  t.body.assign(m, std::vector<double>(t.cols + 1, 0.0));
  t.basis.assign(m, -1);

  int slack_at = n;
  int artificial_at = n + slack_count;
  std::vector<bool> is_artificial(t.cols, false);
  for (int r = 0; r < m; ++r) {
    for (int j = 0; j < n; ++j) t.body[r][j] = rows_a[r][j];
    t.body[r][t.cols] = rhs[r];
    if (rel[r] == '<') {
      t.body[r][slack_at] = 1.0;
      t.basis[r] = slack_at++;
    } else if (rel[r] == '>') {
      t.body[r][slack_at++] = -1.0;
      t.body[r][artificial_at] = 1.0;
      is_artificial[artificial_at] = true;
      t.basis[r] = artificial_at++;
    } else {
      t.body[r][artificial_at] = 1.0;
      is_artificial[artificial_at] = true;
      t.basis[r] = artificial_at++;
    }
  }

  // Phase 1: maximize -sum(artificials); price the artificial rows out.
  t.objective.assign(t.cols + 1, 0.0);
  for (int j = 0; j < t.cols; ++j) {
    if (is_artificial[j]) t.objective[j] = -1.0;
  }
  for (int r = 0; r < m; ++r) {
    if (is_artificial[t.basis[r]]) {
      for (int j = 0; j <= t.cols; ++j) t.objective[j] += t.body[r][j];
    }
  }
  std::vector<bool> blocked(t.cols, false);
  if (!t.run(blocked)) throw std::runtime_error("lp_maximize: phase 1 failed to converge");
  if (-t.objective[t.cols] > 1e-7) throw std::runtime_error("lp_maximize: infeasible program");

  // Phase 2: real objective, artificial columns off-limits.
  for (int j = 0; j < t.cols; ++j) blocked[j] = is_artificial[j];
  t.objective.assign(t.cols + 1, 0.0);
  for (int j = 0; j < n; ++j) t.objective[j] = c[j];
  for (int r = 0; r < m; ++r) {
    const int basic = t.basis[r];
    const double cost = basic < n ? c[basic] : 0.0;
    if (cost != 0.0) {
      for (int j = 0; j <= t.cols; ++j) t.objective[j] -= cost * t.body[r][j];
    }
  }
  if (!t.run(blocked)) throw std::runtime_error("lp_maximize: phase 2 failed to converge");
  return -t.objective[t.cols];
}

double lp_l1_inner_max(std::span<const double> p_hat, double radius, std::span<const double> v) {
  const int n = static_cast<int>(v.size());
  // Variables x = [q_0..q_{n-1}, d_0..d_{n-1}]; d_i bounds |q_i - p_i|.
  std::vector<std::vector<double>> a;
  std::vector<double> b;
  std::vector<char> rel;

  for (int i = 0; i < n; ++i) {  // q_i - d_i <= p_i
    std::vector<double> row(2 * n, 0.0);
    row[i] = 1.0;
    row[n + i] = -1.0;
    a.push_back(std::move(row));
    b.push_back(p_hat[i]);
    rel.push_back('<');
  }
  for (int i = 0; i < n; ++i) {  // q_i + d_i >= p_i
    std::vector<double> row(2 * n, 0.0);
    row[i] = 1.0;
    row[n + i] = 1.0;
    a.push_back(std::move(row));
    b.push_back(p_hat[i]);
    rel.push_back('>');
  }
  {
    std::vector<double> row(2 * n, 0.0);  // sum d <= radius
    for (int i = 0; i < n; ++i) row[n + i] = 1.0;
    a.push_back(std::move(row));
    b.push_back(radius);
    rel.push_back('<');
  }
  {
    std::vector<double> row(2 * n, 0.0);  // sum q = 1
    for (int i = 0; i < n; ++i) row[i] = 1.0;
    a.push_back(std::move(row));
    b.push_back(1.0);
    rel.push_back('=');
  }

  std::vector<double> c(2 * n, 0.0);
  for (int i = 0; i < n; ++i) c[i] = v[i];
  return lp_maximize(a, b, rel, c);
}

double grid_l1_inner_max2(double p0, double radius, double v0, double v1, double resolution) {
  double best = -1e300;
  const double p1 = 1.0 - p0;
  for (double q0 = 0.0; q0 <= 1.0 + 1e-12; q0 += resolution) {
    const double q1 = 1.0 - q0;
    if (std::abs(q0 - p0) + std::abs(q1 - p1) <= radius + 1e-12) {
      best = std::max(best, q0 * v0 + q1 * v1);
    }
  }
  return best;
}

}  // namespace gmbrl::test
