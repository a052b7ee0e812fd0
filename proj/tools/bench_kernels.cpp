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

// Times the serial reference kernels against the OpenMP ones on synthetic
// MDPs, plus the Monte-Carlo trial loop. Run with no arguments.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#include "gmbrl/dbp.hpp"
#include "gmbrl/environments.hpp"
#include "gmbrl/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point begin) {
  return std::chrono::duration<double>(Clock::now() - begin).count();
}

template <typename Fn>
double time_best_of(int repetitions, Fn&& fn) {
  double best = 1e300;
  for (int i = 0; i < repetitions; ++i) {
    const auto begin = Clock::now();
    fn();
    best = std::min(best, seconds_since(begin));
  }
  return best;
}

void bench_backups(int num_states, int num_actions, int branching) {
  gmbrl::RandomMdpSpec spec;
  spec.num_states = num_states;
  spec.num_actions = num_actions;
  spec.horizon = 8;
  spec.branching = branching;
  spec.seed = 17;
  const gmbrl::TabularMdp mdp = gmbrl::make_random_mdp(spec);

  std::vector<double> v(num_states);
  for (int s = 0; s < num_states; ++s) v[s] = std::sin(0.1 * s) + 1.0;
  std::vector<double> out_serial(num_states);
  std::vector<double> out_parallel(num_states);
  std::vector<double> w(static_cast<std::size_t>(num_states) * num_actions,
                        1.0 / (num_states * num_actions));
  std::vector<double> fold_serial(num_states);
  std::vector<double> fold_parallel(num_states);

  const int reps = 3;
  const int sweeps = 20;
  const int fold_sweeps = 2;  // the fold is O(S^2 A) per sweep
  const double t_backup_serial = time_best_of(reps, [&] {
    for (int i = 0; i < sweeps; ++i) gmbrl::kernels::serial::backup_max(mdp, v, out_serial);
  });
  const double t_backup_parallel = time_best_of(reps, [&] {
    for (int i = 0; i < sweeps; ++i) gmbrl::kernels::backup_max(mdp, v, out_parallel);
  });
  const double t_fold_serial = time_best_of(reps, [&] {
    for (int i = 0; i < fold_sweeps; ++i)
      gmbrl::kernels::serial::occupancy_fold(mdp, w, fold_serial);
  });
  const double t_fold_parallel = time_best_of(reps, [&] {
    for (int i = 0; i < fold_sweeps; ++i) gmbrl::kernels::occupancy_fold(mdp, w, fold_parallel);
  });

  bool identical = true;
  for (int s = 0; s < num_states; ++s) {
    identical = identical && out_serial[s] == out_parallel[s] &&
                fold_serial[s] == fold_parallel[s];
  }

  std::printf("S=%-5d A=%-3d N=%-3d  backup %8.3f ms -> %8.3f ms (x%.2f)   fold %8.3f ms -> %8.3f ms (x%.2f)  bitwise=%s\n",
              num_states, num_actions, branching, 1e3 * t_backup_serial,
              1e3 * t_backup_parallel, t_backup_serial / t_backup_parallel,
              1e3 * t_fold_serial, 1e3 * t_fold_parallel, t_fold_serial / t_fold_parallel,
              identical ? "yes" : "NO");
}

void bench_trials() {
  gmbrl::DbpGenerator generator;
  generator.kind = gmbrl::DbpGenerator::Kind::kMultiplicativeDecay;
  generator.param = 0.9;

  const int trials = 20000;
  const auto begin = Clock::now();
  const gmbrl::BoundCheck check = gmbrl::verify_bound(generator, 1.0, 0.05, trials, 500, 7);
  const double elapsed = seconds_since(begin);
  std::printf("dbp trials: %d trials x 500 rounds in %.3f s (%.0f trials/s), violations %d\n",
              trials, elapsed, trials / elapsed, check.violations);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads %d (grain %d states)\n", omp_get_max_threads(),
              gmbrl::kernels::kParallelGrain);
#else
  std::printf("built without OpenMP; both columns run the serial path\n");
#endif

  bench_backups(128, 8, 16);  // below the grain: parallel path == serial path
  bench_backups(512, 8, 16);
  bench_backups(2048, 8, 32);
  bench_trials();
  return 0;
}
