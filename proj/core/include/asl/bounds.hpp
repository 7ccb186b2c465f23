// Copyright 2026 The analog-search-lab authors
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

#ifndef ASL_BOUNDS_HPP
#define ASL_BOUNDS_HPP

#include <cstddef>
#include <vector>

#include "asl/propagator.hpp"

// Desk-scale numerical verification of the search-time proof chain: the
// summed distance between per-target evolutions and the driver-only
// evolution grows at most like (2 E sqrt(N) / hbar) t, reaches at least
// N (1 - delta) at the peak time, and together these force
// t >= (hbar / 2E)(1 - delta) sqrt(N).

namespace asl {

// One checked instant. distance_sum = sum_w || |psi_w(t)> - |psi(t)> ||^2,
// growth_rhs = 2 E sqrt(N) t / hbar, terminal_rhs = N (1 - delta) with
// delta evaluated at x = N^{-1/2}. terminal_satisfied is only *claimed* at
// the peak time; growth rows report it as measured.
struct BoundReport {
  std::size_t dim = 0;
  double gamma = 1.0;
  double delta = 0.0;
  double t = 0.0;
  double distance_sum = 0.0;
  double growth_rhs = 0.0;
  double terminal_rhs = 0.0;
  bool growth_satisfied = false;
  bool terminal_satisfied = false;
  bool is_terminal_row = false;
};

// Search-time lower bound (hbar / 2E)(1 - delta) sqrt(N). Valid for N >= 4;
// delta must stay <= 0.2 (the small-angle regime; callers should warn their
// users above 0.1, see delta_outside_small_angle_regime).
double min_time_lower_bound(std::size_t dim, double delta, double energy,
                            double hbar);

constexpr bool delta_outside_small_angle_regime(double delta) {
  return delta > 0.1;
}

// Per-target squared distances || |psi_w(t)> - |psi(t)> ||^2, w = 0..N-1,
// from full N-dimensional propagation (uniform source, driver-only |psi>).
// Fans the independent per-target propagations out to worker threads and
// reduces in fixed w order, so results do not depend on thread count.
std::vector<double> distance_terms(std::size_t dim, double gamma, double energy,
                                   double hbar, double t);

// Growth bound (distance sum <= 2 E sqrt(N) t / hbar) checked on a sorted
// time grid starting at 0.
std::vector<BoundReport> verify_distance_growth(std::size_t dim, double gamma,
                                                double energy, double hbar,
                                                const std::vector<double>& t_grid);

// Terminal bound at the peak time of the modified dynamics with
// x = N^{-1/2}: distance_sum >= N (1 - delta), chained with the growth
// bound at the same instant.
BoundReport verify_terminal_distance(std::size_t dim, double gamma,
                                     double energy, double hbar);

// sum |c_j| <= sqrt(N) + 1e-10 for a normalized state.
bool amplitude_l1_check(const StateVector& state);

}  // namespace asl

#endif
