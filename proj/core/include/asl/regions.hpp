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

#ifndef ASL_REGIONS_HPP
#define ASL_REGIONS_HPP

#include <cstdint>
#include <vector>

#include "asl/discrimination.hpp"
#include "asl/kinematics.hpp"

// (x, gamma) plane exploration: where does the modified dynamics beat the
// original one? Three nested predicates per cell:
//   R_t : peak of the modified curve exceeds the original curve sampled at
//         the modified peak time;
//   R_P : the modified peak time undercuts the time the original needs to
//         reach the same probability;
//   r_P : R_P restricted to peaks above a threshold with the discrimination
//         criterion satisfied at delta(x, gamma).
// All predicates are strict, so exact ties (the whole gamma = 1 line) stay
// outside.

namespace asl {

struct RegionGrid {
  std::vector<double> x_axis;      // strictly increasing, inside (0, 1)
  std::vector<double> gamma_axis;  // strictly increasing, >= 1
  // Row-major layers indexed [ig * x_axis.size() + ix].
  std::vector<double> pmax_layer;
  std::vector<std::uint8_t> mask_Rt;
  std::vector<std::uint8_t> mask_RP;
  std::vector<std::uint8_t> mask_rP;
  double threshold = 0.995;
  double prior_ratio = 100.0;

  std::size_t index(std::size_t ix, std::size_t ig) const {
    return ig * x_axis.size() + ix;
  }
};

// One row of the reference table: everything the comparison needs at one x.
struct TableRow {
  double x;
  double delta;
  double pmax;
  double delta_f;  // 1 - pmax
  double p_e;
  double t_special;  // time for the original curve to match pmax
  double t_general;  // peak time of the modified curve
};

// n cell midpoints (i + 1/2)/n; excludes the singular endpoints 0 and 1.
std::vector<double> make_x_axis(std::size_t n);
// n evenly spaced samples on [lo, hi], endpoints included.
std::vector<double> make_gamma_axis(std::size_t n, double lo = 1.0,
                                    double hi = 10.0);

// Evaluates every cell; h = E = 1 units (the masks are unit independent).
RegionGrid scan_regions(const std::vector<double>& x_axis,
                        const std::vector<double>& gamma_axis, double threshold,
                        const DiscriminationSetup& prior);

// True iff mask_Rt and mask_RP agree at every cell.
bool regions_coincide(const RegionGrid& grid);

// Reference-table rows for the given x values at fixed gamma; priors are
// taken from the asymmetry degree alpha.
std::vector<TableRow> make_table1(const std::vector<double>& x_list,
                                  double gamma, double alpha, double energy,
                                  double h);

// Peak-probability layer alone, for external contouring.
std::vector<double> pmax_grid(const std::vector<double>& x_axis,
                              const std::vector<double>& gamma_axis);

}  // namespace asl

#endif
