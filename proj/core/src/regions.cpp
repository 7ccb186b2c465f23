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

#include "asl/regions.hpp"

#include <cmath>
#include <string>

#include "asl/errors.hpp"

namespace asl {

namespace {

void check_axes(const std::vector<double>& x_axis,
                const std::vector<double>& gamma_axis) {
  if (x_axis.empty() || gamma_axis.empty())
    throw domain_error("axes must be non-empty");
  for (std::size_t i = 0; i < x_axis.size(); ++i) {
    if (!(x_axis[i] > 0.0) || !(x_axis[i] < 1.0))
      throw domain_error("x axis sample outside open (0, 1): " +
                         std::to_string(x_axis[i]));
    if (i > 0 && !(x_axis[i] > x_axis[i - 1]))
      throw domain_error("x axis must be strictly increasing");
  }
  for (std::size_t i = 0; i < gamma_axis.size(); ++i) {
    if (!(gamma_axis[i] >= 1.0))
      throw domain_error("gamma axis sample below 1: " +
                         std::to_string(gamma_axis[i]));
    if (i > 0 && !(gamma_axis[i] > gamma_axis[i - 1]))
      throw domain_error("gamma axis must be strictly increasing");
  }
}

}  // namespace

std::vector<double> make_x_axis(std::size_t n) {
  if (n == 0) throw domain_error("x axis needs at least one sample");
  std::vector<double> axis(n);
  for (std::size_t i = 0; i < n; ++i)
    axis[i] = (static_cast<double>(i) + 0.5) / static_cast<double>(n);
  return axis;
}

std::vector<double> make_gamma_axis(std::size_t n, double lo, double hi) {
  if (n == 0) throw domain_error("gamma axis needs at least one sample");
  if (!(lo >= 1.0) || !(hi >= lo))
    throw domain_error("gamma axis range must satisfy 1 <= lo <= hi");
  std::vector<double> axis(n);
  if (n == 1) {
    axis[0] = lo;
    return axis;
  }
  for (std::size_t i = 0; i < n; ++i)
    axis[i] = lo + (hi - lo) * static_cast<double>(i) /
                       static_cast<double>(n - 1);
  return axis;
}

RegionGrid scan_regions(const std::vector<double>& x_axis,
                        const std::vector<double>& gamma_axis, double threshold,
                        const DiscriminationSetup& prior) {
  check_axes(x_axis, gamma_axis);
  if (!(threshold >= 0.0) || !(threshold < 1.0))
    throw domain_error("threshold must be in [0, 1)");

  RegionGrid grid;
  grid.x_axis = x_axis;
  grid.gamma_axis = gamma_axis;
  grid.threshold = threshold;
  grid.prior_ratio = prior.alpha();
  const std::size_t cells = x_axis.size() * gamma_axis.size();
  grid.pmax_layer.assign(cells, 0.0);
  grid.mask_Rt.assign(cells, 0);
  grid.mask_RP.assign(cells, 0);
  grid.mask_rP.assign(cells, 0);

  for (std::size_t ig = 0; ig < gamma_axis.size(); ++ig) {
    const double g = gamma_axis[ig];
    for (std::size_t ix = 0; ix < x_axis.size(); ++ix) {
      const double x = x_axis[ix];
      const std::size_t idx = grid.index(ix, ig);

      const SearchConfig cfg = SearchConfig::with_h(x, g);
      const double pmax = max_transition_probability(x, g).value();
      const double t_g = peak_time_general(cfg);
      const double t_match = matched_time_special(x, g, cfg.energy, cfg.h());

      grid.pmax_layer[idx] = pmax;
      const bool in_rp = t_g / t_match < 1.0;
      const bool in_rt =
          pmax - transition_probability_special(cfg, t_g).value() > 0.0;
      grid.mask_RP[idx] = in_rp ? 1 : 0;
      grid.mask_Rt[idx] = in_rt ? 1 : 0;
      const double delta = imperfection_angle(x, g);
      grid.mask_rP[idx] = (in_rp && pmax > threshold &&
                           search_beats_discrimination(delta, prior))
                              ? 1
                              : 0;
    }
  }
  return grid;
}

bool regions_coincide(const RegionGrid& grid) {
  if (grid.mask_Rt.size() != grid.mask_RP.size())
    throw domain_error("grid masks have mismatched sizes");
  for (std::size_t i = 0; i < grid.mask_Rt.size(); ++i)
    if (grid.mask_Rt[i] != grid.mask_RP[i]) return false;
  return true;
}

std::vector<TableRow> make_table1(const std::vector<double>& x_list,
                                  double gamma, double alpha, double energy,
                                  double h) {
  if (!(gamma >= 1.0)) throw domain_error("gamma must be >= 1");
  const DiscriminationSetup prior = DiscriminationSetup::from_asymmetry(alpha);
  std::vector<TableRow> rows;
  rows.reserve(x_list.size());
  for (double x : x_list) {
    if (!(x > 0.0) || !(x < 1.0))
      throw domain_error("table x values must be in (0, 1), got " +
                         std::to_string(x));
    TableRow row;
    row.x = x;
    row.delta = imperfection_angle(x, gamma);
    row.pmax = max_transition_probability(x, gamma).value();
    row.delta_f = fidelity_deficit(row.delta);
    row.p_e = min_error_probability(row.delta, prior).value();
    row.t_special = matched_time_special(x, gamma, energy, h);
    row.t_general =
        peak_time_general(SearchConfig::with_h(x, gamma, energy, h));
    rows.push_back(row);
  }
  return rows;
}

std::vector<double> pmax_grid(const std::vector<double>& x_axis,
                              const std::vector<double>& gamma_axis) {
  check_axes(x_axis, gamma_axis);
  std::vector<double> layer(x_axis.size() * gamma_axis.size());
  for (std::size_t ig = 0; ig < gamma_axis.size(); ++ig)
    for (std::size_t ix = 0; ix < x_axis.size(); ++ix)
      layer[ig * x_axis.size() + ix] =
          max_transition_probability(x_axis[ix], gamma_axis[ig]).value();
  return layer;
}

}  // namespace asl
