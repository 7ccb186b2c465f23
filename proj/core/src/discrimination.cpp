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

#include "asl/discrimination.hpp"

#include <cmath>
#include <string>

#include "asl/errors.hpp"

namespace asl {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

void check_delta(double delta) {
  if (!(delta >= 0.0) || !(delta <= kHalfPi + 1e-15))
    throw domain_error("delta must be in [0, pi/2], got " +
                       std::to_string(delta));
}

}  // namespace

DiscriminationSetup DiscriminationSetup::from_prior(double p_w) {
  if (!(p_w > 0.0) || !(p_w < 1.0))
    throw domain_error("prior p_w must be in (0, 1), got " +
                       std::to_string(p_w));
  return DiscriminationSetup(p_w);
}

DiscriminationSetup DiscriminationSetup::from_asymmetry(double alpha) {
  if (!(alpha > 0.0))
    throw domain_error("asymmetry alpha must be > 0, got " +
                       std::to_string(alpha));
  return DiscriminationSetup(1.0 / (1.0 + alpha));
}

FidelityBudget FidelityBudget::from_epsilon(double epsilon) {
  return FidelityBudget{epsilon, delta_max_from_epsilon(epsilon)};
}

FidelityBudget FidelityBudget::from_asymmetry(double alpha) {
  return from_epsilon(epsilon_of_asymmetry(alpha));
}

Probability min_error_probability(double delta, const DiscriminationSetup& s) {
  check_delta(delta);
  const double c = std::cos(delta);
  const double radicand = 1.0 - 4.0 * s.p_w() * s.p_wtilde() * c * c;
  if (radicand < -1e-12)
    throw numeric_error("min error probability radicand " +
                        std::to_string(radicand) + " below -1e-12");
  const double root = std::sqrt(std::max(0.0, radicand));
  return Probability::from_raw(0.5 * (1.0 - root));
}

double fidelity_deficit(double delta) {
  check_delta(delta);
  const double c = std::cos(delta);
  return 1.0 - c * c;
}

double delta_max_from_epsilon(double epsilon) {
  if (!(epsilon >= 0.0) || !(epsilon < 1.0))
    throw domain_error("epsilon must be in [0, 1), got " +
                       std::to_string(epsilon));
  return std::acos(std::sqrt(1.0 - epsilon));
}

double delta_max_from_prior(double p_w) {
  if (!(p_w > 0.0) || !(p_w < 1.0))
    throw domain_error("prior p_w must be in (0, 1), got " +
                       std::to_string(p_w));
  return std::acos(std::sqrt(1.0 - p_w * (1.0 - p_w)));
}

double delta_max_from_asymmetry(double alpha) {
  if (!(alpha > 0.0))
    throw domain_error("asymmetry alpha must be > 0, got " +
                       std::to_string(alpha));
  return delta_max_from_epsilon(epsilon_of_asymmetry(alpha));
}

double epsilon_of_asymmetry(double alpha) {
  if (!(alpha > 0.0))
    throw domain_error("asymmetry alpha must be > 0, got " +
                       std::to_string(alpha));
  const double one_plus = 1.0 + alpha;
  return alpha / (one_plus * one_plus);
}

bool search_beats_discrimination(double delta, const DiscriminationSetup& s) {
  check_delta(delta);
  const double deficit = fidelity_deficit(delta);
  return deficit >= 0.0 && deficit <= min_error_probability(delta, s).value();
}

}  // namespace asl
