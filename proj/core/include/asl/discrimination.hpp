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

#ifndef ASL_DISCRIMINATION_HPP
#define ASL_DISCRIMINATION_HPP

#include "asl/kinematics.hpp"

namespace asl {

// Ambiguous two-state discrimination between the exact and approximate
// target states. Only p_w is stored; the complementary prior and the
// asymmetry degree alpha = p_wtilde / p_w are derived, which keeps the two
// priors summing to one exactly.
class DiscriminationSetup {
 public:
  static DiscriminationSetup from_prior(double p_w);
  // alpha = p_wtilde / p_w, i.e. p_w = 1 / (1 + alpha). All quantities
  // computed from a setup are invariant under alpha <-> 1/alpha.
  static DiscriminationSetup from_asymmetry(double alpha);

  double p_w() const { return p_w_; }
  double p_wtilde() const { return 1.0 - p_w_; }
  double alpha() const { return alpha_; }

 private:
  explicit DiscriminationSetup(double p_w)
      : p_w_(p_w), alpha_((1.0 - p_w) / p_w) {}
  double p_w_;
  double alpha_;
};

// Fidelity budget: deficit epsilon in [0,1) and the angle cap it buys,
// cos^2(delta_max) = 1 - epsilon.
struct FidelityBudget {
  double epsilon;
  double delta_max;

  static FidelityBudget from_epsilon(double epsilon);
  static FidelityBudget from_asymmetry(double alpha);
};

// Minimum error probability of the optimal ambiguous protocol:
//   p_E(delta) = (1 - sqrt(1 - 4 p_w p_wtilde cos^2 delta)) / 2.
// Monotone decreasing in delta on [0, pi/2].
Probability min_error_probability(double delta, const DiscriminationSetup& s);

// Deviation from unit fidelity: 1 - cos^2(delta).
double fidelity_deficit(double delta);

// Largest admissible angle for a given fidelity deficit: acos(sqrt(1-eps)).
double delta_max_from_epsilon(double epsilon);

// Largest angle for which the deficit stays below p_E at fixed prior:
//   acos( sqrt( 1 - p_w (1 - p_w) ) ).
double delta_max_from_prior(double p_w);

// Same cap expressed through the asymmetry degree: acos(sqrt(1 - a(1+a)^-2)).
// Symmetric under alpha <-> 1/alpha.
double delta_max_from_asymmetry(double alpha);

// Fidelity deficit budget bought by a given asymmetry: alpha (1+alpha)^-2.
double epsilon_of_asymmetry(double alpha);

// True iff 0 <= fidelity_deficit(delta) <= p_E(delta); equivalently
// delta <= delta_max_from_prior(p_w). Equality counts as satisfied.
bool search_beats_discrimination(double delta, const DiscriminationSetup& s);

}  // namespace asl

#endif
