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

#ifndef ASL_PRIOR_HPP
#define ASL_PRIOR_HPP

#include <cstddef>

namespace asl {

// Target-state distribution on the unit sphere of an N-dimensional complex
// Hilbert space, reduced to the polar angle theta in [0, pi/2]. The overlap
// with the source is x = cos(theta); the surface measure contributes a
// sin^{2N-2}(theta) weight.

enum class PriorKind { uniform, damped_gaussian };

struct PriorSpec {
  std::size_t hilbert_dim;  // N >= 2
  double sigma_sq = 1.0;    // Gaussian variance, damped_gaussian only
  PriorKind kind = PriorKind::damped_gaussian;
  // Scale inside the damping term (damping_scale * sin(theta))^{2N-2}.
  double damping_scale = 10.0;

  void validate() const;
  std::size_t measure_exponent() const { return 2 * hilbert_dim - 2; }
};

struct QuadratureResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  long evaluations = 0;
  // True when the integrand's peak sat below 1e-280 and the evaluation ran
  // on log-scaled panels.
  bool log_space_used = false;
};

// Unnormalized density. damped_gaussian:
//   exp(-theta^2 / (2 sigma^2)) / (1 + (scale sin theta)^{2N-2});
// uniform: the constant 1. theta outside [0, pi/2] is a domain error.
// Normalization cancels in every probability below.
double density(const PriorSpec& spec, double theta);
double log_density(const PriorSpec& spec, double theta);

// Prob(x >= x_bar) =
//   int_0^{acos x_bar} rho sin^{2N-2} / int_0^{pi/2} rho sin^{2N-2},
// both integrals by adaptive Simpson to 1e-10 relative where the integrand
// permits, evaluated on a common log scale so the ratio survives any
// dynamic range. Error estimates above 1e-6 relative raise numeric_error.
QuadratureResult prob_overlap_at_least(const PriorSpec& spec, double x_bar);

// Constant making the bare density integrate to 1 over [0, pi/2] (reporting
// convention only; probabilities above never depend on it). Uniform: 2/pi.
double normalization_constant(const PriorSpec& spec);

// Independent oracle for the uniform case: the sin-power integral via its
// integration-by-parts recurrence carried in logarithms. For x_bar^2 > 1/2
// the recurrence runs downward from a zero seed well above the target index
// (the decaying solution is relatively unstable upward); otherwise the
// complementary cos-power integral recurs upward, which is all-positive and
// stable. The full-range integral comes from the log-gamma closed form.
double uniform_prob_closed_check(std::size_t hilbert_dim, double x_bar);

}  // namespace asl

#endif
