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

#ifndef ASL_KINEMATICS_HPP
#define ASL_KINEMATICS_HPP

#include <numbers>

namespace asl {

// One two-level search instance: source/target overlap x = <s|w> in (0,1],
// energy ratio gamma = E'/E >= 1, marked-state energy E > 0 and hbar > 0.
// gamma = 1 is the plain (special) algorithm; gamma > 1 the modified
// (general) one. We store hbar; h = 2*pi*hbar wherever the h form is wanted.
struct SearchConfig {
  double x;
  double gamma;
  double energy = 1.0;
  double hbar = 1.0 / (2.0 * std::numbers::pi);  // h = 1

  // Throws domain_error naming the offending field.
  void validate() const;

  double h() const { return 2.0 * std::numbers::pi * hbar; }

  // Convenience for the h = E = 1 regime used throughout the tables.
  static SearchConfig with_h(double x, double gamma, double energy = 1.0,
                             double h = 1.0);
};

// A probability with the raw (unclamped) value kept around for debugging.
// Raw values in [-1e-12, 1+1e-12] clamp to [0,1]; anything further out is a
// genuine numerical violation and throws numeric_error.
class Probability {
 public:
  static Probability from_raw(double raw);

  double value() const { return value_; }
  double raw() const { return raw_; }

  static constexpr double clamp_tolerance = 1e-12;

 private:
  Probability(double value, double raw) : value_(value), raw_(raw) {}
  double value_ = 0.0;
  double raw_ = 0.0;
};

enum class Curve { general, special };

// Transition probability of the modified dynamics at time t >= 0:
//   P_g(t) = P_max sin^2(w t) + x^2 cos^2(w t),
//   w = (E / 2 hbar) sqrt(4 x^2 gamma + (1-gamma)^2).
Probability transition_probability_general(const SearchConfig& cfg, double t);

// Original dynamics (gamma ignored): P_s(t) = sin^2(Ext/hbar) + x^2 cos^2(Ext/hbar).
Probability transition_probability_special(const SearchConfig& cfg, double t);

// Peak value of P_g: x^2 (1+gamma)^2 / (4 x^2 gamma + (1-gamma)^2).
// Equals 1 iff gamma = 1 or x = 1. x = 0 with gamma = 1 is 0/0 and rejected.
Probability max_transition_probability(double x, double gamma);

// Time of the P_g peak: (h/4E) * 2 / sqrt(4 x^2 gamma + (1-gamma)^2).
// At gamma = 1 this returns bit-identically the same double as
// peak_time_special (both evaluate nearest(h/(4Ex))).
double peak_time_general(const SearchConfig& cfg);

// Time of the P_s peak: h/(4Ex).
double peak_time_special(const SearchConfig& cfg);

// Smallest time at which P_s reaches the P_g peak value:
//   (h / 2 pi E x) acos( sqrt( (1 - P_max) / (1 - x^2) ) ),   0 < x < 1.
// Never exceeds h/(4Ex); equals it exactly when gamma = 1.
double matched_time_special(double x, double gamma, double energy, double h);

// Terminal-miss angle delta(x,gamma) = acos( (1+gamma) x / sqrt((1-gamma)^2
// + 4 gamma x^2) ). The acos argument is sqrt(P_max), which is how we
// evaluate it; cos^2(delta) = P_max by construction, and gamma = 1 gives an
// exact zero.
double imperfection_angle(double x, double gamma);

// Full period of P_g (the sin/cos argument advances by 2 pi):
//   T = 4 pi hbar / (E sqrt(4 x^2 gamma + (1-gamma)^2)).
// P itself repeats already at T/2.
double period_general(const SearchConfig& cfg);

struct Crossing {
  double t = 0.0;
  // P(0) = x^2 already meets the threshold; t is 0.
  bool already_satisfied = false;
};

// Smallest t >= 0 with P(t) = threshold on the chosen curve. Brackets the
// first monotone rise at T/1024 resolution, then bisects to 1e-12 * T.
// threshold above the curve maximum (beyond clamp tolerance) throws
// domain_error.
Crossing first_crossing_time(Curve curve, const SearchConfig& cfg,
                             double threshold);

}  // namespace asl

#endif
