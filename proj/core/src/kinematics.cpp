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

#include "asl/kinematics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "asl/errors.hpp"

namespace asl {

namespace {

constexpr double kPi = std::numbers::pi;

// sqrt(4 x^2 gamma + (1-gamma)^2) as hypot(2 x sqrt(gamma), gamma - 1).
// hypot(a, 0) = |a| exactly, so gamma = 1 yields exactly 2x and the
// general/special formulas collapse without floating-point residue.
double frequency_root(double x, double gamma) {
  return std::hypot(2.0 * x * std::sqrt(gamma), gamma - 1.0);
}

void check_x_gamma(double x, double gamma) {
  if (!(x > 0.0) || !(x <= 1.0))
    throw domain_error("x must be in (0, 1], got " + std::to_string(x));
  if (!(gamma >= 1.0))
    throw domain_error("gamma must be >= 1, got " + std::to_string(gamma));
}

}  // namespace

void SearchConfig::validate() const {
  check_x_gamma(x, gamma);
  if (!(energy > 0.0))
    throw domain_error("energy must be > 0, got " + std::to_string(energy));
  if (!(hbar > 0.0))
    throw domain_error("hbar must be > 0, got " + std::to_string(hbar));
}

SearchConfig SearchConfig::with_h(double x, double gamma, double energy,
                                  double h) {
  if (!(h > 0.0))
    throw domain_error("h must be > 0, got " + std::to_string(h));
  return SearchConfig{x, gamma, energy, h / (2.0 * kPi)};
}

Probability Probability::from_raw(double raw) {
  if (std::isnan(raw) || raw < -clamp_tolerance || raw > 1.0 + clamp_tolerance)
    throw numeric_error("probability outside [0,1] beyond tolerance: raw = " +
                        std::to_string(raw));
  return Probability(std::clamp(raw, 0.0, 1.0), raw);
}

Probability transition_probability_general(const SearchConfig& cfg, double t) {
  cfg.validate();
  if (!(t >= 0.0)) throw domain_error("t must be >= 0");
  const double pmax = max_transition_probability(cfg.x, cfg.gamma).value();
  const double omega =
      cfg.energy * frequency_root(cfg.x, cfg.gamma) / (2.0 * cfg.hbar);
  const double s = std::sin(omega * t);
  const double c = std::cos(omega * t);
  return Probability::from_raw(pmax * s * s + cfg.x * cfg.x * c * c);
}

Probability transition_probability_special(const SearchConfig& cfg, double t) {
  cfg.validate();
  if (!(t >= 0.0)) throw domain_error("t must be >= 0");
  const double theta = cfg.energy * cfg.x * t / cfg.hbar;
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  return Probability::from_raw(s * s + cfg.x * cfg.x * c * c);
}

Probability max_transition_probability(double x, double gamma) {
  check_x_gamma(x, gamma);
  const double x2 = x * x;
  const double one_plus = 1.0 + gamma;
  const double one_minus = 1.0 - gamma;
  const double denom = 4.0 * x2 * gamma + one_minus * one_minus;
  if (denom == 0.0)
    throw domain_error("max transition probability undefined at x = 0, gamma = 1");
  return Probability::from_raw(x2 * one_plus * one_plus / denom);
}

double peak_time_general(const SearchConfig& cfg) {
  cfg.validate();
  const double root = frequency_root(cfg.x, cfg.gamma);
  if (root == 0.0) throw domain_error("peak time undefined at x = 0, gamma = 1");
  return 0.5 * cfg.h() / (cfg.energy * root);
}

double peak_time_special(const SearchConfig& cfg) {
  cfg.validate();
  return 0.25 * cfg.h() / (cfg.energy * cfg.x);
}

double matched_time_special(double x, double gamma, double energy, double h) {
  check_x_gamma(x, gamma);
  if (x >= 1.0)
    throw domain_error("matched time requires x < 1 (1 - x^2 vanishes)");
  if (!(energy > 0.0)) throw domain_error("energy must be > 0");
  if (!(h > 0.0)) throw domain_error("h must be > 0");
  const double pmax = max_transition_probability(x, gamma).value();
  const double deficit = 1.0 - pmax;
  // gamma = 1 makes the acos argument 0 and the matched time the quarter
  // period itself; return it through the peak-time expression so the
  // degeneracy is exact.
  if (deficit <= 0.0)
    return peak_time_special(SearchConfig::with_h(x, gamma, energy, h));
  const double arg = std::min(1.0, std::sqrt(deficit / (1.0 - x * x)));
  return h / (2.0 * kPi * energy * x) * std::acos(arg);
}

double imperfection_angle(double x, double gamma) {
  return std::acos(std::sqrt(max_transition_probability(x, gamma).value()));
}

double period_general(const SearchConfig& cfg) {
  cfg.validate();
  const double root = frequency_root(cfg.x, cfg.gamma);
  if (root == 0.0) throw domain_error("period undefined at x = 0, gamma = 1");
  return 4.0 * kPi * cfg.hbar / (cfg.energy * root);
}

Crossing first_crossing_time(Curve curve, const SearchConfig& cfg,
                             double threshold) {
  cfg.validate();
  if (!(threshold >= 0.0) || !(threshold <= 1.0 + Probability::clamp_tolerance))
    throw domain_error("threshold must be in [0, 1]");

  const auto value_at = [&](double t) {
    return curve == Curve::general
               ? transition_probability_general(cfg, t).value()
               : transition_probability_special(cfg, t).value();
  };
  const double curve_max =
      curve == Curve::general
          ? max_transition_probability(cfg.x, cfg.gamma).value()
          : 1.0;
  const double floor = cfg.x * cfg.x;

  if (threshold <= floor) return Crossing{0.0, true};
  if (threshold > curve_max + Probability::clamp_tolerance)
    throw domain_error("threshold " + std::to_string(threshold) +
                       " exceeds curve maximum " + std::to_string(curve_max));

  const double period = curve == Curve::general
                            ? period_general(cfg)
                            : cfg.h() / (cfg.energy * cfg.x);
  const double peak = curve == Curve::general
                          ? peak_time_general(cfg)
                          : peak_time_special(cfg);

  // The curve rises monotonically from x^2 at t = 0 to its maximum at the
  // first peak; walk in T/1024 steps to bracket, then bisect.
  const double step = period / 1024.0;
  double lo = 0.0;
  double hi = peak;
  bool bracketed = false;
  for (double t = step; t < peak; t += step) {
    if (value_at(t) >= threshold) {
      lo = t - step;
      hi = t;
      bracketed = true;
      break;
    }
  }
  if (!bracketed) {
    if (value_at(peak) < threshold) {
      // Threshold sits within clamp tolerance of the maximum; the peak is
      // the crossing to floating-point resolution.
      return Crossing{peak, false};
    }
    lo = std::max(0.0, peak - step);
    hi = peak;
  }

  const double tol = 1e-12 * period;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (value_at(mid) >= threshold)
      hi = mid;
    else
      lo = mid;
  }
  return Crossing{0.5 * (lo + hi), false};
}

}  // namespace asl
