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

#include "asl/prior.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "asl/errors.hpp"

namespace asl {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
// Below this magnitude a plain-double panel sum would be meaningless.
const double kLogTiny = std::log(1e-280);

double log_add_exp(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  const double hi = std::max(a, b);
  return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

// log(1 + e^L) without overflow.
double softplus(double log_term) {
  if (log_term == kNegInf) return 0.0;
  if (log_term > 36.0) return log_term;  // 1 is below double resolution
  return std::log1p(std::exp(log_term));
}

using LogFn = std::function<double(double)>;

struct ScaledIntegral {
  double log_scale = 0.0;  // integral = value * exp(log_scale)
  double value = 0.0;
  double error = 0.0;  // same scale as value
  long evaluations = 0;
};

// Adaptive Simpson on f(theta) = exp(log_f(theta) - log_scale). The scale is
// taken from a coarse probe so the scaled integrand peaks near 1 whatever
// the raw magnitude.
class SimpsonIntegrator {
 public:
  explicit SimpsonIntegrator(LogFn log_f) : log_f_(std::move(log_f)) {}

  ScaledIntegral integrate(double a, double b, double rel_tol) {
    ScaledIntegral out;
    evaluations_ = 0;

    constexpr int probe_points = 257;  // 128 Simpson panels
    double peak = kNegInf;
    std::vector<double> probe(probe_points);
    for (int i = 0; i < probe_points; ++i) {
      const double theta = a + (b - a) * i / (probe_points - 1);
      probe[i] = raw_log(theta);
      peak = std::max(peak, probe[i]);
    }
    if (peak == kNegInf) return out;  // integrand identically zero
    scale_ = peak;

    // Composite-Simpson probe estimate sets the absolute tolerance.
    double coarse = 0.0;
    const double hp = (b - a) / (probe_points - 1);
    for (int i = 0; i + 2 < probe_points; i += 2)
      coarse += hp / 3.0 *
                (std::exp(probe[i] - scale_) + 4.0 * std::exp(probe[i + 1] - scale_) +
                 std::exp(probe[i + 2] - scale_));
    const double abs_tol = rel_tol * std::max(coarse, 1e-30);

    // Refine each probe panel separately; a feature narrower than the probe
    // spacing would otherwise hide between the nodes of a single top-level
    // Simpson estimate and stop the recursion immediately.
    error_acc_ = 0.0;
    constexpr int panels = (probe_points - 1) / 2;
    const double panel_tol = abs_tol / panels;
    double total = 0.0;
    for (int i = 0; i + 2 < probe_points; i += 2) {
      const double pa = a + hp * i, pb = a + hp * (i + 2);
      const double fa = std::exp(probe[i] - scale_);
      const double fm = std::exp(probe[i + 1] - scale_);
      const double fb = std::exp(probe[i + 2] - scale_);
      total += adapt(pa, pb, fa, fm, fb, simpson(pa, pb, fa, fm, fb),
                     panel_tol, 52);
    }
    out.value = total;
    out.log_scale = scale_;
    out.error = error_acc_;
    out.evaluations = evaluations_ + probe_points;
    return out;
  }

 private:
  double raw_log(double theta) { return log_f_(theta); }

  double eval(double theta) {
    ++evaluations_;
    const double l = raw_log(theta);
    return l == kNegInf ? 0.0 : std::exp(l - scale_);
  }

  static double simpson(double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  }

  double adapt(double a, double b, double fa, double fm, double fb,
               double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = eval(lm), frm = eval(rm);
    const double left = simpson(a, m, fa, flm, fm);
    const double right = simpson(m, b, fm, frm, fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
      error_acc_ += std::abs(delta) / 15.0;
      return left + right + delta / 15.0;
    }
    return adapt(a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adapt(m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
  }

  LogFn log_f_;
  double scale_ = 0.0;
  double error_acc_ = 0.0;
  long evaluations_ = 0;
};

double log_gamma_half_integral(std::size_t m) {
  // log int_0^{pi/2} sin^m = log( sqrt(pi)/2 * Gamma((m+1)/2) / Gamma(m/2+1) )
  const double md = static_cast<double>(m);
  return 0.5 * std::log(std::numbers::pi) - std::numbers::ln2 +
         std::lgamma(0.5 * (md + 1.0)) - std::lgamma(0.5 * md + 1.0);
}

}  // namespace

void PriorSpec::validate() const {
  if (hilbert_dim < 2)
    throw domain_error("prior dimension must be >= 2, got " +
                       std::to_string(hilbert_dim));
  if (kind == PriorKind::damped_gaussian && !(sigma_sq > 0.0))
    throw domain_error("sigma_sq must be > 0, got " + std::to_string(sigma_sq));
  if (!(damping_scale > 0.0))
    throw domain_error("damping_scale must be > 0");
}

double log_density(const PriorSpec& spec, double theta) {
  spec.validate();
  if (!(theta >= 0.0) || !(theta <= kHalfPi))
    throw domain_error("theta must be in [0, pi/2], got " +
                       std::to_string(theta));
  if (spec.kind == PriorKind::uniform) return 0.0;
  const double s = std::sin(theta);
  const double damping =
      s == 0.0 ? 0.0
               : softplus(static_cast<double>(spec.measure_exponent()) *
                          std::log(spec.damping_scale * s));
  return -theta * theta / (2.0 * spec.sigma_sq) - damping;
}

double density(const PriorSpec& spec, double theta) {
  return std::exp(log_density(spec, theta));
}

QuadratureResult prob_overlap_at_least(const PriorSpec& spec, double x_bar) {
  spec.validate();
  if (!(x_bar > 0.0) || !(x_bar < 1.0))
    throw domain_error("x_bar must be in (0, 1), got " + std::to_string(x_bar));

  const double exponent = static_cast<double>(spec.measure_exponent());
  const LogFn log_integrand = [&spec, exponent](double theta) {
    const double s = std::sin(theta);
    if (s == 0.0) return kNegInf;
    return log_density(spec, theta) + exponent * std::log(s);
  };

  const double split = std::acos(x_bar);
  SimpsonIntegrator numerator_integrator(log_integrand);
  SimpsonIntegrator denominator_integrator(log_integrand);
  const ScaledIntegral num = numerator_integrator.integrate(0.0, split, 1e-10);
  const ScaledIntegral den =
      denominator_integrator.integrate(0.0, kHalfPi, 1e-10);

  QuadratureResult result;
  result.evaluations = num.evaluations + den.evaluations;
  result.log_space_used = num.log_scale < kLogTiny || den.log_scale < kLogTiny;

  if (den.value <= 0.0)
    throw numeric_error("overlap prior normalization integral vanished");

  const double ratio =
      std::exp(num.log_scale - den.log_scale) * (num.value / den.value);
  const double rel_est = (num.value > 0.0 ? num.error / num.value : 0.0) +
                         den.error / den.value;
  if (rel_est > 1e-6)
    throw numeric_error("overlap quadrature did not converge: relative error "
                        "estimate " +
                        std::to_string(rel_est));
  result.value = std::clamp(ratio, 0.0, 1.0);
  result.abs_error_estimate = std::abs(ratio) * rel_est;
  return result;
}

double normalization_constant(const PriorSpec& spec) {
  spec.validate();
  if (spec.kind == PriorKind::uniform) return 2.0 / std::numbers::pi;
  SimpsonIntegrator integrator(
      [&spec](double theta) { return log_density(spec, theta); });
  const ScaledIntegral total = integrator.integrate(0.0, kHalfPi, 1e-12);
  if (total.value <= 0.0)
    throw numeric_error("density integral vanished");
  return std::exp(-total.log_scale) / total.value;
}

double uniform_prob_closed_check(std::size_t hilbert_dim, double x_bar) {
  if (hilbert_dim < 2)
    throw domain_error("dimension must be >= 2, got " +
                       std::to_string(hilbert_dim));
  if (!(x_bar > 0.0) || !(x_bar < 1.0))
    throw domain_error("x_bar must be in (0, 1), got " + std::to_string(x_bar));

  const std::size_t m = 2 * hilbert_dim - 2;
  const double log_full = log_gamma_half_integral(m);
  const double sin_phi = std::sqrt((1.0 - x_bar) * (1.0 + x_bar));
  const double log_sin = std::log(sin_phi);
  const double log_cos = std::log(x_bar);

  if (x_bar * x_bar > 0.5) {
    // Downward recurrence I_{k-2} = (k I_k + cos sin^{k-1}) / (k-1) from a
    // zero seed; the seed's influence decays like sin^{2K}(phi) < 2^{-K}.
    const double decay = -2.0 * log_sin;
    const std::size_t extra = static_cast<std::size_t>(
        std::clamp(std::ceil(56.0 / std::max(decay, 1e-30)), 16.0, 1e6));
    double log_i = kNegInf;
    for (std::size_t k = m + 2 * extra; k > m; k -= 2) {
      const double kd = static_cast<double>(k);
      const double inhomogeneous = log_cos + (kd - 1.0) * log_sin;
      log_i = log_add_exp(std::log(kd) + log_i, inhomogeneous) -
              std::log(kd - 1.0);
    }
    return std::exp(log_i - log_full);
  }

  // Complementary branch: 1 - int_0^{pi/2 - phi} cos^m / W_m with the
  // all-positive upward recurrence C_k = (sin cos^{k-1} + (k-1) C_{k-2}) / k.
  const double psi = kHalfPi - std::acos(x_bar);
  const double sin_psi = std::sin(psi);
  const double cos_psi = std::cos(psi);
  double c_prev = psi;  // C_0
  double pow_cos = cos_psi;  // cos^{k-1} for k = 2
  for (std::size_t k = 2; k <= m; k += 2) {
    const double kd = static_cast<double>(k);
    c_prev = (sin_psi * pow_cos + (kd - 1.0) * c_prev) / kd;
    pow_cos *= cos_psi * cos_psi;
  }
  const double ratio = c_prev / std::exp(log_full);
  return std::clamp(1.0 - ratio, 0.0, 1.0);
}

}  // namespace asl
