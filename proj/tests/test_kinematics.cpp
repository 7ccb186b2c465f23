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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "asl/errors.hpp"
#include "asl/kinematics.hpp"
#include "asl/propagator.hpp"

using namespace asl;

namespace {

SearchConfig table_cfg(double x, double gamma = 1.1) {
  return SearchConfig::with_h(x, gamma);  // h = E = 1
}

}  // namespace

TEST_CASE("config validation names the offending field") {
  CHECK_THROWS_WITH_AS((SearchConfig{0.0, 1.1}.validate()),
                       doctest::Contains("x"), domain_error);
  CHECK_THROWS_WITH_AS((SearchConfig{1.5, 1.1}.validate()),
                       doctest::Contains("x"), domain_error);
  CHECK_THROWS_WITH_AS((SearchConfig{0.5, 0.9}.validate()),
                       doctest::Contains("gamma"), domain_error);
  CHECK_THROWS_WITH_AS((SearchConfig{0.5, 1.1, -1.0}.validate()),
                       doctest::Contains("energy"), domain_error);
  CHECK_THROWS_WITH_AS((SearchConfig{0.5, 1.1, 1.0, 0.0}.validate()),
                       doctest::Contains("hbar"), domain_error);
}

TEST_CASE("probability clamping tolerance") {
  CHECK(Probability::from_raw(1.0 + 5e-13).value() == 1.0);
  CHECK(Probability::from_raw(1.0 + 5e-13).raw() == doctest::Approx(1.0 + 5e-13));
  CHECK(Probability::from_raw(-5e-13).value() == 0.0);
  CHECK_THROWS_AS(Probability::from_raw(1.0 + 1e-11), numeric_error);
  CHECK_THROWS_AS(Probability::from_raw(-1e-11), numeric_error);
}

TEST_CASE("general transition probability") {
  const SearchConfig cfg = table_cfg(0.80);
  // Peak value from the reference table row.
  CHECK(transition_probability_general(cfg, 0.29743).value() ==
        doctest::Approx(0.99873).epsilon(1e-4));
  // t = 0 collapses to x^2 exactly.
  for (double x : {0.1, 0.37, 0.8, 1.0})
    CHECK(transition_probability_general(table_cfg(x), 0.0).value() == x * x);
}

TEST_CASE("general curve agrees with the exact propagator") {
  // Pinned from the 2x2 eigendecomposition evolution at x=0.65, gamma=1.1,
  // h=E=1, t=0.18.
  const SearchConfig cfg = table_cfg(0.65);
  const double closed = transition_probability_general(cfg, 0.18).value();
  CHECK(closed == doctest::Approx(0.702632742288321).epsilon(1e-12));

  const HamiltonianSpec h = build_hamiltonian_2d(cfg);
  const StateVector evolved = evolve_exact(h, source_state_2d(cfg), 0.18, cfg.hbar);
  const double oracle = fidelity(target_state_2d(), evolved).value();
  CHECK(std::abs(closed - oracle) <= 1e-10);
}

TEST_CASE("special transition probability") {
  SearchConfig cfg = table_cfg(0.80, 1.0);
  CHECK(transition_probability_special(cfg, 0.20202).value() ==
        doctest::Approx(0.900).epsilon(1e-3));
  for (double x : {0.2, 0.5, 0.95})
    CHECK(transition_probability_special(table_cfg(x), 0.0).value() == x * x);
  // Peak of the special curve at E x t / hbar = pi/2.
  cfg = table_cfg(0.5, 1.0);
  CHECK(transition_probability_special(cfg, 0.5).value() ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("maximum transition probability") {
  CHECK(max_transition_probability(0.80, 1.1).value() ==
        doctest::Approx(0.9987).epsilon(1e-4));
  CHECK(max_transition_probability(0.65, 1.1).value() ==
        doctest::Approx(0.9969).epsilon(1e-4));
  // gamma = 1 gives exactly 1 for any x.
  for (double x : {0.01, 0.33, 0.5, 0.77, 1.0})
    CHECK(max_transition_probability(x, 1.0).value() == 1.0);
  CHECK_THROWS_AS(max_transition_probability(0.0, 1.0), domain_error);
  // Hand evaluation at (0.5, 2).
  CHECK(max_transition_probability(0.5, 2.0).value() ==
        doctest::Approx(0.75).epsilon(1e-12));
}

TEST_CASE("peak times") {
  CHECK(peak_time_general(table_cfg(0.80)) ==
        doctest::Approx(0.297).epsilon(1e-3));
  CHECK(peak_time_general(table_cfg(0.65)) ==
        doctest::Approx(0.366).epsilon(1e-3));
  // gamma = 1 reduces to h/(4Ex), bit-exactly.
  CHECK(peak_time_general(table_cfg(0.5, 1.0)) ==
        peak_time_special(table_cfg(0.5, 1.0)));
  CHECK(peak_time_special(table_cfg(0.5, 1.0)) == doctest::Approx(0.5));
  CHECK(peak_time_special(table_cfg(0.80)) == doctest::Approx(0.3125));
  CHECK(peak_time_special(table_cfg(1.0)) == doctest::Approx(0.25));
  // The special curve peaks at exactly 1 there.
  const SearchConfig cfg = table_cfg(0.65);
  CHECK(peak_time_special(cfg) == doctest::Approx(0.38462).epsilon(1e-4));
  CHECK(transition_probability_special(cfg, peak_time_special(cfg)).value() ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("matched time of the special curve") {
  CHECK(matched_time_special(0.80, 1.1, 1.0, 1.0) ==
        doctest::Approx(0.301).epsilon(1e-3));
  CHECK(matched_time_special(0.95, 1.1, 1.0, 1.0) ==
        doctest::Approx(0.255).epsilon(1e-3));
  // gamma = 1: acos argument is 0 and the result is exactly h/(4Ex).
  CHECK(matched_time_special(0.6, 1.0, 1.0, 1.0) ==
        peak_time_special(table_cfg(0.6, 1.0)));
  CHECK(matched_time_special(0.6, 1.0, 1.0, 1.0) ==
        doctest::Approx(0.41667).epsilon(1e-4));
  CHECK_THROWS_AS(matched_time_special(1.0, 1.1, 1.0, 1.0), domain_error);
}

TEST_CASE("matched time meets the general peak value") {
  std::mt19937_64 rng(20260809);
  std::uniform_real_distribution<double> xd(0.05, 0.95), gd(1.0, 3.0);
  for (int i = 0; i < 200; ++i) {
    const double x = xd(rng), g = gd(rng);
    const double ts = matched_time_special(x, g, 1.0, 1.0);
    const SearchConfig cfg = table_cfg(x, g);
    CHECK(transition_probability_special(cfg, ts).value() ==
          doctest::Approx(max_transition_probability(x, g).value())
              .epsilon(1e-10));
    // Ordering: never past the special peak.
    CHECK(ts <= peak_time_special(cfg) * (1.0 + 1e-15));
  }
}

TEST_CASE("imperfection angle") {
  CHECK(imperfection_angle(0.80, 1.1) ==
        doctest::Approx(3.57e-2).epsilon(2e-3));
  CHECK(imperfection_angle(0.65, 1.1) ==
        doctest::Approx(5.56e-2).epsilon(2e-3));
  for (double x : {0.1, 0.5, 0.9, 1.0})
    CHECK(imperfection_angle(x, 1.0) == 0.0);
}

TEST_CASE("angle consistency: cos^2(delta) equals the peak probability") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> xd(0.02, 1.0), gd(1.0, 10.0);
  for (int i = 0; i < 500; ++i) {
    const double x = xd(rng), g = gd(rng);
    const double c = std::cos(imperfection_angle(x, g));
    CHECK(c * c == doctest::Approx(max_transition_probability(x, g).value())
                       .epsilon(1e-12));
  }
}

TEST_CASE("gamma = 1 reduction is exact") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> xd(0.05, 1.0), td(0.0, 5.0);
  for (int i = 0; i < 500; ++i) {
    const SearchConfig cfg = table_cfg(xd(rng), 1.0);
    const double t = td(rng);
    CHECK(std::abs(transition_probability_general(cfg, t).value() -
                   transition_probability_special(cfg, t).value()) <= 1e-12);
  }
}

TEST_CASE("peak consistency on a grid") {
  for (double x = 0.05; x < 1.0; x += 0.05) {
    for (double g : {1.0, 1.01, 1.1, 1.5, 2.0, 5.0, 10.0}) {
      const SearchConfig cfg = table_cfg(x, g);
      CHECK(transition_probability_general(cfg, peak_time_general(cfg)).value() ==
            doctest::Approx(max_transition_probability(x, g).value())
                .epsilon(1e-12));
    }
  }
}

TEST_CASE("periodicity of the general curve") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> xd(0.05, 0.95), gd(1.0, 4.0),
      td(0.0, 3.0);
  for (int i = 0; i < 200; ++i) {
    const SearchConfig cfg = table_cfg(xd(rng), gd(rng));
    const double period = period_general(cfg);
    const double t = td(rng);
    CHECK(std::abs(transition_probability_general(cfg, t).value() -
                   transition_probability_general(cfg, t + period).value()) <=
          1e-10);
  }
}

TEST_CASE("range: x^2 <= P_g <= P_max over one period") {
  for (double x : {0.1, 0.4, 0.8}) {
    for (double g : {1.0, 1.1, 2.5}) {
      const SearchConfig cfg = table_cfg(x, g);
      const double pmax = max_transition_probability(x, g).value();
      const double period = period_general(cfg);
      for (int i = 0; i <= 1000; ++i) {
        const double p =
            transition_probability_general(cfg, period * i / 1000.0).value();
        CHECK(p >= x * x - 1e-12);
        CHECK(p <= pmax + 1e-12);
      }
    }
  }
}

TEST_CASE("peak probability increases strictly with x at fixed gamma > 1") {
  for (double g : {1.05, 1.5, 4.0}) {
    double prev = 0.0;
    for (int i = 1; i <= 1000; ++i) {
      const double x = static_cast<double>(i) / 1001.0;
      const double p = max_transition_probability(x, g).value();
      CHECK(p > prev);
      prev = p;
    }
  }
}

TEST_CASE("first crossing times at threshold 0.9") {
  const SearchConfig cfg = table_cfg(0.80);
  const Crossing general = first_crossing_time(Curve::general, cfg, 0.9);
  const Crossing special = first_crossing_time(Curve::special, cfg, 0.9);
  CHECK_FALSE(general.already_satisfied);
  CHECK_FALSE(special.already_satisfied);
  CHECK(general.t == doctest::Approx(0.1928604191).epsilon(1e-8));
  CHECK(special.t == doctest::Approx(0.2020621527).epsilon(1e-8));
}

TEST_CASE("first crossing edge cases") {
  const SearchConfig cfg = table_cfg(0.80);
  // Already satisfied at t = 0.
  const Crossing below = first_crossing_time(Curve::special, cfg, 0.64);
  CHECK(below.already_satisfied);
  CHECK(below.t == 0.0);
  // Unreachable threshold on the general curve.
  CHECK_THROWS_AS(first_crossing_time(Curve::general, cfg, 0.9999),
                  domain_error);
  // Threshold equal to the maximum lands within the flat top of the peak
  // (the curve rounds to pmax over a ~1e-8 window around the peak time).
  const double pmax = max_transition_probability(0.80, 1.1).value();
  const Crossing at_peak = first_crossing_time(Curve::general, cfg, pmax);
  CHECK(at_peak.t == doctest::Approx(peak_time_general(cfg)).epsilon(1e-7));
}

TEST_CASE("crossing time is consistent with the curve") {
  std::mt19937_64 rng(1234);
  std::uniform_real_distribution<double> xd(0.1, 0.9), gd(1.0, 3.0),
      fd(0.05, 0.95);
  for (int i = 0; i < 100; ++i) {
    const SearchConfig cfg = table_cfg(xd(rng), gd(rng));
    const double pmax = max_transition_probability(cfg.x, cfg.gamma).value();
    const double threshold =
        cfg.x * cfg.x + fd(rng) * (pmax - cfg.x * cfg.x);
    const Crossing c = first_crossing_time(Curve::general, cfg, threshold);
    CHECK(transition_probability_general(cfg, c.t).value() ==
          doctest::Approx(threshold).epsilon(1e-7));
  }
}
