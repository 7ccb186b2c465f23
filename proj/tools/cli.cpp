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

#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iostream>
#include <numbers>

#include <CLI11.hpp>

#include "asl/bounds.hpp"
#include "asl/discrimination.hpp"
#include "asl/errors.hpp"
#include "asl/kinematics.hpp"
#include "asl/prior.hpp"
#include "asl/regions.hpp"
#include "asl/version.hpp"

namespace asl::cli {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string trim_copy(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

// Flat key=value config: keys are the subcommand's long option names, values
// only apply where the command line did not provide the option.
void apply_config_file(CLI::App* sub, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw usage_error("cannot read config file: " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim_copy(line);
    if (line.empty() || line[0] == '#') continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw usage_error("config line " + std::to_string(lineno) +
                        " is not key=value: " + line);
    const std::string key = trim_copy(line.substr(0, eq));
    const std::string value = trim_copy(line.substr(eq + 1));
    if (key.empty() || key == "config")
      throw usage_error("bad config key on line " + std::to_string(lineno));
    CLI::Option* opt = sub->get_option_no_throw("--" + key);
    if (opt == nullptr)
      throw usage_error("unknown config key '" + key + "' for command '" +
                        sub->get_name() + "'");
    if (opt->count() > 0) continue;  // command line wins
    try {
      opt->add_result(value);
      opt->run_callback();
    } catch (const CLI::ParseError& e) {
      throw usage_error("config key '" + key + "': " + e.what());
    }
  }
}

std::string utc_timestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm_utc{};
  gmtime_r(&now, &tm_utc);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

std::string join_doubles(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ';';
    out += format_double(values[i]);
  }
  return out;
}

ResultDocument base_document(const RunConfig& cfg) {
  ResultDocument doc;
  doc.metadata["command"] = command_name(cfg.command);
  doc.metadata["version"] = asl::version;
  doc.metadata["timestamp"] = utc_timestamp();
  doc.metadata["energy"] = format_double(cfg.energy);
  doc.metadata["hbar"] = format_double(cfg.hbar);
  return doc;
}

DiscriminationSetup setup_from(const RunConfig& cfg) {
  return cfg.p_w ? DiscriminationSetup::from_prior(*cfg.p_w)
                 : DiscriminationSetup::from_asymmetry(cfg.alpha);
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = lo + (hi - lo) * static_cast<double>(i) /
                      static_cast<double>(n - 1);
  return out;
}

ResultDocument run_curve(const RunConfig& cfg) {
  const SearchConfig sc{cfg.x, cfg.gamma, cfg.energy, cfg.hbar};
  const double tmax = cfg.tmax > 0.0 ? cfg.tmax : period_general(sc);
  ResultDocument doc = base_document(cfg);
  doc.metadata["x"] = format_double(cfg.x);
  doc.metadata["gamma"] = format_double(cfg.gamma);
  doc.metadata["tmax"] = format_double(tmax);
  doc.columns = {"t", "p_general", "p_special"};
  for (double t : linspace(0.0, tmax, cfg.points))
    doc.rows.push_back({t, transition_probability_general(sc, t).value(),
                        transition_probability_special(sc, t).value()});
  return doc;
}

ResultDocument run_maxfid(const RunConfig& cfg) {
  ResultDocument doc = base_document(cfg);
  doc.columns = {"x", "gamma", "pmax"};
  if (cfg.x_given) {
    doc.metadata["x"] = format_double(cfg.x);
    doc.metadata["gamma"] = format_double(cfg.gamma);
    doc.rows.push_back(
        {cfg.x, cfg.gamma, max_transition_probability(cfg.x, cfg.gamma).value()});
    return doc;
  }
  const std::vector<double> xs = make_x_axis(cfg.nx);
  const std::vector<double> gs =
      cfg.gamma_given
          ? std::vector<double>{cfg.gamma}
          : make_gamma_axis(cfg.ngamma, cfg.gamma_min, cfg.gamma_max);
  const std::vector<double> layer = pmax_grid(xs, gs);
  for (std::size_t ig = 0; ig < gs.size(); ++ig)
    for (std::size_t ix = 0; ix < xs.size(); ++ix)
      doc.rows.push_back({xs[ix], gs[ig], layer[ig * xs.size() + ix]});
  return doc;
}

ResultDocument run_delta(const RunConfig& cfg) {
  ResultDocument doc = base_document(cfg);
  doc.columns = {"gamma", "x", "delta"};
  if (cfg.x_given) {
    const double g = cfg.gamma_given ? cfg.gamma : cfg.delta_gammas.front();
    doc.rows.push_back({g, cfg.x, imperfection_angle(cfg.x, g)});
    return doc;
  }
  const std::vector<double> gammas = cfg.gamma_given
                                         ? std::vector<double>{cfg.gamma}
                                         : cfg.delta_gammas;
  doc.metadata["gammas"] = join_doubles(gammas);
  const std::vector<double> xs = make_x_axis(cfg.nx);
  for (double g : gammas)
    for (double x : xs) doc.rows.push_back({g, x, imperfection_angle(x, g)});
  return doc;
}

ResultDocument run_discrim(const RunConfig& cfg) {
  ResultDocument doc = base_document(cfg);
  const DiscriminationSetup setup = setup_from(cfg);
  doc.metadata["p_w"] = format_double(setup.p_w());
  doc.metadata["alpha"] = format_double(setup.alpha());
  doc.metadata["delta_max"] = format_double(delta_max_from_prior(setup.p_w()));
  if (cfg.single_delta) {
    doc.columns = {"delta", "delta_f", "p_e", "delta_max", "satisfied"};
    const double d = *cfg.single_delta;
    doc.rows.push_back({d, fidelity_deficit(d),
                        min_error_probability(d, setup).value(),
                        delta_max_from_prior(setup.p_w()),
                        search_beats_discrimination(d, setup) ? 1.0 : 0.0});
    return doc;
  }
  doc.metadata["ratios"] = join_doubles(cfg.ratios);
  doc.columns = {"prior_ratio", "delta", "delta_f", "p_e"};
  for (double ratio : cfg.ratios) {
    const DiscriminationSetup s = DiscriminationSetup::from_asymmetry(ratio);
    for (double d : linspace(0.0, std::numbers::pi / 2.0, cfg.points))
      doc.rows.push_back(
          {ratio, d, fidelity_deficit(d), min_error_probability(d, s).value()});
  }
  return doc;
}

ResultDocument run_bound(const RunConfig& cfg) {
  if (delta_outside_small_angle_regime(cfg.bound_delta))
    std::cerr << "warning: delta = " << format_double(cfg.bound_delta)
              << " is outside the small-angle regime (delta <= 0.1); the "
                 "bound is loose there\n";
  ResultDocument doc = base_document(cfg);
  doc.columns = {"dim", "delta", "t_lower"};
  doc.rows.push_back(
      {static_cast<double>(cfg.dim), cfg.bound_delta,
       min_time_lower_bound(cfg.dim, cfg.bound_delta, cfg.energy, cfg.hbar)});
  return doc;
}

ResultDocument run_verify_proof(const RunConfig& cfg) {
  ResultDocument doc = base_document(cfg);
  doc.columns = {"dim",          "gamma",       "is_terminal", "delta",
                 "t",            "distance_sum", "growth_rhs", "terminal_rhs",
                 "growth_ok",    "terminal_ok"};
  bool all_growth = true, all_terminal = true, all_chain = true;
  const auto push = [&doc](const BoundReport& r) {
    doc.rows.push_back({static_cast<double>(r.dim), r.gamma,
                        r.is_terminal_row ? 1.0 : 0.0, r.delta, r.t,
                        r.distance_sum, r.growth_rhs, r.terminal_rhs,
                        r.growth_satisfied ? 1.0 : 0.0,
                        r.terminal_satisfied ? 1.0 : 0.0});
  };
  for (std::size_t dim : cfg.dims) {
    for (double gamma : cfg.gammas) {
      const BoundReport terminal =
          verify_terminal_distance(dim, gamma, cfg.energy, cfg.hbar);
      const double horizon = cfg.tmax > 0.0 ? cfg.tmax : 2.0 * terminal.t;
      const std::vector<double> grid = linspace(0.0, horizon, cfg.proof_points);
      for (const BoundReport& r :
           verify_distance_growth(dim, gamma, cfg.energy, cfg.hbar, grid)) {
        all_growth = all_growth && r.growth_satisfied;
        push(r);
      }
      all_growth = all_growth && terminal.growth_satisfied;
      all_terminal = all_terminal && terminal.terminal_satisfied;
      // Chain: t >= (hbar/2E)(1-delta)sqrt(N), written through the already
      // reported bounds so it holds exactly when both of them do.
      const double chain_rhs = cfg.hbar / (2.0 * cfg.energy) *
                               (1.0 - terminal.delta) *
                               std::sqrt(static_cast<double>(dim));
      all_chain = all_chain && terminal.t >= chain_rhs;
      push(terminal);
    }
  }
  doc.metadata["all_growth_satisfied"] = all_growth ? "true" : "false";
  doc.metadata["all_terminal_satisfied"] = all_terminal ? "true" : "false";
  doc.metadata["chain_satisfied"] = all_chain ? "true" : "false";
  return doc;
}

ResultDocument run_regions(const RunConfig& cfg) {
  const RegionGrid grid =
      scan_regions(make_x_axis(cfg.nx),
                   make_gamma_axis(cfg.ngamma, cfg.gamma_min, cfg.gamma_max),
                   cfg.threshold, setup_from(cfg));
  ResultDocument doc = base_document(cfg);
  doc.metadata["threshold"] = format_double(cfg.threshold);
  doc.metadata["prior_ratio"] = format_double(grid.prior_ratio);
  doc.metadata["regions_coincide"] = regions_coincide(grid) ? "true" : "false";
  bool subset = true;
  for (std::size_t i = 0; i < grid.mask_rP.size(); ++i)
    subset = subset && (!grid.mask_rP[i] || grid.mask_RP[i]);
  doc.metadata["masks_subset_ok"] = subset ? "true" : "false";
  doc.columns = {"x", "gamma", "pmax", "in_Rt", "in_RP", "in_rP"};
  for (std::size_t ig = 0; ig < grid.gamma_axis.size(); ++ig) {
    for (std::size_t ix = 0; ix < grid.x_axis.size(); ++ix) {
      const std::size_t idx = grid.index(ix, ig);
      doc.rows.push_back({grid.x_axis[ix], grid.gamma_axis[ig],
                          grid.pmax_layer[idx],
                          static_cast<double>(grid.mask_Rt[idx]),
                          static_cast<double>(grid.mask_RP[idx]),
                          static_cast<double>(grid.mask_rP[idx])});
    }
  }
  return doc;
}

ResultDocument run_table1(const RunConfig& cfg) {
  ResultDocument doc = base_document(cfg);
  doc.metadata["gamma"] = format_double(cfg.gamma);
  doc.metadata["alpha"] = format_double(cfg.alpha);
  doc.columns = {"x",   "delta",     "pmax",     "delta_f",
                 "p_e", "t_special", "t_general"};
  for (const TableRow& row : make_table1(cfg.x_list, cfg.gamma, cfg.alpha,
                                         cfg.energy, kTwoPi * cfg.hbar))
    doc.rows.push_back({row.x, row.delta, row.pmax, row.delta_f, row.p_e,
                        row.t_special, row.t_general});
  return doc;
}

ResultDocument run_prior(const RunConfig& cfg) {
  ResultDocument doc = base_document(cfg);
  doc.metadata["kind"] = cfg.prior_kind;
  doc.metadata["dim"] = std::to_string(cfg.dim);
  doc.columns = {"dim",         "sigma_sq", "xbar",          "probability",
                 "abs_error",   "evaluations", "log_space_used", "oracle_uniform"};
  const bool uniform = cfg.prior_kind == "uniform";
  const std::vector<double> sigmas =
      uniform ? std::vector<double>{0.0} : cfg.sigma_sqs;
  for (double s2 : sigmas) {
    PriorSpec spec{cfg.dim, uniform ? 1.0 : s2,
                   uniform ? PriorKind::uniform : PriorKind::damped_gaussian,
                   cfg.damping_scale};
    for (double xbar : cfg.xbars) {
      const QuadratureResult r = prob_overlap_at_least(spec, xbar);
      const double oracle =
          uniform ? uniform_prob_closed_check(cfg.dim, xbar) : 0.0;
      doc.rows.push_back({static_cast<double>(cfg.dim), s2, xbar, r.value,
                          r.abs_error_estimate,
                          static_cast<double>(r.evaluations),
                          r.log_space_used ? 1.0 : 0.0, oracle});
    }
  }
  return doc;
}

ResultDocument run_crossing(const RunConfig& cfg) {
  const SearchConfig sc{cfg.x, cfg.gamma, cfg.energy, cfg.hbar};
  const Crossing general = first_crossing_time(Curve::general, sc, cfg.threshold);
  const Crossing special = first_crossing_time(Curve::special, sc, cfg.threshold);
  ResultDocument doc = base_document(cfg);
  doc.metadata["x"] = format_double(cfg.x);
  doc.metadata["gamma"] = format_double(cfg.gamma);
  doc.columns = {"threshold", "t_general", "t_special", "already_satisfied_general",
                 "already_satisfied_special"};
  doc.rows.push_back({cfg.threshold, general.t, special.t,
                      general.already_satisfied ? 1.0 : 0.0,
                      special.already_satisfied ? 1.0 : 0.0});
  return doc;
}

void require(bool condition, const std::string& constraint) {
  if (!condition) throw usage_error(constraint);
}

void validate(RunConfig& cfg) {
  require(cfg.energy > 0.0, "--energy must be > 0");
  require(cfg.hbar > 0.0, "--h/--hbar must be > 0");
  require(cfg.points >= 2, "--points must be >= 2");
  require(cfg.proof_points >= 2, "--points must be >= 2");
  require(cfg.nx >= 1 && cfg.ngamma >= 1, "grid sizes must be >= 1");
  require(cfg.gamma_min >= 1.0 && cfg.gamma_max >= cfg.gamma_min,
          "--gamma-min/--gamma-max must satisfy 1 <= min <= max");
  require(cfg.tmax >= 0.0, "--tmax must be >= 0");
  require(cfg.alpha > 0.0, "--alpha must be > 0");
  if (cfg.p_w) require(*cfg.p_w > 0.0 && *cfg.p_w < 1.0, "--pw must be in (0, 1)");
  require(cfg.gamma >= 1.0, "--gamma must be >= 1");

  switch (cfg.command) {
    case Command::curve:
    case Command::crossing:
      require(cfg.x > 0.0 && cfg.x <= 1.0, "--x must be in (0, 1]");
      require(cfg.threshold >= 0.0 && cfg.threshold <= 1.0,
              "--threshold must be in [0, 1]");
      break;
    case Command::maxfid:
    case Command::delta:
      if (cfg.x_given)
        require(cfg.x > 0.0 && cfg.x <= 1.0, "--x must be in (0, 1]");
      for (double g : cfg.delta_gammas)
        require(g >= 1.0, "--gammas values must be >= 1");
      break;
    case Command::discrim:
      for (double r : cfg.ratios) require(r > 0.0, "--ratios values must be > 0");
      if (cfg.single_delta)
        require(*cfg.single_delta >= 0.0 &&
                    *cfg.single_delta <= std::numbers::pi / 2.0,
                "--delta must be in [0, pi/2]");
      break;
    case Command::bound:
      require(cfg.dim >= 4, "--dim must be >= 4");
      require(cfg.bound_delta >= 0.0 && cfg.bound_delta <= 0.2,
              "--delta must be in [0, 0.2]");
      break;
    case Command::verify_proof:
      require(!cfg.dims.empty(), "--dims must not be empty");
      for (std::size_t d : cfg.dims)
        require(d >= 4 && d <= 4096, "--dims values must be in [4, 4096]");
      for (double g : cfg.gammas) require(g >= 1.0, "--gammas values must be >= 1");
      break;
    case Command::regions:
      require(cfg.threshold >= 0.0 && cfg.threshold < 1.0,
              "--threshold must be in [0, 1)");
      break;
    case Command::table1:
      require(!cfg.x_list.empty(), "--x must not be empty");
      for (double x : cfg.x_list)
        require(x > 0.0 && x < 1.0, "--x values must be in (0, 1)");
      break;
    case Command::prior:
      require(cfg.dim >= 2, "--dim must be >= 2");
      for (double s2 : cfg.sigma_sqs)
        require(s2 > 0.0, "--sigma-sq values must be > 0");
      for (double xb : cfg.xbars)
        require(xb > 0.0 && xb < 1.0, "--xbar values must be in (0, 1)");
      require(cfg.damping_scale > 0.0, "--damping-scale must be > 0");
      break;
  }
}

}  // namespace

const char* command_name(Command c) {
  switch (c) {
    case Command::curve: return "curve";
    case Command::maxfid: return "maxfid";
    case Command::delta: return "delta";
    case Command::discrim: return "discrim";
    case Command::bound: return "bound";
    case Command::verify_proof: return "verify-proof";
    case Command::regions: return "regions";
    case Command::table1: return "table1";
    case Command::prior: return "prior";
    case Command::crossing: return "crossing";
  }
  return "unknown";
}

RunConfig parse_args(const std::vector<std::string>& args) {
  RunConfig cfg;
  double h_value = 1.0;
  bool h_given = false;
  double single_delta = 0.0;
  bool single_delta_given = false;
  double p_w_value = 0.0;
  bool p_w_given = false;
  std::string config_path;

  CLI::App app{"Numerical laboratory for energy-asymmetric continuous-time "
               "quantum search"};
  app.name("analog-search-lab");
  app.require_subcommand(1);
  // --h is the Planck constant, so the help flag stays long-form only.
  app.set_help_flag("--help", "Print help and exit");

  const auto add_common = [&](CLI::App* sub) {
    sub->set_help_flag("--help", "Print help and exit");
    sub->add_option("--energy,-E", cfg.energy, "Marked-state energy E (> 0)")
        ->capture_default_str();
    CLI::Option* h_opt =
        sub->add_option("--h", h_value, "Planck constant h (default 1)")
            ->each([&](const std::string&) { h_given = true; });
    CLI::Option* hbar_opt =
        sub->add_option("--hbar", cfg.hbar, "Reduced Planck constant");
    h_opt->excludes(hbar_opt);
    hbar_opt->excludes(h_opt);
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sub->add_option("--output,-o", cfg.output,
                    "Output path ('-' for stdout)")
        ->capture_default_str();
    sub->add_option("--config", config_path,
                    "Flat key=value file supplying defaults; flags override");
  };
  const auto track_x = [&](CLI::App* sub) {
    sub->add_option("--x", cfg.x, "Source-target overlap x")
        ->each([&](const std::string&) { cfg.x_given = true; });
  };
  const auto track_gamma = [&](CLI::App* sub) {
    sub->add_option("--gamma", cfg.gamma, "Energy ratio E'/E (>= 1)")
        ->capture_default_str()
        ->each([&](const std::string&) { cfg.gamma_given = true; });
  };

  CLI::App* curve = app.add_subcommand(
      "curve", "Sample both transition-probability curves over time");
  add_common(curve);
  track_x(curve);
  track_gamma(curve);
  curve->add_option("--tmax", cfg.tmax, "Time horizon (0 = one full period)");
  curve->add_option("--points", cfg.points, "Number of samples")
      ->capture_default_str();

  CLI::App* maxfid = app.add_subcommand(
      "maxfid", "Peak transition probability, single point or (x,gamma) grid");
  add_common(maxfid);
  track_x(maxfid);
  track_gamma(maxfid);
  maxfid->add_option("--nx", cfg.nx, "x samples")->capture_default_str();
  maxfid->add_option("--ngamma", cfg.ngamma, "gamma samples")
      ->capture_default_str();
  maxfid->add_option("--gamma-min", cfg.gamma_min, "Lowest gamma")
      ->capture_default_str();
  maxfid->add_option("--gamma-max", cfg.gamma_max, "Highest gamma")
      ->capture_default_str();

  CLI::App* delta = app.add_subcommand(
      "delta", "Terminal-miss angle, single point or sweep over x");
  add_common(delta);
  track_x(delta);
  track_gamma(delta);
  delta->add_option("--gammas", cfg.delta_gammas,
                    "Gamma values for the sweep")
      ->delimiter(',');
  delta->add_option("--nx", cfg.nx, "x samples for the sweep")
      ->capture_default_str();

  CLI::App* discrim = app.add_subcommand(
      "discrim", "Discrimination error curves and fidelity-deficit checks");
  add_common(discrim);
  discrim->add_option("--alpha", cfg.alpha, "Prior asymmetry p_wtilde/p_w")
      ->capture_default_str();
  CLI::Option* pw_opt =
      discrim->add_option("--pw", p_w_value, "Prior p_w in (0,1)")
          ->each([&](const std::string&) { p_w_given = true; });
  pw_opt->excludes("--alpha");
  discrim->add_option("--ratios", cfg.ratios, "Asymmetry values for the sweep")
      ->delimiter(',');
  discrim->add_option("--points", cfg.points, "Sweep samples")
      ->capture_default_str();
  discrim->add_option("--delta", single_delta, "Evaluate a single angle")
      ->each([&](const std::string&) { single_delta_given = true; });

  CLI::App* bound = app.add_subcommand(
      "bound", "Search-time lower bound (hbar/2E)(1-delta)sqrt(N)");
  add_common(bound);
  bound->add_option("--dim", cfg.dim, "Hilbert dimension N (>= 4)")
      ->capture_default_str();
  bound->add_option("--delta", cfg.bound_delta, "Terminal-miss angle")
      ->capture_default_str();

  CLI::App* verify = app.add_subcommand(
      "verify-proof", "Propagate full instances and check the bound chain");
  add_common(verify);
  verify->add_option("--dims", cfg.dims, "Dimensions to test")->delimiter(',');
  verify->add_option("--gammas", cfg.gammas, "Gamma values to test")
      ->delimiter(',');
  verify->add_option("--points", cfg.proof_points, "Time-grid points")
      ->capture_default_str();
  verify->add_option("--tmax", cfg.tmax,
                     "Time horizon (0 = twice the peak time)");

  CLI::App* regions = app.add_subcommand(
      "regions", "Scan the (x, gamma) plane for the advantage regions");
  add_common(regions);
  regions->add_option("--nx", cfg.nx, "x samples")->capture_default_str();
  regions->add_option("--ngamma", cfg.ngamma, "gamma samples")
      ->capture_default_str();
  regions->add_option("--gamma-min", cfg.gamma_min, "Lowest gamma")
      ->capture_default_str();
  regions->add_option("--gamma-max", cfg.gamma_max, "Highest gamma")
      ->capture_default_str();
  regions->add_option("--threshold", cfg.threshold, "Peak-probability threshold")
      ->capture_default_str();
  regions->add_option("--alpha", cfg.alpha, "Prior asymmetry")
      ->capture_default_str();

  CLI::App* table1 = app.add_subcommand(
      "table1", "Reference comparison table of the two algorithms");
  add_common(table1);
  table1->add_option("--x", cfg.x_list, "Overlap values (one row each)")
      ->delimiter(',');
  track_gamma(table1);
  table1->add_option("--alpha", cfg.alpha, "Prior asymmetry")
      ->capture_default_str();

  CLI::App* prior = app.add_subcommand(
      "prior", "Probability of an overlap above a threshold under a sphere prior");
  add_common(prior);
  prior->add_option("--kind", cfg.prior_kind, "Prior kind")
      ->check(CLI::IsMember({"uniform", "damped-gaussian"}))
      ->capture_default_str();
  prior->add_option("--dim", cfg.dim, "Hilbert dimension N (>= 2)")
      ->capture_default_str();
  prior->add_option("--sigma-sq", cfg.sigma_sqs, "Gaussian variance values")
      ->delimiter(',');
  prior->add_option("--xbar", cfg.xbars, "Overlap thresholds")->delimiter(',');
  prior->add_option("--damping-scale", cfg.damping_scale,
                    "Scale inside the damping term")
      ->capture_default_str();

  CLI::App* crossing = app.add_subcommand(
      "crossing", "First time each curve reaches a probability threshold");
  add_common(crossing);
  track_x(crossing);
  track_gamma(crossing);
  crossing->add_option("--threshold", cfg.threshold, "Probability threshold")
      ->capture_default_str();

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("analog-search-lab");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    const auto chosen = app.get_subcommands();
    throw help_requested{chosen.empty()
                             ? app.help("", CLI::AppFormatMode::All)
                             : chosen.front()->help()};
  } catch (const CLI::CallForAllHelp&) {
    throw help_requested{app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    throw usage_error(e.what());
  }

  const std::map<std::string, Command> by_name = {
      {"curve", Command::curve},       {"maxfid", Command::maxfid},
      {"delta", Command::delta},       {"discrim", Command::discrim},
      {"bound", Command::bound},       {"verify-proof", Command::verify_proof},
      {"regions", Command::regions},   {"table1", Command::table1},
      {"prior", Command::prior},       {"crossing", Command::crossing}};
  CLI::App* chosen = app.get_subcommands().front();
  cfg.command = by_name.at(chosen->get_name());

  if (!config_path.empty()) apply_config_file(chosen, config_path);

  if (h_given && !(h_value > 0.0)) throw usage_error("--h must be > 0");
  if (h_given) cfg.hbar = h_value / kTwoPi;
  if (single_delta_given) cfg.single_delta = single_delta;
  if (p_w_given) cfg.p_w = p_w_value;

  validate(cfg);
  return cfg;
}

ResultDocument run(const RunConfig& config) {
  switch (config.command) {
    case Command::curve: return run_curve(config);
    case Command::maxfid: return run_maxfid(config);
    case Command::delta: return run_delta(config);
    case Command::discrim: return run_discrim(config);
    case Command::bound: return run_bound(config);
    case Command::verify_proof: return run_verify_proof(config);
    case Command::regions: return run_regions(config);
    case Command::table1: return run_table1(config);
    case Command::prior: return run_prior(config);
    case Command::crossing: return run_crossing(config);
  }
  throw domain_error("unknown command");
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  RunConfig cfg;
  try {
    cfg = parse_args(args);
  } catch (const help_requested& h) {
    out << h.text;
    return 0;
  } catch (const usage_error& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }
  try {
    const ResultDocument doc = run(cfg);
    if (cfg.output.empty() || cfg.output == "-") {
      if (cfg.format == "csv")
        write_csv(doc, out);
      else
        write_json(doc, out);
      out.flush();
    } else {
      write_document(doc, parse_format(cfg.format), cfg.output);
    }
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace asl::cli
