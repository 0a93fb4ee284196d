// Copyright 2026 The UPB Dimer Authors
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

#include "upb/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "upb/acceptance.hpp"
#include "upb/analytic.hpp"
#include "upb/config.hpp"
#include "upb/experiments.hpp"
#include "upb/lindblad.hpp"
#include "upb/scan.hpp"

namespace upb::cli {

namespace ex = upb::experiments;

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names{
      "locus",      "phase-scan", "g2tau",       "landscape", "pulsed", "disorder",
      "compensate", "overshoot",  "single-site", "convert",   "verify"};
  return names;
}

namespace {

// Subcommand defaults are in units of gamma and scaled by --gamma.
struct Context {
  RunConfig cfg;
  double gamma = 1.0;

  double hopping(double fallback) const { return cfg.hopping.value_or(fallback * gamma); }
  double amplitude(double fallback) const { return cfg.amplitude.value_or(fallback * gamma); }
  int cutoff() const { return cfg.cutoff.value_or(lindblad::kDefaultCutoff); }

  std::vector<double> grid(const std::string& name, std::vector<double> fallback) const {
    const auto it = cfg.grids.find(name);
    if (it != cfg.grids.end()) return it->second.values();
    return fallback;
  }

  std::string option(const std::string& section, const std::string& key,
                     const std::string& flag_value, const std::string& fallback) const {
    if (!flag_value.empty()) return flag_value;
    return cfg.option(section, key).value_or(fallback);
  }

  double number(const std::string& section, const std::string& key, double fallback) const {
    const auto v = cfg.option(section, key);
    if (!v) return fallback;
    try {
      std::size_t used = 0;
      const double x = std::stod(*v, &used);
      if (used == v->size()) return x;
    } catch (const std::exception&) {
    }
    throw ConfigError("invalid number '" + *v + "' for " + section + "." + key);
  }

  // Dimer and drive with U and Delta defaulting to the quadrature locus.
  std::pair<DimerParams, DriveSpec> resolve(double default_hopping, double default_amplitude,
                                            bool pulsed = false) const {
    DimerParams p;
    p.decay = gamma;
    p.hopping = hopping(default_hopping);
    if (!cfg.kerr || !cfg.detuning) {
      const auto loc = analytic::locus_quadrature(p.hopping, p.decay);
      p.kerr = loc.kerr;
      p.detuning = loc.detuning;
    }
    if (cfg.kerr) p.kerr = *cfg.kerr;
    if (cfg.detuning) p.detuning = *cfg.detuning;
    p.cross_kerr = cfg.cross_kerr.value_or(0.0);
    p.detuning_mismatch = cfg.detuning_mismatch.value_or(0.0);
    p.decay_mismatch = cfg.decay_mismatch.value_or(0.0);
    p.kerr_mismatch = cfg.kerr_mismatch.value_or(0.0);
    p.validate();

    DriveSpec d;
    d.amplitude = amplitude(default_amplitude);
    d.phase = deg_to_rad(cfg.phase_deg.value_or(90.0));
    d.ratio = cfg.ratio.value_or(1.0);
    if (pulsed) d.pulse_width = cfg.pulse_width.value_or(10.0 / gamma);
    d.validate();
    return {p, d};
  }
};

void record_parameters(ScanResult& scan, const std::string& name, const DimerParams& p,
                       const DriveSpec& d, std::optional<int> cutoff) {
  std::vector<std::pair<std::string, std::string>> head{
      {"subcommand", name},
      {"J", format_value(p.hopping)},
      {"U", format_value(p.kerr)},
      {"Delta", format_value(p.detuning)},
      {"gamma", format_value(p.decay)},
      {"Ux", format_value(p.cross_kerr)},
      {"delta_Delta", format_value(p.detuning_mismatch)},
      {"delta_gamma", format_value(p.decay_mismatch)},
      {"delta_U", format_value(p.kerr_mismatch)},
      {"F1", format_value(d.amplitude)},
      {"phi_deg", format_value(rad_to_deg(d.phase))},
      {"ratio", format_value(d.ratio)},
      {"sigma", d.pulse_width ? format_value(*d.pulse_width) : std::string("cw")},
  };
  if (cutoff) head.emplace_back("Ncut", std::to_string(*cutoff));
  scan.metadata.insert(scan.metadata.begin(), head.begin(), head.end());
}

void record_name(ScanResult& scan, const std::string& name, double gamma) {
  scan.metadata.insert(scan.metadata.begin(), {{"subcommand", name}, {"unit_gamma", format_value(gamma)}});
}

std::vector<double> scaled(std::vector<double> v, double s) {
  for (double& x : v) x *= s;
  return v;
}

SitePair parse_sites(const std::string& s) {
  auto site = [&](char c) {
    if (c == '1') return Site::one;
    if (c == '2') return Site::two;
    throw std::invalid_argument("site pair must be two digits from {1, 2}, got " + s);
  };
  if (s.size() != 2) throw std::invalid_argument("site pair must look like 22 or 12");
  return {site(s[0]), site(s[1])};
}

std::optional<double> first_crossing(const std::vector<double>& x,
                                     const std::vector<double>& y, double level) {
  for (std::size_t i = 1; i < y.size(); ++i) {
    if ((y[i - 1] - level) * (y[i] - level) <= 0.0 && y[i] != y[i - 1]) {
      return x[i - 1] + (level - y[i - 1]) * (x[i] - x[i - 1]) / (y[i] - y[i - 1]);
    }
  }
  return std::nullopt;
}

// Subcommands --------------------------------------------------------------

ScanResult run_locus(const Context& c) {
  std::vector<double> hoppings =
      c.cfg.hopping ? std::vector<double>{*c.cfg.hopping}
                    : c.grid("J", scaled(ex::kLocusTableHoppings, c.gamma));
  ScanResult scan = ex::locus_table(hoppings, c.gamma);
  record_name(scan, "locus", c.gamma);
  return scan;
}

ScanResult run_phase_scan(const Context& c) {
  const double j = c.hopping(0.4);
  std::vector<double> degrees = c.grid("phi", ex::linspace(1.0, 179.0, 179));
  std::vector<double> phases;
  for (double deg : degrees) phases.push_back(deg_to_rad(deg));
  const std::vector<double> hoppings{j};
  ScanResult scan = ex::phase_locus_scan(hoppings, phases, c.gamma);
  record_name(scan, "phase-scan", c.gamma);
  try {
    const auto range = analytic::phase_range(j, c.gamma);
    scan.add_metadata("phase_range_lo_deg", rad_to_deg(range.lo));
    scan.add_metadata("phase_range_hi_deg", rad_to_deg(range.hi));
  } catch (const Error&) {
    scan.add_metadata("phase_range_lo_deg", kUndefinedMarker);
    scan.add_metadata("phase_range_hi_deg", kUndefinedMarker);
  }
  if (const auto m = ex::minimum_kerr_over_phase(j, c.gamma)) {
    scan.add_metadata("phi_star_deg", rad_to_deg(m->phase));
    scan.add_metadata("U_star", m->kerr);
  }
  return scan;
}

ScanResult run_g2tau(const Context& c, const std::string& method_flag,
                     const std::string& sites_flag) {
  const auto [p, d] = c.resolve(0.4, 0.01);
  const std::string method = c.option("g2tau", "method", method_flag, "both");
  if (method != "analytic" && method != "numeric" && method != "both") {
    throw std::invalid_argument("--method must be analytic, numeric or both");
  }
  const SitePair sites = parse_sites(c.option("g2tau", "sites", sites_flag, "22"));
  const std::vector<double> tau = c.grid("tau", lindblad::default_tau_grid(10.0 / c.gamma, 400));

  ScanResult scan;
  scan.axes.push_back({"tau", tau});
  std::optional<CorrelatorSeries> analytic_series, numeric_series;
  if (method != "numeric") {
    analytic_series = analytic::qrt_g2_tau(p, d, sites, tau);
    auto& col = scan.add_column("g2_analytic", true);
    if (analytic_series->defined) {
      for (std::size_t i = 0; i < tau.size(); ++i) col.values[i] = analytic_series->values[i];
    }
  }
  if (method != "analytic") {
    numeric_series = lindblad::g2_tau_numeric(p, d, sites, tau, c.cutoff());
    auto& col = scan.add_column("g2_numeric", true);
    if (numeric_series->defined) {
      for (std::size_t i = 0; i < tau.size(); ++i) col.values[i] = numeric_series->values[i];
    }
  }
  record_parameters(scan, "g2tau", p, d, c.cutoff());
  scan.add_metadata("sites", std::to_string(site_number(sites.measured)) +
                                 std::to_string(site_number(sites.detected)));
  scan.add_metadata("method", method);
  if (analytic_series && numeric_series && analytic_series->defined && numeric_series->defined) {
    double worst = 0.0;
    for (std::size_t i = 0; i < tau.size(); ++i) {
      worst = std::max(worst, std::abs(analytic_series->values[i] - numeric_series->values[i]));
    }
    scan.add_metadata("max_abs_difference", worst);
  }
  for (const auto* s : {&analytic_series, &numeric_series}) {
    if (*s && (*s)->defined) {
      scan.add_metadata("half_crossing_tau_" + to_string((*s)->method),
                        format_value(first_crossing(tau, (*s)->values, 0.5)));
    }
  }
  return scan;
}

ScanResult run_landscape(const Context& c) {
  auto [p, d] = c.resolve(0.4, 0.01);
  const auto amplitudes = c.grid("F1", scaled(ex::linspace(0.01, 0.25, 50), c.gamma));
  const auto detunings = c.grid("Delta", scaled(ex::linspace(-0.5, 0.5, 50), c.gamma));
  ex::LandscapeOptions opts;
  opts.cutoff = c.cutoff();
  ScanResult scan = ex::landscape_scan(amplitudes, detunings, p, d, opts);
  record_parameters(scan, "landscape", p, d, c.cutoff());
  for (auto& [key, value] : scan.metadata) {
    if (key == "F1" || key == "Delta") value = "axis";
  }
  return scan;
}

ScanResult run_pulsed(const Context& c) {
  const auto [p, d] = c.resolve(0.4, 0.05, true);
  const double sigma = *d.pulse_width;
  const auto t = c.grid("t", ex::linspace(-6.0 * sigma, 6.0 * sigma, 481));
  const auto run = lindblad::time_evolve_pulsed(p, d, t, c.cutoff());

  ScanResult scan;
  scan.axes.push_back({"t", t});
  auto& n1 = scan.add_column("n1", true);
  auto& n2 = scan.add_column("n2", true);
  auto& g2 = scan.add_column("g2_22_tau", true);
  for (std::size_t i = 0; i < t.size(); ++i) {
    n1.values[i] = run.n1[i];
    n2.values[i] = run.n2[i];
    const auto it = std::find(run.tau.begin(), run.tau.end(), t[i]);
    if (it != run.tau.end()) g2.values[i] = run.g2_22_tau[static_cast<std::size_t>(it - run.tau.begin())];
  }
  record_parameters(scan, "pulsed", p, d, c.cutoff());
  scan.add_metadata("n1_at_peak", run.n1_at_peak);
  scan.add_metadata("n2_at_peak", run.n2_at_peak);
  scan.add_metadata("n2_max", *std::max_element(run.n2.begin(), run.n2.end()));
  scan.add_metadata("g2_22_at_peak", format_value(run.g2_22_at_peak));
  return scan;
}

ex::OperatingPoint operating_point(const Context& c) {
  ex::OperatingPoint op = ex::disorder_nominal();
  const double g = c.gamma;
  op.params.decay = g;
  op.params.hopping = c.cfg.hopping.value_or(op.params.hopping * g);
  op.params.kerr = c.cfg.kerr.value_or(op.params.kerr * g);
  op.params.detuning = c.cfg.detuning.value_or(op.params.detuning * g);
  op.params.cross_kerr = c.cfg.cross_kerr.value_or(0.0);
  op.drive.amplitude = c.cfg.amplitude.value_or(op.drive.amplitude * g);
  op.drive.phase = deg_to_rad(c.cfg.phase_deg.value_or(90.0));
  op.drive.ratio = c.cfg.ratio.value_or(1.0);
  op.params.validate();
  op.drive.validate();
  return op;
}

ScanResult run_disorder(const Context& c, const std::string& axis_flag,
                        std::optional<double> threshold_flag) {
  const ex::OperatingPoint op = operating_point(c);
  const auto axis = ex::parse_disorder_axis(c.option("disorder", "axis", axis_flag, "delta_Delta"));
  const double threshold = threshold_flag.value_or(c.number("disorder", "threshold", 0.1));
  const auto grid = c.grid("mismatch", scaled(ex::linspace(-0.1, 0.1, 201), c.gamma));
  auto [scan, report] = ex::disorder_scan(axis, grid, threshold, op);
  record_parameters(scan, "disorder", op.params, op.drive, std::nullopt);
  return std::move(scan);
}

ScanResult run_compensate(const Context& c) {
  const ex::OperatingPoint op = operating_point(c);
  const auto grid = c.grid("mismatch", scaled(ex::linspace(-0.4, 0.4, 81), c.gamma));
  ScanResult scan = ex::compensation_scan(grid, op);
  record_parameters(scan, "compensate", op.params, op.drive, std::nullopt);
  for (auto mode : {ex::CompensationMode::phase_only, ex::CompensationMode::phase_and_ratio}) {
    const auto tol = ex::compensation_tolerance(mode, 0.1, op);
    const std::string m = ex::to_string(mode);
    scan.add_metadata(m + "_positive_edge", format_value(tol.positive_edge));
    scan.add_metadata(m + "_negative_edge", format_value(tol.negative_edge));
    scan.add_metadata(m + "_half_width", format_value(tol.half_width));
    scan.add_metadata(m + "_phase_slope_deg_per_0.1gamma", ex::compensation_phase_slope(mode, op));
  }
  return scan;
}

ScanResult run_overshoot(const Context& c) {
  std::vector<double> hoppings =
      c.cfg.hopping ? std::vector<double>{*c.cfg.hopping}
                    : c.grid("J", scaled(ex::kOvershootTableHoppings, c.gamma));
  ScanResult scan = ex::overshoot_scan(hoppings, c.gamma);
  record_name(scan, "overshoot", c.gamma);
  return scan;
}

ScanResult run_single_site(const Context& c) {
  const auto hoppings = c.grid("J", scaled(ex::linspace(0.5, 2.0, 151), c.gamma));
  ScanResult scan = ex::single_site_comparison(hoppings, c.gamma);
  record_name(scan, "single-site", c.gamma);
  return scan;
}

ScanResult run_convert(const Context& c, std::optional<double> q_flag,
                       std::optional<double> wavelength_flag) {
  const double q = q_flag.value_or(c.number("convert", "Q", 1e4));
  const double wavelength = wavelength_flag.value_or(c.number("convert", "wavelength", 810.0));
  const auto u = ex::unit_convert(q, wavelength);
  ScanResult scan;
  scan.axes.push_back({"Q", {q}});
  scan.axes.push_back({"wavelength_nm", {wavelength}});
  scan.add_column("gamma_rad_per_s").values[0] = u.gamma_rad_per_s;
  scan.add_column("gamma_GHz", true).values[0] = u.gamma_GHz;
  scan.add_column("lifetime_ps", true).values[0] = u.lifetime_ps;
  scan.metadata.emplace_back("subcommand", "convert");
  return scan;
}

// Same content as the CSV, for outputs named *.json. Undefined entries
// become null.
void write_json(std::ostream& out, const ScanResult& scan) {
  scan.validate();
  nlohmann::ordered_json doc;
  doc["metadata"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : scan.metadata) doc["metadata"][k] = v;
  doc["axes"] = nlohmann::ordered_json::object();
  for (const auto& a : scan.axes) doc["axes"][a.name] = a.values;
  doc["values"] = nlohmann::ordered_json::object();
  for (const auto& c : scan.columns) {
    auto& arr = doc["values"][c.name] = nlohmann::ordered_json::array();
    for (const auto& v : c.values) arr.push_back(v ? nlohmann::ordered_json(*v) : nullptr);
  }
  out << doc.dump(2) << '\n';
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::vector<int> parse_criteria(const std::string& list) {
  std::vector<int> ids;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    ids.push_back(std::stoi(item));
  }
  return ids;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (args.empty()) {
    err << "usage: upb <subcommand> [options]; subcommands:";
    for (const auto& s : subcommands()) err << ' ' << s;
    err << '\n';
    return kExitUnknownCommand;
  }
  const auto first_positional = std::find_if(
      args.begin(), args.end(), [](const std::string& a) { return a.empty() || a[0] != '-'; });
  if (first_positional != args.end() && (first_positional == args.begin()) &&
      std::find(subcommands().begin(), subcommands().end(), *first_positional) ==
          subcommands().end()) {
    err << "upb: unknown subcommand '" << *first_positional << "'\n";
    return kExitUnknownCommand;
  }

  CLI::App app{"Unconventional photon blockade in a bilaterally driven Kerr dimer", "upb"};
  app.fallthrough();
  app.require_subcommand(1);

  RunConfig flags;
  std::optional<std::string> config_path;
  app.add_option("--J", flags.hopping, "Hopping J");
  app.add_option("--U", flags.kerr, "Kerr nonlinearity U");
  app.add_option("--Delta", flags.detuning, "Cavity-laser detuning");
  app.add_option("--F1", flags.amplitude, "Site-1 drive amplitude");
  app.add_option("--phi", flags.phase_deg, "Drive phase in degrees");
  app.add_option("--ratio", flags.ratio, "Drive amplitude ratio |F2|/|F1|");
  app.add_option("--sigma", flags.pulse_width, "Gaussian pulse width");
  app.add_option("--Ncut", flags.cutoff, "Fock cutoff per site")->check(CLI::Range(2, 30));
  app.add_option("--gamma", flags.decay, "Decay rate, the unit scale (default 1)");
  app.add_option("--out", flags.output_path, "Output CSV path ('-' for stdout)");
  app.add_option("--config", config_path, "INI configuration file");

  std::string method, sites, axis, criteria;
  std::optional<double> threshold, quality, wavelength;
  std::map<std::string, CLI::App*> sub;
  const std::map<std::string, std::string> about{
      {"locus", "Optimal (U, Delta) for quadrature drive versus J"},
      {"phase-scan", "Optimal (U, Delta) versus drive phase at fixed J"},
      {"g2tau", "Delayed g2(tau), closed form and/or master equation"},
      {"landscape", "Steady-state g2 and occupations over (F1, Delta)"},
      {"pulsed", "Gaussian-pulse evolution of occupations and g2_22"},
      {"disorder", "g2_22(0) versus one site mismatch, with tolerance"},
      {"compensate", "Drive retuning that cancels a detuning mismatch"},
      {"overshoot", "Maximum of g2_22(tau) along the locus"},
      {"single-site", "Single-site versus bilateral optimal Kerr"},
      {"convert", "Decay rate from quality factor and wavelength"},
      {"verify", "Run the acceptance checks and print a pass/fail table"}};
  for (const auto& name : subcommands()) sub[name] = app.add_subcommand(name, about.at(name));
  sub["g2tau"]->add_option("--method", method, "analytic, numeric or both");
  sub["g2tau"]->add_option("--sites", sites, "Site pair jk, e.g. 22");
  sub["disorder"]->add_option("--axis", axis, "delta_Delta, delta_gamma or delta_U");
  sub["disorder"]->add_option("--threshold", threshold, "g2_22(0) tolerance threshold");
  sub["convert"]->add_option("--Q", quality, "Quality factor");
  sub["convert"]->add_option("--wavelength", wavelength, "Wavelength in nm");
  sub["verify"]->add_option("--criteria", criteria, "Comma-separated criterion numbers");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ExtrasError& e) {
    err << "upb: " << e.what() << '\n';
    return kExitUnknownCommand;
  } catch (const CLI::RequiredError& e) {
    err << "upb: " << e.what() << '\n';
    return kExitUnknownCommand;
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  Context ctx;
  try {
    if (config_path) ctx.cfg = load_config(*config_path);
    ctx.cfg.merge(flags);
  } catch (const ConfigError& e) {
    err << "upb: " << e.what() << '\n';
    return kExitBadConfig;
  }
  ctx.gamma = ctx.cfg.decay.value_or(1.0);
  if (!(ctx.gamma > 0.0)) {
    err << "upb: --gamma must be positive\n";
    return kExitBadConfig;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  const std::string path = ctx.cfg.output_path.value_or("-");
  std::ofstream file;
  if (path != "-") {
    file.open(path, std::ios::binary);
    if (!file) {
      err << "upb: cannot open output file " << path << '\n';
      return kExitBadOutput;
    }
  }
  std::ostream& sink = path == "-" ? out : file;

  try {
    if (name == "verify") {
      const auto results = acceptance::run_acceptance(parse_criteria(criteria), &err);
      acceptance::print_table(sink, results);
      return acceptance::all_passed(results) ? kExitOk : kExitFailure;
    }
    ScanResult scan;
    if (name == "locus") scan = run_locus(ctx);
    else if (name == "phase-scan") scan = run_phase_scan(ctx);
    else if (name == "g2tau") scan = run_g2tau(ctx, method, sites);
    else if (name == "landscape") scan = run_landscape(ctx);
    else if (name == "pulsed") scan = run_pulsed(ctx);
    else if (name == "disorder") scan = run_disorder(ctx, axis, threshold);
    else if (name == "compensate") scan = run_compensate(ctx);
    else if (name == "overshoot") scan = run_overshoot(ctx);
    else if (name == "single-site") scan = run_single_site(ctx);
    else if (name == "convert") scan = run_convert(ctx, quality, wavelength);
    if (ends_with(path, ".json")) write_json(sink, scan);
    else write_csv(sink, scan);
    sink.flush();
    if (!sink) {
      err << "upb: failed writing output " << path << '\n';
      return kExitBadOutput;
    }
  } catch (const ConfigError& e) {
    err << "upb " << name << ": " << e.what() << '\n';
    return kExitBadConfig;
  } catch (const std::exception& e) {
    err << "upb " << name << ": " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace upb::cli
