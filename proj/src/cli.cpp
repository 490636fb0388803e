////////////////////////////////////////////////////////////////////////////////
//                                                                            //
//  This file is part of rdce (Robin dynamical Casimir effect toolkit).       //
//                                                                            //
//  Copyright 2026 rdce developers                                            //
//                                                                            //
//  Licensed under the Apache License, Version 2.0 (the "License");           //
//  you may not use this file except in compliance with the License.          //
//  You may obtain a copy of the License at                                   //
//                                                                            //
//      http://www.apache.org/licenses/LICENSE-2.0                            //
//                                                                            //
//  Unless required by applicable law or agreed to in writing, software       //
//  distributed under the License is distributed on an "AS IS" BASIS,         //
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.  //
//  See the License for the specific language governing permissions and       //
//  limitations under the License.                                            //
//                                                                            //
////////////////////////////////////////////////////////////////////////////////

#include "rdce/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "rdce/kernels.hpp"
#include "rdce/quadrature.hpp"
#include "rdce/rates.hpp"
#include "rdce/spectra.hpp"

namespace rdce::cli {

namespace {

std::string fmt(double v, const char* spec) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[48];
  std::snprintf(buf, sizeof(buf), spec, v);
  return buf;
}

void meta(std::ostream& os, const std::string& key, const std::string& value) {
  os << "# " << key << " = " << value << "\n";
}

std::string grid_spec_string(const GridSpec& g) {
  return format_double_exact(g.start) + ":" + format_double_exact(g.stop) +
         ":" + std::to_string(g.count);
}

void write_param_metadata(std::ostream& os, const PhysicalParams& p) {
  meta(os, "gamma0", format_double_exact(p.gamma0));
  meta(os, "epsilon0", format_double_exact(p.epsilon0));
  meta(os, "omega0", format_double_exact(p.omega0));
  meta(os, "tau", format_double_exact(p.tau));
  meta(os, "temperature", format_double_exact(p.temperature));
}

void write_scale_metadata(std::ostream& os, const PhysicalParams& p) {
  const UnitsNote note = scaled_units_note(p, p.omega0 > 0.0);
  meta(os, "spectrum_scale", format_double_exact(note.spectrum_scale));
  meta(os, "rate_scale", format_double_exact(note.rate_scale));
  meta(os, "units", note.unit_system);
}

/// Opens `path` for writing; returns false (leaving a diagnostic) on failure.
bool open_output(const std::string& path, std::ofstream& file,
                 std::ostream& diag) {
  file.open(path, std::ios::binary);
  if (!file) {
    diag << "rdce: cannot open output file: " << path << "\n";
    return false;
  }
  return true;
}

void write_spectrum_rows(std::ostream& os, const SpectralResult& r,
                         double display_scale, bool with_temperature) {
  for (Eigen::Index i = 0; i < r.grid.size(); ++i) {
    const double w = r.grid[i];
    const double ratio =
        r.params.omega0 > 0.0
            ? w / r.params.omega0
            : std::numeric_limits<double>::quiet_NaN();
    os << format_double(w) << ',' << format_double(ratio) << ','
       << format_double(display_scale * r.vacuum[i]) << ','
       << format_double(display_scale * r.thermal[i]) << ','
       << format_double(display_scale * r.total[i]);
    if (with_temperature)
      os << ',' << format_double(r.params.temperature);
    os << '\n';
  }
}

}  // namespace

std::string format_double(double v) { return fmt(v, "%.12g"); }
std::string format_double_exact(double v) { return fmt(v, "%.17g"); }

GridSpec parse_grid_spec(const std::string& text) {
  GridSpec g;
  const auto c1 = text.find(':');
  const auto c2 = text.find(':', c1 == std::string::npos ? c1 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos)
    throw std::invalid_argument("grid spec must be start:stop:count");
  std::size_t used = 0;
  try {
    const std::string s0 = text.substr(0, c1);
    const std::string s1 = text.substr(c1 + 1, c2 - c1 - 1);
    const std::string s2 = text.substr(c2 + 1);
    g.start = std::stod(s0, &used);
    if (used != s0.size()) throw std::invalid_argument("start");
    g.stop = std::stod(s1, &used);
    if (used != s1.size()) throw std::invalid_argument("stop");
    g.count = std::stoi(s2, &used);
    if (used != s2.size()) throw std::invalid_argument("count");
  } catch (const std::exception&) {
    throw std::invalid_argument("grid spec must be start:stop:count with "
                                "numeric fields: " + text);
  }
  if (!(g.start < g.stop))
    throw std::invalid_argument("grid spec: need start < stop");
  if (g.count < 2) throw std::invalid_argument("grid spec: need count >= 2");
  return g;
}

Eigen::ArrayXd grid_points(const GridSpec& spec) {
  return Eigen::ArrayXd::LinSpaced(spec.count, spec.start, spec.stop);
}

// ---------------------------------------------------------------------------
// spectrum

int run_spectrum(const SpectrumOptions& opt, std::ostream& diag) {
  const ValidationReport rep = validate_params(opt.params);
  if (!rep.usable()) {
    diag << "rdce: invalid parameters: " << rep.summary() << "\n";
    return kExitInvalidInput;
  }
  if (!(opt.rel_tol > 0.0) || !(opt.rel_tol < 1.0)) {
    diag << "rdce: --rel-tol must be in (0, 1)\n";
    return kExitInvalidInput;
  }
  if (!rep.ok()) diag << "rdce: parameter warnings: " << rep.summary() << "\n";

  std::optional<FrequencyGrid> grid;
  try {
    grid.emplace(grid_points(opt.grid));
  } catch (const std::invalid_argument& e) {
    diag << "rdce: invalid grid: " << e.what() << "\n";
    return kExitInvalidInput;
  }

  std::optional<PerturbationProfile> profile;
  if (!opt.profile_file.empty()) {
    if (opt.method != SpectrumMethod::GeneralQuadrature) {
      diag << "rdce: --profile-file requires --method general (closed forms "
              "assume the damped cosine drive)\n";
      return kExitInvalidInput;
    }
    try {
      profile = load_profile_file(opt.profile_file);
    } catch (const std::exception& e) {
      diag << "rdce: " << e.what() << "\n";
      return kExitInvalidInput;
    }
  }

  QuadratureConfig cfg = default_quadrature_config(opt.params);
  cfg.rel_tol = opt.rel_tol;

  std::optional<SpectralResult> result;
  try {
    if (opt.method == SpectrumMethod::ClosedForm)
      result = spectrum_total(*grid, opt.params, opt.convention);
    else if (profile)
      result = spectrum_total(*grid, opt.params, opt.convention, *profile, cfg);
    else
      result = spectrum_total(*grid, opt.params, opt.convention,
                              SpectrumMethod::GeneralQuadrature, cfg);
  } catch (const QuadratureError& e) {
    diag << "rdce: " << e.what() << "\n";
    return kExitNoConvergence;
  }

  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!opt.out.empty()) {
    if (!open_output(opt.out, file, diag)) return kExitIoFailure;
    os = &file;
  }

  meta(*os, "tool", "rdce spectrum");
  meta(*os, "version", kVersion);
  write_param_metadata(*os, opt.params);
  meta(*os, "convention", to_string(opt.convention));
  meta(*os, "method", to_string(opt.method));
  if (!opt.profile_file.empty()) meta(*os, "profile_file", opt.profile_file);
  meta(*os, "grid", grid_spec_string(opt.grid));
  meta(*os, "rel_tol", format_double_exact(opt.rel_tol));
  meta(*os, "validation", rep.summary());
  write_scale_metadata(*os, opt.params);
  *os << "omega,omega_over_omega0,vac_scaled,thermal_scaled,total_scaled\n";
  write_spectrum_rows(*os, *result, 1.0, false);

  os->flush();
  if (os->fail()) {
    diag << "rdce: write failure\n";
    return kExitIoFailure;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// rate

namespace {

int write_rate_blocks(std::ostream& os, const PhysicalParams& base,
                      const Eigen::ArrayXd& sweep,
                      const std::vector<double>& temperatures,
                      ThermalConvention conv, double rel_tol,
                      std::ostream& diag) {
  os << "omega0,xi,rate_vac,rate_thermal,rate_total,temperature\n";
  for (double T : temperatures) {
    for (Eigen::Index i = 0; i < sweep.size(); ++i) {
      PhysicalParams p = base;
      p.omega0 = sweep[i];
      p.temperature = T;
      QuadratureConfig cfg = default_quadrature_config(p);
      cfg.rel_tol = rel_tol;
      RateResult r;
      try {
        r = rate_total(p, conv, cfg);
      } catch (const QuadratureError& e) {
        diag << "rdce: omega0=" << format_double(p.omega0)
             << " T=" << format_double(T) << ": " << e.what() << "\n";
        return kExitNoConvergence;
      }
      os << format_double(p.omega0) << ',' << format_double(p.xi()) << ','
         << format_double(r.vacuum_rate) << ','
         << format_double(r.thermal_rate) << ','
         << format_double(r.total_rate) << ',' << format_double(T) << '\n';
    }
  }
  return kExitOk;
}

}  // namespace

int run_rate(const RateOptions& opt, std::ostream& diag) {
  PhysicalParams base = opt.params;
  base.omega0 = opt.sweep.stop;  // representative value for base validation
  const ValidationReport rep = validate_params(base);
  if (!rep.usable()) {
    diag << "rdce: invalid parameters: " << rep.summary() << "\n";
    return kExitInvalidInput;
  }
  if (!(opt.rel_tol > 0.0) || !(opt.rel_tol < 1.0)) {
    diag << "rdce: --rel-tol must be in (0, 1)\n";
    return kExitInvalidInput;
  }
  if (!(opt.sweep.start >= 0.0)) {
    diag << "rdce: omega0 sweep must start at >= 0\n";
    return kExitInvalidInput;
  }
  if (opt.temperatures.empty()) {
    diag << "rdce: need at least one temperature\n";
    return kExitInvalidInput;
  }
  for (double T : opt.temperatures) {
    if (!std::isfinite(T) || T < 0.0) {
      diag << "rdce: temperatures must be finite and >= 0\n";
      return kExitInvalidInput;
    }
  }

  Eigen::ArrayXd sweep;
  try {
    GridSpec checked = opt.sweep;  // reuse the grid validation rules
    if (!(checked.start < checked.stop) || checked.count < 2)
      throw std::invalid_argument("need start < stop and count >= 2");
    sweep = grid_points(checked);
  } catch (const std::invalid_argument& e) {
    diag << "rdce: invalid sweep: " << e.what() << "\n";
    return kExitInvalidInput;
  }

  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!opt.out.empty()) {
    if (!open_output(opt.out, file, diag)) return kExitIoFailure;
    os = &file;
  }

  meta(*os, "tool", "rdce rate");
  meta(*os, "version", kVersion);
  meta(*os, "gamma0", format_double_exact(opt.params.gamma0));
  meta(*os, "epsilon0", format_double_exact(opt.params.epsilon0));
  meta(*os, "tau", format_double_exact(opt.params.tau));
  meta(*os, "convention", to_string(opt.convention));
  meta(*os, "omega0_sweep", grid_spec_string(opt.sweep));
  std::string temps;
  for (double T : opt.temperatures) {
    if (!temps.empty()) temps += ",";
    temps += format_double_exact(T);
  }
  meta(*os, "temperatures", temps);
  meta(*os, "rel_tol", format_double_exact(opt.rel_tol));
  meta(*os, "rate_scale", format_double_exact(
      scaled_units_note(opt.params, false).rate_scale));

  const int rc = write_rate_blocks(*os, opt.params, sweep, opt.temperatures,
                                   opt.convention, opt.rel_tol, diag);
  if (rc != kExitOk) return rc;

  os->flush();
  if (os->fail()) {
    diag << "rdce: write failure\n";
    return kExitIoFailure;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// figures

namespace {

const double kFigureTemperatures[] = {0.0, 0.02, 0.05, 0.07, 0.1};

int write_figure_spectrum(const std::string& path, double gamma0,
                          double display_scale, ThermalConvention conv,
                          std::ostream& diag) {
  PhysicalParams p;
  p.gamma0 = gamma0;
  p.epsilon0 = 0.01;
  p.omega0 = 1.0;
  p.tau = 100.0;

  std::ofstream file;
  if (!open_output(path, file, diag)) return kExitIoFailure;

  meta(file, "tool", "rdce figures");
  meta(file, "version", kVersion);
  write_param_metadata(file, p);
  meta(file, "convention", to_string(conv));
  meta(file, "method", "closed");
  meta(file, "grid", "0:1.5:301");
  meta(file, "display_scale", format_double_exact(display_scale));
  std::string temps;
  for (double T : kFigureTemperatures) {
    if (!temps.empty()) temps += ",";
    temps += format_double_exact(T);
  }
  meta(file, "temperatures", temps);
  file << "omega,omega_over_omega0,vac_scaled,thermal_scaled,total_scaled,"
          "temperature\n";

  const FrequencyGrid grid = FrequencyGrid::linspace(0.0, 1.5, 301);
  for (double T : kFigureTemperatures) {
    PhysicalParams pt = p;
    pt.temperature = T;
    const SpectralResult r = spectrum_total(grid, pt, conv);
    write_spectrum_rows(file, r, display_scale, true);
  }
  file.flush();
  if (file.fail()) {
    diag << "rdce: write failure: " << path << "\n";
    return kExitIoFailure;
  }
  return kExitOk;
}

int write_figure_rate(const std::string& path, ThermalConvention conv,
                      double rel_tol, std::ostream& diag) {
  PhysicalParams p;
  p.gamma0 = 1.0;
  p.epsilon0 = 0.01;
  p.tau = 100.0;

  std::ofstream file;
  if (!open_output(path, file, diag)) return kExitIoFailure;

  meta(file, "tool", "rdce figures");
  meta(file, "version", kVersion);
  meta(file, "gamma0", format_double_exact(p.gamma0));
  meta(file, "epsilon0", format_double_exact(p.epsilon0));
  meta(file, "tau", format_double_exact(p.tau));
  meta(file, "convention", to_string(conv));
  meta(file, "omega0_sweep", "0.1:30:300");
  meta(file, "temperatures",
       format_double_exact(0.0) + "," + format_double_exact(0.1));
  meta(file, "rel_tol", format_double_exact(rel_tol));

  const Eigen::ArrayXd sweep = Eigen::ArrayXd::LinSpaced(300, 0.1, 30.0);
  const std::vector<double> temps{0.0, 0.1};
  const int rc = write_rate_blocks(file, p, sweep, temps, conv, rel_tol, diag);
  if (rc != kExitOk) return rc;
  file.flush();
  if (file.fail()) {
    diag << "rdce: write failure: " << path << "\n";
    return kExitIoFailure;
  }
  return kExitOk;
}

constexpr const char* kPlotScript = R"PY(#!/usr/bin/env python3
"""Regenerate the rdce figure set from the CSV files next to this script.

Curve styles follow the temperature ladder: solid (T=0), long-dashed,
short-dashed, dotted and dash-dotted (T=0.1).
"""
import csv
import os

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt

HERE = os.path.dirname(os.path.abspath(__file__))
STYLES = [
    (0.00, "solid"),
    (0.02, (0, (8, 3))),
    (0.05, (0, (4, 2))),
    (0.07, "dotted"),
    (0.10, "dashdot"),
]


def style_for(T):
    for value, style in STYLES:
        if abs(T - value) < 1e-12:
            return style
    return "solid"


def read_blocks(name, xcol, ycol):
    blocks = {}
    with open(os.path.join(HERE, name)) as f:
        rows = csv.DictReader(line for line in f if not line.startswith("#"))
        for row in rows:
            T = float(row["temperature"])
            x, y = blocks.setdefault(T, ([], []))
            x.append(float(row[xcol]))
            y.append(float(row[ycol]))
    return blocks


def plot_spectrum(csv_name, png_name, ylabel):
    fig, ax = plt.subplots(figsize=(6, 4.2))
    for T, (x, y) in sorted(read_blocks(csv_name, "omega_over_omega0",
                                        "total_scaled").items()):
        ax.plot(x, y, linestyle=style_for(T), color="k", lw=1.2,
                label=f"T = {T:g}")
    ax.set_xlabel(r"$\omega/\omega_0$")
    ax.set_ylabel(ylabel)
    ax.set_xlim(0.0, 1.5)
    ax.set_ylim(bottom=0.0)
    ax.legend(frameon=False)
    fig.tight_layout()
    fig.savefig(os.path.join(HERE, png_name), dpi=200)
    plt.close(fig)


def plot_rate():
    fig, ax = plt.subplots(figsize=(6, 4.2))
    for T, (x, y) in sorted(read_blocks("fig3.csv", "omega0",
                                        "rate_total").items()):
        style = "solid" if T == 0 else "dashed"
        ax.plot(x, y, linestyle=style, color="k", lw=1.2, label=f"T = {T:g}")
    ax.set_xlabel(r"$\omega_0$")
    ax.set_ylabel(r"scaled rate $(2\pi/\epsilon_0^2)\,R$")
    ax.set_xlim(0.0, 30.0)
    ax.set_ylim(bottom=0.0)
    ax.legend(frameon=False)
    fig.tight_layout()
    fig.savefig(os.path.join(HERE, "fig3.png"), dpi=200)
    plt.close(fig)


def main():
    base = r"scaled spectral density $(2\pi/\epsilon_0^2\tau)\,d\tilde{N}/d\omega$"
    plot_spectrum("fig1.csv", "fig1.png", base + r"  ($\gamma_0=1$)")
    plot_spectrum("fig2a.csv", "fig2a.png", r"$20\times$ " + base + r"  ($\gamma_0=5$)")
    plot_spectrum("fig2b.csv", "fig2b.png", r"$100\times$ " + base + r"  ($\gamma_0=10$)")
    plot_rate()
    print("wrote fig1.png fig2a.png fig2b.png fig3.png in", HERE)


if __name__ == "__main__":
    main()
)PY";

}  // namespace

int run_figures(const FiguresOptions& opt, std::ostream& diag) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(opt.outdir, ec);
  if (ec) {
    diag << "rdce: cannot create output directory: " << opt.outdir << "\n";
    return kExitIoFailure;
  }
  const auto path = [&](const char* name) {
    return (fs::path(opt.outdir) / name).string();
  };

  int rc;
  rc = write_figure_spectrum(path("fig1.csv"), 1.0, 1.0, opt.convention, diag);
  if (rc != kExitOk) return rc;
  rc = write_figure_spectrum(path("fig2a.csv"), 5.0, 20.0, opt.convention, diag);
  if (rc != kExitOk) return rc;
  rc = write_figure_spectrum(path("fig2b.csv"), 10.0, 100.0, opt.convention, diag);
  if (rc != kExitOk) return rc;
  rc = write_figure_rate(path("fig3.csv"), opt.convention, opt.rel_tol, diag);
  if (rc != kExitOk) return rc;

  std::ofstream script;
  if (!open_output(path("plot_figures.py"), script, diag)) return kExitIoFailure;
  script << kPlotScript;
  script.flush();
  if (script.fail()) return kExitIoFailure;

  diag << "rdce: wrote fig1.csv fig2a.csv fig2b.csv fig3.csv plot_figures.py"
          " in " << opt.outdir << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// validation suite

namespace {

using Check = CheckResult;

Check check_vacuum_symmetry() {
  Check c;
  c.name = "vacuum-symmetry";
  c.threshold = 1e-12;
  const double combos[][2] = {{1.0, 1.0}, {5.0, 1.0}, {10.0, 1.0}, {1.0, 10.0}};
  double worst = 0.0;
  for (const auto& gw : combos) {
    const double g0 = gw[0], w0 = gw[1];
    const Eigen::ArrayXd grid = Eigen::ArrayXd::LinSpaced(1001, 0.0, w0);
    for (Eigen::Index i = 0; i < grid.size(); ++i) {
      const double a = spectrum_vac_closed(grid[i], g0, w0);
      const double b = spectrum_vac_closed(w0 - grid[i], g0, w0);
      worst = std::max(worst, std::abs(a - b));
    }
  }
  c.metric = worst;
  c.passed = worst <= c.threshold;
  c.detail = "max |s(w) - s(w0-w)| over 1001-point grids, "
             "(gamma0,omega0) in {(1,1),(5,1),(10,1),(1,10)}";
  return c;
}

Check check_thermal_asymmetry() {
  Check c;
  c.name = "thermal-asymmetry";
  c.threshold = 0.0;
  double min_gap = std::numeric_limits<double>::infinity();
  const double w0 = 1.0;
  for (ThermalConvention conv :
       {ThermalConvention::AsPrinted, ThermalConvention::SelfConsistent}) {
    for (double g0 : {1.0, 5.0, 10.0}) {
      for (double T : {0.02, 0.05, 0.07, 0.1}) {
        for (int i = 1; i < 200; ++i) {
          const double w = 0.5 * w0 + 0.5 * w0 * i / 200.0;
          const double hi = spectrum_thermal_closed(w, g0, w0, T, conv);
          const double lo = spectrum_thermal_closed(w0 - w, g0, w0, T, conv);
          min_gap = std::min(min_gap, hi - lo);
        }
      }
    }
  }
  c.metric = min_gap;
  c.passed = min_gap > c.threshold;
  c.detail = "min [dN_T(w) - dN_T(w0-w)] over w in (w0/2, w0), both "
             "conventions, gamma0 in {1,5,10}, T in {0.02..0.1}; must be > 0";
  return c;
}

Check check_temperature_monotonicity_spectra() {
  Check c;
  c.name = "temperature-monotonicity-spectra";
  c.threshold = 0.0;
  const double temps[] = {0.0, 0.02, 0.05, 0.07, 0.1};
  double min_step = std::numeric_limits<double>::infinity();
  const FrequencyGrid grid = FrequencyGrid::linspace(0.0, 1.5, 301);
  for (double g0 : {1.0, 10.0}) {
    PhysicalParams p;
    p.gamma0 = g0;
    Eigen::ArrayXd prev;
    for (double T : temps) {
      p.temperature = T;
      const SpectralResult r =
          spectrum_total(grid, p, ThermalConvention::SelfConsistent);
      if (prev.size() > 0)
        min_step = std::min(min_step, (r.total - prev).minCoeff());
      prev = r.total;
    }
  }
  c.metric = min_step;
  c.passed = min_step >= c.threshold;
  c.detail = "min pointwise increment of the total density along the "
             "temperature ladder (self-consistent); must be >= 0";
  return c;
}

Check check_temperature_monotonicity_rates(double rel_tol) {
  Check c;
  c.name = "temperature-monotonicity-rates";
  c.threshold = 0.0;
  double min_gap = std::numeric_limits<double>::infinity();
  for (double w0 : {0.1, 1.0, 5.0, 15.0, 30.0}) {
    double prev = -1.0;
    for (double T : {0.0, 0.05, 0.1}) {
      PhysicalParams p;
      p.omega0 = w0;
      p.temperature = T;
      QuadratureConfig cfg = default_quadrature_config(p);
      cfg.rel_tol = rel_tol;
      const RateResult r =
          rate_total(p, ThermalConvention::SelfConsistent, cfg);
      if (prev >= 0.0) min_gap = std::min(min_gap, r.total_rate - prev);
      prev = r.total_rate;
    }
  }
  c.metric = min_gap;
  c.passed = min_gap > c.threshold;
  c.detail = "min increment of the total rate over T in {0, 0.05, 0.1} at "
             "omega0 in {0.1,1,5,15,30}; must be > 0";
  return c;
}

Check check_rate_identity(double rel_tol) {
  Check c;
  c.name = "rate-spectrum-identity";
  c.threshold = 1e-8;
  double worst = 0.0;
  QuadratureConfig cfg;
  cfg.rel_tol = std::min(rel_tol, 1e-11);
  for (double xi : {0.1, 1.0, 5.0, 10.0}) {
    PhysicalParams p;
    p.gamma0 = xi;  // omega0 = 1 so xi = gamma0
    const IntegrationResult q = integrate(
        [&](double w) { return spectrum_vac_closed(w, p); }, 0.0, 1.0, cfg);
    const double closed = rate_vac_closed(p);
    worst = std::max(worst, std::abs(q.value - closed) / closed);
    if (xi == 1.0) {
      const double reference = (3.0 * std::log(2.0) - std::numbers::pi / 2.0) / 5.0;
      worst = std::max(worst, std::abs(closed - reference) / reference);
    }
  }
  c.metric = worst;
  c.passed = worst <= c.threshold;
  c.detail = "closed-form vacuum rate vs quadrature of the vacuum spectrum "
             "over [0, omega0], xi in {0.1,1,5,10}";
  return c;
}

Check check_general_vs_closed(double rel_tol) {
  Check c;
  c.name = "general-vs-closed-convergence";
  c.threshold = 0.05;
  double devs[3] = {0.0, 0.0, 0.0};
  const double taus[3] = {10.0, 100.0, 1000.0};
  for (int k = 0; k < 3; ++k) {
    PhysicalParams p;
    p.tau = taus[k];
    const PerturbationProfile prof = PerturbationProfile::from_params(p);
    QuadratureConfig cfg = default_quadrature_config(p);
    cfg.rel_tol = rel_tol;
    const Eigen::ArrayXd ws = Eigen::ArrayXd::LinSpaced(17, 0.1, 0.9);
    for (Eigen::Index i = 0; i < ws.size(); ++i) {
      const GeneralSpectrumPoint g = spectrum_general(ws[i], p, prof, cfg);
      const double closed = spectrum_vac_closed(ws[i], p);
      devs[k] = std::max(devs[k], std::abs(g.vacuum - closed) / closed);
    }
  }
  c.metric = devs[1];
  c.passed = devs[1] <= c.threshold && devs[2] < devs[1] && devs[0] > devs[1];
  std::ostringstream d;
  d << "max rel deviation of general vacuum from the closed form over "
       "[0.1, 0.9]*omega0: "
    << format_double(devs[0]) << " (omega0*tau=10), "
    << format_double(devs[1]) << " (100), " << format_double(devs[2])
    << " (1000); must shrink with omega0*tau and be <= 0.05 at 100";
  c.detail = d.str();
  return c;
}

Check check_fourier_oracle() {
  Check c;
  c.name = "fourier-transform-oracle";
  c.threshold = 1e-6;
  const DampedCosine d{0.01, 1.0, 100.0};
  const PerturbationProfile analytic =
      PerturbationProfile::damped_cosine(d.epsilon0, d.omega0, d.tau);
  // sampling step tau/1000 over |t| <= 20 tau
  const Eigen::Index n = 40001;
  const PerturbationProfile sampled = sample_damped_cosine(d, 20.0 * d.tau, n);
  double sup_err = 0.0, sup_ref = 0.0;
  for (int i = 0; i <= 60; ++i) {
    const double w = 3.0 * i / 60.0;
    const std::complex<double> a = delta_gamma_ft(w, analytic);
    const std::complex<double> b = delta_gamma_ft(w, sampled);
    sup_err = std::max(sup_err, std::abs(a - b));
    sup_ref = std::max(sup_ref, std::abs(a));
  }
  c.metric = sup_err / sup_ref;
  c.passed = c.metric <= c.threshold;
  c.detail = "analytic Lorentzian-pair transform vs trapezoid transform of "
             "the sampled drive (step tau/1000, |t| <= 20 tau), sup-relative "
             "over omega in [0, 3*omega0]";
  return c;
}

Check check_series_branch() {
  Check c;
  c.name = "series-branch-continuity";
  c.threshold = 1e-8;
  const double xi = kRateSeriesThreshold;
  const double direct = rate_vac_closed_direct(xi);
  const double series = rate_vac_series(xi);
  c.metric = std::abs(direct - series) / direct;
  c.passed = c.metric <= c.threshold;
  c.detail = "relative gap between the printed closed form and the Maclaurin "
             "branch at the switch point xi = " + format_double(xi);
  return c;
}

Check check_convention_divergence() {
  Check c;
  c.name = "convention-divergence-map";
  c.threshold = 0.0;
  const double g0 = 1.0, w0 = 1.0, T = 0.1;
  double below_max = 0.0;
  double above_min = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 200; ++i) {  // omega in [0, w0)
    const double w = w0 * i / 200.0;
    const double ap = spectrum_thermal_closed(
        w, g0, w0, T, ThermalConvention::AsPrinted);
    const double sc = spectrum_thermal_closed(
        w, g0, w0, T, ThermalConvention::SelfConsistent);
    below_max = std::max(below_max, std::abs(ap - sc));
  }
  for (int i = 1; i <= 100; ++i) {  // omega in (w0, 1.5 w0]
    const double w = w0 + 0.5 * w0 * i / 100.0;
    const double ap = spectrum_thermal_closed(
        w, g0, w0, T, ThermalConvention::AsPrinted);
    const double sc = spectrum_thermal_closed(
        w, g0, w0, T, ThermalConvention::SelfConsistent);
    above_min = std::min(above_min, ap - sc);
  }
  c.metric = below_max;
  c.passed = below_max == 0.0 && above_min > 0.0;
  c.detail = "as-printed vs self-consistent thermal densities: identical "
             "below omega0 (max gap " + format_double(below_max) +
             "), strictly divergent above (min gap " +
             format_double(above_min) + ") at T = 0.1";
  return c;
}

}  // namespace

std::vector<CheckResult> run_validation_checks(double rel_tol) {
  std::vector<CheckResult> checks;
  const auto guarded = [&checks](const char* name, auto&& fn) {
    try {
      checks.push_back(fn());
    } catch (const std::exception& e) {
      CheckResult c;
      c.name = name;
      c.passed = false;
      c.detail = std::string("exception: ") + e.what();
      checks.push_back(std::move(c));
    }
  };
  guarded("vacuum-symmetry", [] { return check_vacuum_symmetry(); });
  guarded("thermal-asymmetry", [] { return check_thermal_asymmetry(); });
  guarded("temperature-monotonicity-spectra",
          [] { return check_temperature_monotonicity_spectra(); });
  guarded("temperature-monotonicity-rates",
          [&] { return check_temperature_monotonicity_rates(rel_tol); });
  guarded("rate-spectrum-identity", [&] { return check_rate_identity(rel_tol); });
  guarded("general-vs-closed-convergence",
          [&] { return check_general_vs_closed(rel_tol); });
  guarded("fourier-transform-oracle", [] { return check_fourier_oracle(); });
  guarded("series-branch-continuity", [] { return check_series_branch(); });
  guarded("convention-divergence-map",
          [] { return check_convention_divergence(); });
  return checks;
}

int run_validate(const ValidateOptions& opt, std::ostream& human,
                 std::ostream& diag) {
  if (!(opt.rel_tol > 0.0) || !(opt.rel_tol < 1.0)) {
    diag << "rdce: --rel-tol must be in (0, 1)\n";
    return kExitInvalidInput;
  }
  const std::vector<CheckResult> checks = run_validation_checks(opt.rel_tol);
  int failed = 0;
  for (const CheckResult& c : checks) {
    human << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.detail
          << " (metric=" << format_double(c.metric)
          << ", threshold=" << format_double(c.threshold) << ")\n";
    if (!c.passed) ++failed;
  }
  human << "validation suite: " << (checks.size() - failed) << "/"
        << checks.size() << " checks passed\n";

  if (!opt.out.empty()) {
    std::ofstream file;
    if (!open_output(opt.out, file, diag)) return kExitIoFailure;
    meta(file, "tool", "rdce validate");
    meta(file, "version", kVersion);
    meta(file, "rel_tol", format_double_exact(opt.rel_tol));
    file << "check,status,metric,threshold\n";
    for (const CheckResult& c : checks)
      file << c.name << ',' << (c.passed ? "pass" : "fail") << ','
           << format_double(c.metric) << ',' << format_double(c.threshold)
           << '\n';
    file.flush();
    if (file.fail()) return kExitIoFailure;
  }
  return failed == 0 ? kExitOk : kExitValidationFailure;
}

}  // namespace rdce::cli
