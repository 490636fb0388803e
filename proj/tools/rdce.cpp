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

#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "rdce/cli.hpp"

namespace {

const std::map<std::string, rdce::ThermalConvention> kConventionNames{
    {"self-consistent", rdce::ThermalConvention::SelfConsistent},
    {"as-printed", rdce::ThermalConvention::AsPrinted}};

const std::map<std::string, rdce::SpectrumMethod> kMethodNames{
    {"closed", rdce::SpectrumMethod::ClosedForm},
    {"general", rdce::SpectrumMethod::GeneralQuadrature}};

void add_param_options(CLI::App* cmd, rdce::PhysicalParams& p,
                       bool with_omega0, bool with_temperature) {
  cmd->add_option("--gamma0", p.gamma0,
                  "static Robin parameter (length, > 0)")
      ->capture_default_str();
  cmd->add_option("--epsilon0", p.epsilon0, "drive amplitude (length, >= 0)")
      ->capture_default_str();
  if (with_omega0)
    cmd->add_option("--omega0", p.omega0, "dominant drive frequency (>= 0)")
        ->capture_default_str();
  cmd->add_option("--tau", p.tau, "drive damping time (> 0)")
      ->capture_default_str();
  if (with_temperature)
    cmd->add_option("--temperature", p.temperature,
                    "temperature in natural units (>= 0)")
        ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace rdce;

  CLI::App app{
      "rdce: spectra and rates of particles created by a static mirror with "
      "a time-dependent Robin boundary condition"};
  app.require_subcommand(1);

  // spectrum -----------------------------------------------------------
  cli::SpectrumOptions sopt;
  std::string sgrid = "0:1.5:301";
  auto* spectrum = app.add_subcommand(
      "spectrum", "scaled spectral densities on a frequency grid (CSV)");
  add_param_options(spectrum, sopt.params, true, true);
  spectrum->add_option("--grid", sgrid, "frequency grid start:stop:count")
      ->capture_default_str();
  spectrum
      ->add_option("--convention", sopt.convention,
                   "thermal convention {self-consistent|as-printed}")
      ->transform(CLI::CheckedTransformer(kConventionNames, CLI::ignore_case));
  spectrum
      ->add_option("--method", sopt.method,
                   "evaluation method {closed|general}")
      ->transform(CLI::CheckedTransformer(kMethodNames, CLI::ignore_case));
  spectrum->add_option("--rel-tol", sopt.rel_tol,
                       "relative quadrature tolerance")
      ->capture_default_str();
  spectrum->add_option("--profile-file", sopt.profile_file,
                       "two-column (time, delta-gamma) tabulated drive; "
                       "requires --method general");
  spectrum->add_option("--out", sopt.out, "output CSV path (default stdout)");

  // rate ---------------------------------------------------------------
  cli::RateOptions ropt;
  std::string rsweep = "0:30:61";
  std::string rtemps = "0";
  auto* rate = app.add_subcommand(
      "rate", "scaled creation rates over an omega0 sweep (CSV)");
  add_param_options(rate, ropt.params, false, false);
  rate->add_option("--omega0-sweep", rsweep, "omega0 sweep start:stop:count")
      ->capture_default_str();
  rate->add_option("--temperatures", rtemps,
                   "comma-separated temperature list")
      ->capture_default_str();
  rate->add_option("--convention", ropt.convention,
                   "thermal convention {self-consistent|as-printed}")
      ->transform(CLI::CheckedTransformer(kConventionNames, CLI::ignore_case));
  rate->add_option("--rel-tol", ropt.rel_tol, "relative quadrature tolerance")
      ->capture_default_str();
  rate->add_option("--out", ropt.out, "output CSV path (default stdout)");

  // figures --------------------------------------------------------------
  cli::FiguresOptions fopt;
  auto* figures = app.add_subcommand(
      "figures",
      "write the reference figure CSV set (fig1, fig2a, fig2b, fig3) plus a "
      "plotting script");
  figures->add_option("--outdir", fopt.outdir, "output directory")
      ->capture_default_str();
  figures
      ->add_option("--convention", fopt.convention,
                   "thermal convention {self-consistent|as-printed}")
      ->transform(CLI::CheckedTransformer(kConventionNames, CLI::ignore_case));
  figures->add_option("--rel-tol", fopt.rel_tol,
                      "relative quadrature tolerance")
      ->capture_default_str();

  // validate -------------------------------------------------------------
  cli::ValidateOptions vopt;
  auto* validate = app.add_subcommand(
      "validate", "run the cross-validation suite (exit 0 iff all pass)");
  validate->add_option("--rel-tol", vopt.rel_tol,
                       "relative quadrature tolerance")
      ->capture_default_str();
  validate->add_option("--out", vopt.out,
                       "machine-readable CSV report path (optional)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return cli::kExitInvalidInput;
  }

  try {
    if (spectrum->parsed()) {
      sopt.grid = cli::parse_grid_spec(sgrid);
      return cli::run_spectrum(sopt, std::cerr);
    }
    if (rate->parsed()) {
      ropt.sweep = cli::parse_grid_spec(rsweep);
      ropt.temperatures.clear();
      std::string item;
      std::istringstream ts(rtemps);
      while (std::getline(ts, item, ','))
        ropt.temperatures.push_back(std::stod(item));
      return cli::run_rate(ropt, std::cerr);
    }
    if (figures->parsed()) return cli::run_figures(fopt, std::cerr);
    if (validate->parsed())
      return cli::run_validate(vopt, std::cout, std::cerr);
  } catch (const std::invalid_argument& e) {
    std::cerr << "rdce: " << e.what() << "\n";
    return cli::kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "rdce: " << e.what() << "\n";
    return cli::kExitInvalidInput;
  }
  return cli::kExitInvalidInput;
}
