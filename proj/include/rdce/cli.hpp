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

#ifndef RDCE_CLI_HPP
#define RDCE_CLI_HPP

// Command surface behind the rdce tool: spectrum and rate computations to
// CSV, reproduction of the reference figure set, and the validation suite.
// Everything here is deterministic: identical options produce byte-identical
// output files.

#include <iosfwd>
#include <string>
#include <vector>

#include "rdce/core.hpp"

namespace rdce::cli {

inline constexpr const char* kVersion = "0.1.0";

// Exit codes, disjoint and exhaustive across all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidationFailure = 1;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitNoConvergence = 3;
inline constexpr int kExitIoFailure = 4;

/// "start:stop:count" axis specification with inclusive endpoints.
struct GridSpec {
  double start = 0.0;
  double stop = 1.5;
  int count = 301;
};

/// Parses "start:stop:count"; throws std::invalid_argument on malformed
/// input, start >= stop, or count < 2.
GridSpec parse_grid_spec(const std::string& text);

Eigen::ArrayXd grid_points(const GridSpec& spec);

/// Shortest representation with 12 significant digits; NaN and infinities
/// map to "nan"/"inf"/"-inf".
std::string format_double(double v);

/// Full-precision (round-trippable) representation for metadata lines.
std::string format_double_exact(double v);

struct SpectrumOptions {
  PhysicalParams params;
  GridSpec grid{0.0, 1.5, 301};
  ThermalConvention convention = ThermalConvention::SelfConsistent;
  SpectrumMethod method = SpectrumMethod::ClosedForm;
  double rel_tol = 1e-10;
  std::string profile_file;  ///< tabulated drive for the general method
  std::string out;           ///< CSV path; empty writes to stdout
};

struct RateOptions {
  PhysicalParams params;  ///< omega0 is taken from the sweep
  GridSpec sweep{0.0, 30.0, 61};
  std::vector<double> temperatures{0.0};
  ThermalConvention convention = ThermalConvention::SelfConsistent;
  double rel_tol = 1e-10;
  std::string out;
};

struct FiguresOptions {
  std::string outdir = ".";
  ThermalConvention convention = ThermalConvention::SelfConsistent;
  double rel_tol = 1e-10;
};

struct ValidateOptions {
  double rel_tol = 1e-10;
  std::string out;  ///< machine-readable CSV report; empty skips the file
};

int run_spectrum(const SpectrumOptions& opt, std::ostream& diag);
int run_rate(const RateOptions& opt, std::ostream& diag);
int run_figures(const FiguresOptions& opt, std::ostream& diag);
int run_validate(const ValidateOptions& opt, std::ostream& human,
                 std::ostream& diag);

/// One entry of the validation suite.
struct CheckResult {
  std::string name;
  bool passed = false;
  double metric = 0.0;     ///< worst observed value
  double threshold = 0.0;  ///< pass bound on the metric
  std::string detail;
};

/// The full cross-validation suite (symmetries, monotonicities, oracle
/// agreements, convergence studies).  Pure computation; no I/O.
std::vector<CheckResult> run_validation_checks(double rel_tol = 1e-10);

}  // namespace rdce::cli

#endif
