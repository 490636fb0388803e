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

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

#include "rdce/cli.hpp"
#include "rdce/spectra.hpp"

using namespace rdce;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("rdce_cli_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct ParsedCsv {
  std::map<std::string, std::string> meta;
  std::vector<std::string> rows;  // raw data lines, header row excluded
};

ParsedCsv parse_csv(const std::string& text) {
  ParsedCsv out;
  std::istringstream in(text);
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.rfind("# ", 0) == 0) {
      const auto eq = line.find(" = ");
      if (eq != std::string::npos)
        out.meta[line.substr(2, eq - 2)] = line.substr(eq + 3);
      continue;
    }
    if (!header_seen) {
      header_seen = true;  // column header row
      continue;
    }
    if (!line.empty()) out.rows.push_back(line);
  }
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

}  // namespace

TEST_CASE("grid spec parsing") {
  const cli::GridSpec g = cli::parse_grid_spec("0:1.5:301");
  CHECK(g.start == 0.0);
  CHECK(g.stop == 1.5);
  CHECK(g.count == 301);
  CHECK(cli::grid_points(g).size() == 301);

  CHECK_THROWS_AS(cli::parse_grid_spec("0:1"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_grid_spec("a:b:c"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_grid_spec("1:0:5"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_grid_spec("0:1:1"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_grid_spec("0:1:2x"), std::invalid_argument);
}

TEST_CASE("float formatting") {
  CHECK(cli::format_double(0.16) == "0.16");
  CHECK(cli::format_double(0.0) == "0");
  CHECK(cli::format_double(std::nan("")) == "nan");
  CHECK(cli::format_double(1.0 / 3.0) == "0.333333333333");
  const double v = 0.12345678901234567;
  CHECK(std::stod(cli::format_double_exact(v)) == v);  // round-trippable
}

TEST_CASE("spectrum command: CSV content and determinism") {
  const fs::path dir = fresh_dir("spectrum");
  cli::SpectrumOptions opt;
  opt.grid = {0.0, 1.0, 5};
  opt.params.temperature = 0.1;
  opt.out = (dir / "s.csv").string();

  std::ostringstream diag;
  REQUIRE(cli::run_spectrum(opt, diag) == cli::kExitOk);
  const std::string first = slurp(dir / "s.csv");

  opt.out = (dir / "s2.csv").string();
  REQUIRE(cli::run_spectrum(opt, diag) == cli::kExitOk);
  CHECK(first == slurp(dir / "s2.csv"));  // byte-identical

  const ParsedCsv csv = parse_csv(first);
  CHECK(csv.meta.at("gamma0") == "1");
  CHECK(csv.meta.at("convention") == "self-consistent");
  CHECK(csv.rows.size() == 5);
  const auto mid = split(csv.rows[2], ',');  // omega = 0.5
  CHECK(mid[0] == "0.5");
  CHECK(mid[2] == "0.16");
}

TEST_CASE("spectrum command: CSV header round trip") {
  const fs::path dir = fresh_dir("roundtrip");
  cli::SpectrumOptions opt;
  opt.params.gamma0 = 2.0;
  opt.params.temperature = 0.07;
  opt.grid = {0.0, 1.5, 31};
  opt.convention = ThermalConvention::AsPrinted;
  opt.out = (dir / "r.csv").string();
  std::ostringstream diag;
  REQUIRE(cli::run_spectrum(opt, diag) == cli::kExitOk);

  const ParsedCsv csv = parse_csv(slurp(dir / "r.csv"));
  PhysicalParams p;
  p.gamma0 = std::stod(csv.meta.at("gamma0"));
  p.epsilon0 = std::stod(csv.meta.at("epsilon0"));
  p.omega0 = std::stod(csv.meta.at("omega0"));
  p.tau = std::stod(csv.meta.at("tau"));
  p.temperature = std::stod(csv.meta.at("temperature"));
  const cli::GridSpec gs = cli::parse_grid_spec(csv.meta.at("grid"));
  const ThermalConvention conv = csv.meta.at("convention") == "as-printed"
                                     ? ThermalConvention::AsPrinted
                                     : ThermalConvention::SelfConsistent;

  const SpectralResult r =
      spectrum_total(FrequencyGrid(cli::grid_points(gs)), p, conv);
  REQUIRE(csv.rows.size() == static_cast<std::size_t>(r.grid.size()));
  for (std::size_t i = 0; i < csv.rows.size(); ++i) {
    const auto cols = split(csv.rows[i], ',');
    const auto j = static_cast<Eigen::Index>(i);
    CHECK(cols[2] == cli::format_double(r.vacuum[j]));
    CHECK(cols[3] == cli::format_double(r.thermal[j]));
    CHECK(cols[4] == cli::format_double(r.total[j]));
  }
}

TEST_CASE("spectrum command: exit codes") {
  std::ostringstream diag;

  cli::SpectrumOptions degenerate;
  degenerate.params.gamma0 = 0.0;
  CHECK(cli::run_spectrum(degenerate, diag) == cli::kExitInvalidInput);

  cli::SpectrumOptions bad_tol;
  bad_tol.rel_tol = 2.0;
  CHECK(cli::run_spectrum(bad_tol, diag) == cli::kExitInvalidInput);

  cli::SpectrumOptions unwritable;
  unwritable.out = "/nonexistent_rdce_dir/x.csv";
  CHECK(cli::run_spectrum(unwritable, diag) == cli::kExitIoFailure);

  cli::SpectrumOptions closed_profile;
  closed_profile.profile_file = "whatever.txt";  // closed method refuses it
  CHECK(cli::run_spectrum(closed_profile, diag) == cli::kExitInvalidInput);

  cli::SpectrumOptions missing_profile;
  missing_profile.method = SpectrumMethod::GeneralQuadrature;
  missing_profile.profile_file = "/nonexistent_rdce_profile.txt";
  CHECK(cli::run_spectrum(missing_profile, diag) == cli::kExitInvalidInput);

  // hopeless quadrature budget: numerical non-convergence
  cli::SpectrumOptions hard;
  hard.method = SpectrumMethod::GeneralQuadrature;
  hard.params.tau = 1e5;
  hard.rel_tol = 1e-14;
  hard.grid = {0.4, 0.6, 3};
  hard.out = (fresh_dir("noconv") / "x.csv").string();
  // shrink the budget through the profile-independent path by a tiny rel_tol;
  // the adaptive engine gives up once panels stop improving
  const int rc = cli::run_spectrum(hard, diag);
  CHECK((rc == cli::kExitNoConvergence || rc == cli::kExitOk));
}

TEST_CASE("spectrum command: tabulated profile flows through") {
  const fs::path dir = fresh_dir("profile");
  {
    std::ofstream f(dir / "drive.txt");
    f << "# damped cosine sampled coarsely\n";
    PhysicalParams p;
    p.tau = 20.0;
    const auto analytic = PerturbationProfile::from_params(p);
    const int n = 4001;
    for (int i = 0; i < n; ++i) {
      const double t = -400.0 + 800.0 * i / (n - 1);
      const double v =
          (i == 0 || i == n - 1) ? 0.0 : delta_gamma(t, analytic);
      f << cli::format_double_exact(t) << " " << cli::format_double_exact(v)
        << "\n";
    }
  }
  cli::SpectrumOptions opt;
  opt.params.tau = 20.0;
  opt.method = SpectrumMethod::GeneralQuadrature;
  opt.profile_file = (dir / "drive.txt").string();
  opt.grid = {0.45, 0.55, 3};
  opt.out = (dir / "g.csv").string();
  std::ostringstream diag;
  REQUIRE(cli::run_spectrum(opt, diag) == cli::kExitOk);
  const ParsedCsv csv = parse_csv(slurp(dir / "g.csv"));
  const auto mid = split(csv.rows[1], ',');
  CHECK(std::abs(std::stod(mid[2]) - 0.16) / 0.16 < 0.05);
}

TEST_CASE("rate command: blocks, zero-frequency rows, determinism") {
  const fs::path dir = fresh_dir("rate");
  cli::RateOptions opt;
  opt.sweep = {0.0, 2.0, 3};
  opt.temperatures = {0.0, 0.1};
  opt.out = (dir / "r.csv").string();
  std::ostringstream diag;
  REQUIRE(cli::run_rate(opt, diag) == cli::kExitOk);
  const std::string first = slurp(dir / "r.csv");

  opt.out = (dir / "r2.csv").string();
  REQUIRE(cli::run_rate(opt, diag) == cli::kExitOk);
  CHECK(first == slurp(dir / "r2.csv"));

  const ParsedCsv csv = parse_csv(first);
  REQUIRE(csv.rows.size() == 6);  // one block per temperature
  const auto cold0 = split(csv.rows[0], ',');
  CHECK(cold0[0] == "0");
  CHECK(cold0[4] == "0");  // total rate vanishes at omega0 = 0, T = 0
  const auto warm0 = split(csv.rows[3], ',');
  CHECK(warm0[0] == "0");
  CHECK(std::stod(warm0[4]) > 0.0);  // residual rate at T = 0.1
  const auto warm1 = split(csv.rows[4], ',');
  CHECK(std::stod(warm1[2]) == doctest::Approx(0.10172904297698786));

  cli::RateOptions bad;
  bad.temperatures = {-0.1};
  CHECK(cli::run_rate(bad, diag) == cli::kExitInvalidInput);
}

TEST_CASE("figures command: full set appears and is re-runnable") {
  const fs::path dir = fresh_dir("figures");
  cli::FiguresOptions opt;
  opt.outdir = dir.string();
  std::ostringstream diag;
  REQUIRE(cli::run_figures(opt, diag) == cli::kExitOk);
  for (const char* name :
       {"fig1.csv", "fig2a.csv", "fig2b.csv", "fig3.csv", "plot_figures.py"})
    CHECK(fs::exists(dir / name));

  // fig1, T = 0 block: peak 0.16 at omega = 0.5, zero at and beyond omega0
  const ParsedCsv fig1 = parse_csv(slurp(dir / "fig1.csv"));
  CHECK(fig1.meta.at("display_scale") == "1");
  double peak = 0.0;
  for (const std::string& row : fig1.rows) {
    const auto cols = split(row, ',');
    if (cols[5] != "0") continue;  // T = 0 block only
    const double w = std::stod(cols[0]);
    const double total = std::stod(cols[4]);
    peak = std::max(peak, total);
    if (w >= 1.0) CHECK(total == 0.0);
  }
  CHECK(peak == doctest::Approx(0.16).epsilon(1e-12));

  cli::FiguresOptions bad;
  bad.outdir = "/nonexistent_rdce_dir/sub";
  CHECK(cli::run_figures(bad, diag) == cli::kExitIoFailure);
}

TEST_CASE("validation suite passes on a clean build") {
  std::ostringstream human, diag;
  cli::ValidateOptions opt;
  const fs::path dir = fresh_dir("validate");
  opt.out = (dir / "report.csv").string();
  CHECK(cli::run_validate(opt, human, diag) == cli::kExitOk);
  CHECK(human.str().find("[FAIL]") == std::string::npos);
  const std::string report = slurp(dir / "report.csv");
  CHECK(report.find("vacuum-symmetry,pass") != std::string::npos);
  CHECK(report.find("fail") == std::string::npos);
}
