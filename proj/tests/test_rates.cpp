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

#include <cmath>
#include <numbers>

#include <doctest.h>

#include "rdce/rates.hpp"

using namespace rdce;

TEST_CASE("vacuum rate: closed-form reference values") {
  PhysicalParams p;  // gamma0 = 1, omega0 = 1 -> xi = 1
  const double at1 = rate_vac_closed(p);
  const double reference = (3.0 * std::log(2.0) - std::numbers::pi / 2.0) / 5.0;
  CHECK(at1 == doctest::Approx(reference).epsilon(1e-14));
  CHECK(at1 == doctest::Approx(0.10172904297698786).epsilon(1e-12));

  // high-precision values across the xi range (omega0 = 1, gamma0 = xi)
  p.gamma0 = 0.1;
  CHECK(rate_vac_closed(p) == doctest::Approx(0.16567211131032681).epsilon(1e-10));
  p.gamma0 = 5.0;
  CHECK(rate_vac_closed(p) == doctest::Approx(4.0957020059106128e-3).epsilon(1e-10));
  p.gamma0 = 10.0;
  CHECK(rate_vac_closed(p) == doctest::Approx(4.2434590310743632e-4).epsilon(1e-10));
}

TEST_CASE("vacuum rate: Dirichlet limit and omega0 = 0") {
  PhysicalParams p;
  p.gamma0 = 0.0;  // xi = 0: the printed form is 0/0, the series is exact
  CHECK(std::abs(rate_vac_closed(p) - 1.0 / 6.0) <= 1e-12);
  CHECK(rate_vac_method(p.xi()) == RateMethod::SeriesBranch);

  PhysicalParams z;
  z.omega0 = 0.0;
  CHECK(rate_vac_closed(z) == 0.0);
}

TEST_CASE("vacuum rate: series coefficients against extended precision") {
  // in the window where the direct long-double evaluation is itself clean,
  // the Maclaurin branch must match it to near machine precision
  for (long double xi : {0.02L, 0.05L, 0.1L, 0.2L, 0.3L}) {
    const long double direct = rate_vac_closed_direct(xi);
    const long double series = rate_vac_series(xi);
    CHECK(static_cast<double>(std::abs(series - direct) / direct) <= 1e-14);
  }
}

TEST_CASE("vacuum rate: branch continuity at the switch point") {
  const double xi = kRateSeriesThreshold;
  const double direct = rate_vac_closed_direct(xi);
  const double series = rate_vac_series(xi);
  CHECK(std::abs(direct - series) / direct <= 1e-8);

  // extended-precision oracle pins both branches
  const long double exact = rate_vac_closed_direct(static_cast<long double>(xi));
  CHECK(static_cast<double>(std::abs(series - exact) / exact) <= 1e-12);
  CHECK(static_cast<double>(std::abs(direct - exact) / exact) <= 1e-9);
}

TEST_CASE("vacuum rate: positivity and Robin suppression") {
  for (double g0 : {1e-3, 0.5, 1.0, 40.0, 1000.0}) {
    PhysicalParams p;
    p.gamma0 = g0;
    CHECK(rate_vac_closed(p) > 0.0);
  }
  // strictly decreasing in xi for xi >= 1 at fixed omega0
  double prev = std::numeric_limits<double>::infinity();
  for (double xi : {1.0, 2.0, 5.0, 10.0, 30.0, 100.0, 1000.0}) {
    PhysicalParams p;
    p.gamma0 = xi;
    const double r = rate_vac_closed(p);
    CHECK(r < prev);
    prev = r;
  }
}

TEST_CASE("vacuum rate: scaled outputs ignore epsilon0 and tau") {
  PhysicalParams p1;
  PhysicalParams p2;
  p2.epsilon0 = 3.0;
  p2.tau = 7.0;
  CHECK(rate_vac_closed(p1) == rate_vac_closed(p2));
  CHECK(spectrum_vac_closed(0.3, p1) == spectrum_vac_closed(0.3, p2));
  CHECK(spectrum_thermal_closed(0.3, p1, ThermalConvention::SelfConsistent) ==
        spectrum_thermal_closed(0.3, p2, ThermalConvention::SelfConsistent));
}

TEST_CASE("thermal rate: zero temperature and the residual at omega0 = 0") {
  PhysicalParams p;
  CHECK(rate_thermal(p, ThermalConvention::SelfConsistent) == 0.0);

  // omega0 = 0, T = 0.1: residual from the purely damped drive remnant,
  // equal to the quadrature of w^2 nbar(w) / (1+w^2)^2
  PhysicalParams res;
  res.omega0 = 0.0;
  res.temperature = 0.1;
  const double r = rate_thermal(res, ThermalConvention::SelfConsistent);
  CHECK(r > 0.0);
  CHECK(r == doctest::Approx(2.0407563297439564e-3).epsilon(1e-8));

  QuadratureConfig cfg;
  cfg.tail_decay_scale = 10.0;
  const auto oracle = integrate_semi_infinite(
      [](double w) {
        return w * w / std::expm1(w / 0.1) / ((1.0 + w * w) * (1.0 + w * w));
      },
      0.0, cfg);
  CHECK(oracle.converged());
  CHECK(r == doctest::Approx(oracle.value).epsilon(1e-10));
}

TEST_CASE("thermal rate: temperature monotonicity and a frozen value") {
  PhysicalParams p;
  p.temperature = 0.05;
  const double lo = rate_thermal(p, ThermalConvention::SelfConsistent);
  p.temperature = 0.1;
  const double hi = rate_thermal(p, ThermalConvention::SelfConsistent);
  CHECK(lo > 0.0);
  CHECK(hi > lo);
  CHECK(hi == doctest::Approx(1.5593052908196620e-2).epsilon(1e-8));
}

TEST_CASE("rate_total: assembly, methods, spectral consistency") {
  PhysicalParams p;
  const RateResult cold = rate_total(p, ThermalConvention::SelfConsistent);
  CHECK(cold.thermal_rate == 0.0);
  CHECK(cold.total_rate == cold.vacuum_rate);
  CHECK(cold.method_vac == RateMethod::ClosedForm);
  CHECK(cold.convention == ThermalConvention::SelfConsistent);

  PhysicalParams tiny;
  tiny.gamma0 = 0.01;  // xi below the switch point
  CHECK(rate_total(tiny, ThermalConvention::SelfConsistent).method_vac ==
        RateMethod::SeriesBranch);

  // quadrature of the vacuum spectrum over [0, omega0] equals the closed rate
  QuadratureConfig cfg;
  cfg.rel_tol = 1e-12;
  const auto q = integrate([&](double w) { return spectrum_vac_closed(w, p); },
                           0.0, p.omega0, cfg);
  CHECK(q.converged());
  CHECK(std::abs(q.value - cold.vacuum_rate) / cold.vacuum_rate <= 1e-8);

  PhysicalParams warm = p;
  warm.temperature = 0.1;
  const RateResult w = rate_total(warm, ThermalConvention::SelfConsistent);
  CHECK(w.total_rate == w.vacuum_rate + w.thermal_rate);
  CHECK(w.total_rate > cold.total_rate);
}

TEST_CASE("XiParam mirrors the parameter product") {
  PhysicalParams p;
  p.gamma0 = 2.5;
  p.omega0 = 4.0;
  CHECK(XiParam::from(p).xi == 10.0);
}
