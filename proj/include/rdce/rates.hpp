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

#ifndef RDCE_RATES_HPP
#define RDCE_RATES_HPP

// Total particle-creation rates, scaled by 2*pi/eps0^2.
//
// The vacuum rate has the closed form
//   omega0^3 [ (2+xi^2) ln(1+xi^2) - 2 xi arctan(xi) ] / [ xi^4 (4+xi^2) ],
// xi = omega0*gamma0.  The numerator is O(xi^4) built from differences of
// O(xi^2) terms, so the printed form cancels catastrophically as xi -> 0;
// below a switch point the Maclaurin branch
//   omega0^3 [ Sum_m a_m xi^(2m) ] / (4+xi^2),
//   a_m = (-1)^m (3m+4) / [ (m+1)(m+2)(2m+3) ]   (2/3, -7/30, 5/42, ...)
// is used instead.  No closed thermal rate exists; it is obtained by
// semi-infinite quadrature of the thermal spectral density.

#include <cmath>
#include <limits>
#include <string>

#include "rdce/core.hpp"
#include "rdce/quadrature.hpp"
#include "rdce/spectra.hpp"

namespace rdce {

/// xi = omega0 * gamma0, the argument of the closed-form vacuum rate.
struct XiParam {
  double xi = 0.0;
  static XiParam from(const PhysicalParams& p) { return {p.xi()}; }
};

/// Switch point between the printed closed form and its Maclaurin branch.
/// At this xi the double-precision direct evaluation still carries ~1e-13
/// relative cancellation error (checked against extended precision), far
/// inside the 1e-8 continuity budget.
inline constexpr double kRateSeriesThreshold = 0.05;

/// The printed closed form [(2+xi^2)ln(1+xi^2) - 2 xi atan(xi)]/[xi^4(4+xi^2)].
/// Cancels catastrophically for small xi; prefer rate_vac_scaled().
template <typename Scalar>
Scalar rate_vac_closed_direct(Scalar xi) {
  const Scalar xi2 = xi * xi;
  const Scalar num =
      (Scalar(2) + xi2) * std::log1p(xi2) - Scalar(2) * xi * std::atan(xi);
  return num / (xi2 * xi2 * (Scalar(4) + xi2));
}

/// Maclaurin branch of the same quantity, accurate for small xi (the series
/// in xi^2 converges for xi < 1; it is only used below the switch point).
template <typename Scalar>
Scalar rate_vac_series(Scalar xi) {
  const Scalar u = xi * xi;
  Scalar sum = Scalar(0);
  Scalar upow = Scalar(1);
  for (int m = 0; m < 64; ++m) {
    const Scalar am = (m % 2 == 0 ? Scalar(1) : Scalar(-1)) *
                      Scalar(3 * m + 4) /
                      (Scalar(m + 1) * Scalar(m + 2) * Scalar(2 * m + 3));
    const Scalar term = am * upow;
    sum += term;
    if (std::abs(term) <= std::numeric_limits<Scalar>::epsilon() * std::abs(sum))
      break;
    upow *= u;
  }
  return sum / (Scalar(4) + u);
}

/// Cancellation-safe dimensionless rate factor (the closed form divided by
/// omega0^3), branch-switched at kRateSeriesThreshold.
template <typename Scalar>
Scalar rate_vac_scaled(Scalar xi) {
  return xi < Scalar(kRateSeriesThreshold) ? rate_vac_series(xi)
                                           : rate_vac_closed_direct(xi);
}

inline RateMethod rate_vac_method(double xi) {
  return xi < kRateSeriesThreshold ? RateMethod::SeriesBranch
                                   : RateMethod::ClosedForm;
}

/// Scaled vacuum creation rate (2*pi/eps0^2) R_vac.  Zero at omega0 = 0.
inline double rate_vac_closed(const PhysicalParams& p) {
  if (p.omega0 == 0.0) return 0.0;
  return p.omega0 * p.omega0 * p.omega0 * rate_vac_scaled(p.xi());
}

/// Scaled thermal creation rate (2*pi/eps0^2) R_T: semi-infinite quadrature
/// of the scaled thermal spectral density.  SelfConsistent at T = 0 returns
/// exactly zero without integrating.  Throws QuadratureError on failure.
inline double rate_thermal(const PhysicalParams& p, ThermalConvention conv,
                           QuadratureConfig cfg = {}) {
  if (p.temperature == 0.0 && conv == ThermalConvention::SelfConsistent)
    return 0.0;
  if (!(cfg.tail_decay_scale > 0.0))
    cfg.tail_decay_scale = p.omega0 + 40.0 * p.temperature + 10.0 / p.tau;
  auto density = [&](double w) { return spectrum_thermal_closed(w, p, conv); };
  IntegrationResult res = integrate_semi_infinite(density, 0.0, cfg);
  if (!res.converged())
    throw QuadratureError(
        res.status == QuadratureStatus::TailUnbounded
            ? "rate_thermal: tail-unbounded"
            : "rate_thermal: no-convergence",
        res);
  return res.value;
}

/// Vacuum (closed form) plus thermal (quadrature) rates with bookkeeping.
inline RateResult rate_total(const PhysicalParams& p, ThermalConvention conv,
                             const QuadratureConfig& cfg = {}) {
  RateResult r;
  r.vacuum_rate = rate_vac_closed(p);
  r.method_vac = rate_vac_method(p.xi());
  r.thermal_rate = rate_thermal(p, conv, cfg);
  r.total_rate = r.vacuum_rate + r.thermal_rate;
  r.convention = conv;
  return r;
}

}  // namespace rdce

#endif
