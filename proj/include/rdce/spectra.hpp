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

#ifndef RDCE_SPECTRA_HPP
#define RDCE_SPECTRA_HPP

// Spectral distributions of the created particles, scaled by
// 2*pi/(eps0^2 tau).
//
// Closed forms hold in the narrowband regime omega0*tau >> 1 of the damped
// cosine drive.  The general forms integrate the Bogoliubov kernel moduli
// over the partner frequency and work for any compactly supported profile.
//
// The general vacuum integrand uses dGamma(omega+mu) (the creation kernel):
// that is the combination whose narrowband limit reproduces the closed
// vacuum form with its Theta(omega0-omega) support.  The thermal integrand
// weights both kernel moduli with nbar(mu), so the total at T=0 equals the
// vacuum result.

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

#include "rdce/core.hpp"
#include "rdce/kernels.hpp"
#include "rdce/quadrature.hpp"

namespace rdce {

/// Scaled vacuum spectral density
///   omega (omega0-omega) / [(1+gamma0^2 omega^2)(1+gamma0^2(omega0-omega)^2)]
/// for 0 <= omega <= omega0, exactly zero above omega0.
template <typename Scalar>
Scalar spectrum_vac_closed(Scalar omega, Scalar gamma0, Scalar omega0) {
  if (!(omega >= Scalar(0)) || omega > omega0) return Scalar(0);
  const Scalar rem = omega0 - omega;
  return omega * rem /
         ((Scalar(1) + gamma0 * gamma0 * omega * omega) *
          (Scalar(1) + gamma0 * gamma0 * rem * rem));
}

inline double spectrum_vac_closed(double omega, const PhysicalParams& p) {
  return spectrum_vac_closed(omega, p.gamma0, p.omega0);
}

/// Scaled thermal spectral density W(omega) * g(nu) with
/// g(nu) = nu nbar(nu) / (1+gamma0^2 nu^2) and nu = omega0 - omega
/// (AsPrinted) or |omega0 - omega| (SelfConsistent).  The omega -> omega0
/// point is the removable limit W(omega0) * T.
template <typename Scalar>
Scalar spectrum_thermal_closed(Scalar omega, Scalar gamma0, Scalar omega0,
                               Scalar temperature, ThermalConvention conv) {
  Scalar nu = omega0 - omega;
  if (conv == ThermalConvention::SelfConsistent) nu = std::abs(nu);
  return spectral_weight(omega, gamma0) *
         occupation_weighted(nu, temperature, gamma0);
}

inline double spectrum_thermal_closed(double omega, const PhysicalParams& p,
                                      ThermalConvention conv) {
  return spectrum_thermal_closed(omega, p.gamma0, p.omega0, p.temperature,
                                 conv);
}

struct GeneralSpectrumPoint {
  double vacuum = 0.0;
  double thermal = 0.0;
};

namespace detail {

inline QuadratureConfig general_point_config(double omega,
                                             const PhysicalParams& p,
                                             QuadratureConfig cfg) {
  if (!(cfg.tail_decay_scale > 0.0))
    cfg.tail_decay_scale =
        p.omega0 + 40.0 * p.temperature + 10.0 / p.tau;
  // every Lorentzian line of the mu integrand sits below omega + omega0
  cfg.tail_decay_scale =
      std::max(cfg.tail_decay_scale, omega + p.omega0 + 10.0 / p.tau);
  return cfg;
}

}  // namespace detail

/// Scaled (vacuum, thermal) densities from the general integral forms,
///   vacuum  = (2pi/eps0^2 tau) (2pi)^-2 int_0^inf |beta(omega,mu)|^2 dmu
///   thermal = (2pi/eps0^2 tau) (2pi)^-2 int_0^inf
///               [|beta|^2 + |alpha|^2] nbar(mu) dmu,
/// with the mu -> 0 Bose edge regularized through occupation_weighted.
inline GeneralSpectrumPoint spectrum_general(double omega,
                                             const PhysicalParams& p,
                                             const PerturbationProfile& profile,
                                             const QuadratureConfig& cfg = {}) {
  if (!(omega > 0.0)) return {0.0, 0.0};
  const QuadratureConfig qcfg = detail::general_point_config(omega, p, cfg);
  const double two_pi = 2.0 * std::numbers::pi;
  const double scale =
      (two_pi / (p.epsilon0 * p.epsilon0 * p.tau)) / (two_pi * two_pi);

  GeneralSpectrumPoint out;

  auto vac_integrand = [&](double mu) {
    return std::norm(beta_kernel(omega, mu, p, profile));
  };
  IntegrationResult vac = integrate_semi_infinite(vac_integrand, 0.0, qcfg);
  if (!vac.converged())
    throw QuadratureError(
        "spectrum_general: vacuum integral did not converge at omega=" +
            std::to_string(omega),
        vac);
  out.vacuum = scale * vac.value;

  if (p.temperature == 0.0) {
    out.thermal = 0.0;  // nbar(mu) = 0 for every mu > 0
    return out;
  }

  // |beta|^2 nbar + |alpha|^2 nbar with W(mu) nbar(mu) folded into the
  // regularized occupation_weighted factor.
  const double w_omega = spectral_weight(omega, p.gamma0);
  auto thermal_integrand = [&](double mu) {
    const std::complex<double> bft = delta_gamma_ft(omega + mu, profile);
    const std::complex<double> aft = delta_gamma_ft(omega - mu, profile);
    return 4.0 * w_omega *
           occupation_weighted(mu, p.temperature, p.gamma0) *
           (std::norm(bft) + std::norm(aft));
  };
  IntegrationResult th = integrate_semi_infinite(thermal_integrand, 0.0, qcfg);
  if (!th.converged())
    throw QuadratureError(
        "spectrum_general: thermal integral did not converge at omega=" +
            std::to_string(omega),
        th);
  out.thermal = scale * th.value;
  return out;
}

/// Assemble per-point vacuum/thermal/total over a grid using the closed
/// forms (the damped-cosine narrowband limit).
inline SpectralResult spectrum_total(const FrequencyGrid& grid,
                                     const PhysicalParams& p,
                                     ThermalConvention conv) {
  Eigen::ArrayXd vac(grid.size()), th(grid.size());
  for (Eigen::Index i = 0; i < grid.size(); ++i) {
    vac[i] = spectrum_vac_closed(grid[i], p);
    th[i] = spectrum_thermal_closed(grid[i], p, conv);
  }
  return SpectralResult::assemble(grid, std::move(vac), std::move(th),
                                  SpectrumMethod::ClosedForm, conv, p);
}

/// General-quadrature assembly for an explicit drive profile.  The thermal
/// part is built from the kernels and is convention-independent; `conv` is
/// recorded as metadata only.
inline SpectralResult spectrum_total(const FrequencyGrid& grid,
                                     const PhysicalParams& p,
                                     ThermalConvention conv,
                                     const PerturbationProfile& profile,
                                     const QuadratureConfig& cfg = {}) {
  Eigen::ArrayXd vac(grid.size()), th(grid.size());
  for (Eigen::Index i = 0; i < grid.size(); ++i) {
    try {
      const GeneralSpectrumPoint pt = spectrum_general(grid[i], p, profile, cfg);
      vac[i] = pt.vacuum;
      th[i] = pt.thermal;
    } catch (const QuadratureError& e) {
      throw QuadratureError("grid point " + std::to_string(i) + ": " +
                                std::string(e.what()),
                            e.result);
    }
  }
  return SpectralResult::assemble(grid, std::move(vac), std::move(th),
                                  SpectrumMethod::GeneralQuadrature, conv, p);
}

/// Method-dispatching convenience; GeneralQuadrature derives the damped
/// cosine profile from the parameters.
inline SpectralResult spectrum_total(const FrequencyGrid& grid,
                                     const PhysicalParams& p,
                                     ThermalConvention conv,
                                     SpectrumMethod method,
                                     const QuadratureConfig& cfg = {}) {
  if (method == SpectrumMethod::ClosedForm) return spectrum_total(grid, p, conv);
  return spectrum_total(grid, p, conv, PerturbationProfile::from_params(p), cfg);
}

}  // namespace rdce

#endif
