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

#ifndef RDCE_KERNELS_HPP
#define RDCE_KERNELS_HPP

// Pointwise mathematical kernels: the drive delta_gamma(t) and its Fourier
// transform delta_Gamma(omega), the Robin spectral weight
// W(omega) = omega/(1+gamma0^2 omega^2), the Bose-Einstein occupation
// nbar(omega), and the two Bogoliubov kernels built from them.
//
// Fourier convention: delta_Gamma(omega) = int delta_gamma(t) e^{+i omega t} dt.
// For the real, even damped cosine the transform is the real Lorentzian pair
//   eps0 * tau * [ 1/(1+(omega-omega0)^2 tau^2) + 1/(1+(omega+omega0)^2 tau^2) ].

#include <cmath>
#include <complex>
#include <fstream>
#include <istream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>

#include <Eigen/Core>

#include "rdce/core.hpp"

namespace rdce {

// ---------------------------------------------------------------------------
// scalar kernels

/// Robin spectral weight W(omega) = omega / (1 + gamma0^2 omega^2).
/// Odd in omega; maximum 1/(2 gamma0) at omega = 1/gamma0; reduces to omega
/// in the Dirichlet limit gamma0 = 0.
template <typename Scalar>
Scalar spectral_weight(Scalar omega, Scalar gamma0) {
  return omega / (Scalar(1) + gamma0 * gamma0 * omega * omega);
}

/// Bose-Einstein occupation nbar(omega) = 1/(e^{omega/T}-1).
///
/// Negative arguments are evaluated through the reflection
/// nbar(-omega) = -(1 + nbar(omega)), which makes that identity hold exactly
/// in floating point.  T = 0 degrades to the continuous limits 0 (omega > 0)
/// and -1 (omega < 0).  omega = 0 is a genuine pole; callers needing the
/// omega*nbar -> T limit must use occupation_weighted().
template <typename Scalar>
Scalar bose_einstein(Scalar omega, Scalar temperature) {
  if (omega == Scalar(0)) throw std::domain_error("occupation-pole");
  if (omega < Scalar(0))
    return -(Scalar(1) + bose_einstein(-omega, temperature));
  if (temperature == Scalar(0)) return Scalar(0);
  return Scalar(1) / std::expm1(omega / temperature);
}

/// Regularized product W(omega) * nbar(omega): continuous at omega = 0 with
/// value T (the removable omega*nbar -> T limit divided by 1+0).
template <typename Scalar>
Scalar occupation_weighted(Scalar omega, Scalar temperature, Scalar gamma0) {
  const Scalar denom = Scalar(1) + gamma0 * gamma0 * omega * omega;
  if (temperature == Scalar(0)) {
    // nbar is 0 above and -1 below zero frequency
    return omega >= Scalar(0) ? Scalar(0) : -omega / denom;
  }
  if (omega == Scalar(0)) return temperature;
  const Scalar x = omega / temperature;
  return temperature * (x / std::expm1(x)) / denom;
}

/// Analytic transform of eps0 cos(omega0 t) e^{-|t|/tau}: a Lorentzian pair,
/// real and even in omega.
template <typename Scalar>
Scalar damped_cosine_ft(Scalar omega, Scalar epsilon0, Scalar omega0,
                        Scalar tau) {
  const Scalar dm = (omega - omega0) * tau;
  const Scalar dp = (omega + omega0) * tau;
  return epsilon0 * tau *
         (Scalar(1) / (Scalar(1) + dm * dm) + Scalar(1) / (Scalar(1) + dp * dp));
}

// ---------------------------------------------------------------------------
// perturbation profiles

struct DampedCosine {
  double epsilon0 = 0.01;
  double omega0 = 1.0;
  double tau = 100.0;
};

/// Uniformly sampled, compactly supported drive profile.  The first and last
/// sample values must be zero (the drive vanishes in the remote past and
/// distant future).
struct TabulatedProfile {
  Eigen::ArrayXd times;
  Eigen::ArrayXd values;
  double step = 0.0;
};

class PerturbationProfile {
 public:
  enum class Kind { DampedCosine, Tabulated };

  static PerturbationProfile damped_cosine(double epsilon0, double omega0,
                                           double tau) {
    if (!(tau > 0.0))
      throw std::invalid_argument("PerturbationProfile: tau must be > 0");
    if (!(omega0 >= 0.0))
      throw std::invalid_argument("PerturbationProfile: omega0 must be >= 0");
    return PerturbationProfile(DampedCosine{epsilon0, omega0, tau});
  }

  static PerturbationProfile from_params(const PhysicalParams& p) {
    return damped_cosine(p.epsilon0, p.omega0, p.tau);
  }

  static PerturbationProfile tabulated(Eigen::ArrayXd times,
                                       Eigen::ArrayXd values) {
    const Eigen::Index n = times.size();
    if (n != values.size())
      throw std::invalid_argument("tabulated profile: length mismatch");
    if (n < 8)
      throw std::invalid_argument("tabulated profile: need at least 8 samples");
    if (!times.isFinite().all() || !values.isFinite().all())
      throw std::invalid_argument("tabulated profile: non-finite entry");
    if (values[0] != 0.0 || values[n - 1] != 0.0)
      throw std::invalid_argument(
          "tabulated profile: first and last sample must be zero");
    const double h = (times[n - 1] - times[0]) / static_cast<double>(n - 1);
    if (!(h > 0.0))
      throw std::invalid_argument("tabulated profile: times must increase");
    for (Eigen::Index i = 1; i < n; ++i) {
      const double d = times[i] - times[i - 1];
      if (std::abs(d - h) > 1e-6 * h)
        throw std::invalid_argument(
            "tabulated profile: samples must be uniformly spaced");
    }
    TabulatedProfile t{std::move(times), std::move(values), h};
    return PerturbationProfile(std::move(t));
  }

  Kind kind() const {
    return std::holds_alternative<DampedCosine>(v_) ? Kind::DampedCosine
                                                    : Kind::Tabulated;
  }
  const DampedCosine& damped() const { return std::get<DampedCosine>(v_); }
  const TabulatedProfile& table() const { return std::get<TabulatedProfile>(v_); }

 private:
  explicit PerturbationProfile(DampedCosine d) : v_(d) {}
  explicit PerturbationProfile(TabulatedProfile t) : v_(std::move(t)) {}
  std::variant<DampedCosine, TabulatedProfile> v_;
};

/// delta_gamma(t): the drive value at time t.  Damped cosine evaluates the
/// closed form; tabulated profiles interpolate linearly and are zero outside
/// their support.
inline double delta_gamma(double t, const PerturbationProfile& profile) {
  if (profile.kind() == PerturbationProfile::Kind::DampedCosine) {
    const DampedCosine& d = profile.damped();
    return d.epsilon0 * std::cos(d.omega0 * t) * std::exp(-std::abs(t) / d.tau);
  }
  const TabulatedProfile& tab = profile.table();
  const Eigen::Index n = tab.times.size();
  if (t <= tab.times[0] || t >= tab.times[n - 1]) return 0.0;
  const double u = (t - tab.times[0]) / tab.step;
  Eigen::Index i = static_cast<Eigen::Index>(u);
  if (i >= n - 1) i = n - 2;
  const double frac = u - static_cast<double>(i);
  return tab.values[i] + frac * (tab.values[i + 1] - tab.values[i]);
}

/// delta_Gamma(omega) = int delta_gamma(t) e^{+i omega t} dt.
/// The damped cosine uses the analytic Lorentzian pair (real); tabulated
/// profiles use the trapezoid rule over the support and may be complex.
inline std::complex<double> delta_gamma_ft(double omega,
                                           const PerturbationProfile& profile) {
  if (profile.kind() == PerturbationProfile::Kind::DampedCosine) {
    const DampedCosine& d = profile.damped();
    return {damped_cosine_ft(omega, d.epsilon0, d.omega0, d.tau), 0.0};
  }
  const TabulatedProfile& tab = profile.table();
  const Eigen::Index n = tab.times.size();
  double re = 0.0, im = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double w = (i == 0 || i == n - 1) ? 0.5 : 1.0;
    const double phase = omega * tab.times[i];
    re += w * tab.values[i] * std::cos(phase);
    im += w * tab.values[i] * std::sin(phase);
  }
  return {re * tab.step, im * tab.step};
}

// ---------------------------------------------------------------------------
// Bogoliubov kernels (omega, mu > 0)

/// Particle-creation (beta-type) kernel 2i sqrt(W(omega) W(mu)) dGamma(omega+mu).
inline std::complex<double> beta_kernel(double omega, double mu,
                                        const PhysicalParams& p,
                                        const PerturbationProfile& profile) {
  const double w =
      std::sqrt(spectral_weight(omega, p.gamma0) * spectral_weight(mu, p.gamma0));
  return std::complex<double>(0.0, 2.0 * w) * delta_gamma_ft(omega + mu, profile);
}

/// Scattering (alpha-correction) kernel -2i sqrt(W(omega) W(mu)) dGamma(omega-mu),
/// responsible for thermal up/down-conversion.
inline std::complex<double> alpha_correction_kernel(
    double omega, double mu, const PhysicalParams& p,
    const PerturbationProfile& profile) {
  const double w =
      std::sqrt(spectral_weight(omega, p.gamma0) * spectral_weight(mu, p.gamma0));
  return std::complex<double>(0.0, -2.0 * w) * delta_gamma_ft(omega - mu, profile);
}

// ---------------------------------------------------------------------------
// tabulation and file ingestion

/// Sample a damped cosine on [-half_span, half_span] with n uniform points.
/// The two endpoint samples are clamped to zero so the result satisfies the
/// compact-support invariant; half_span should be >= a few damping times so
/// the clamped values are negligible.
inline PerturbationProfile sample_damped_cosine(const DampedCosine& d,
                                                double half_span,
                                                Eigen::Index n) {
  if (!(half_span > 0.0) || n < 8)
    throw std::invalid_argument("sample_damped_cosine: bad span or count");
  Eigen::ArrayXd t = Eigen::ArrayXd::LinSpaced(n, -half_span, half_span);
  Eigen::ArrayXd v(n);
  const PerturbationProfile analytic =
      PerturbationProfile::damped_cosine(d.epsilon0, d.omega0, d.tau);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = delta_gamma(t[i], analytic);
  v[0] = 0.0;
  v[n - 1] = 0.0;
  return PerturbationProfile::tabulated(std::move(t), std::move(v));
}

/// Parse a two-column (time, delta_gamma) whitespace-separated text stream.
/// '#' starts a comment; blank lines are ignored.
inline PerturbationProfile load_profile(std::istream& in) {
  std::vector<double> ts, vs;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    double t, v;
    if (!(ls >> t)) continue;  // blank or comment-only line
    if (!(ls >> v))
      throw std::runtime_error("profile line " + std::to_string(lineno) +
                               ": expected two columns");
    double extra;
    if (ls >> extra)
      throw std::runtime_error("profile line " + std::to_string(lineno) +
                               ": expected two columns");
    ts.push_back(t);
    vs.push_back(v);
  }
  Eigen::ArrayXd t = Eigen::Map<Eigen::ArrayXd>(ts.data(), ts.size());
  Eigen::ArrayXd v = Eigen::Map<Eigen::ArrayXd>(vs.data(), vs.size());
  return PerturbationProfile::tabulated(std::move(t), std::move(v));
}

inline PerturbationProfile load_profile_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open profile file: " + path);
  return load_profile(in);
}

}  // namespace rdce

#endif
