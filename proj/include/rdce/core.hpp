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

#ifndef RDCE_CORE_HPP
#define RDCE_CORE_HPP

// Domain types and unit conventions shared by every other module.
//
// Everything is expressed in natural units (hbar = c = k_B = 1), so a
// temperature carries frequency dimension and the Robin parameter gamma0
// carries length dimension.  Scaled spectral densities are reported as
// (2*pi/eps0^2/tau) * dN/domega and scaled rates as (2*pi/eps0^2) * R, which
// removes eps0 and tau from every closed form.

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace rdce {

/// Handling of the thermal occupation factor for frequencies above the
/// drive frequency omega0.
///
/// AsPrinted keeps the factor (omega0-omega)*nbar(omega0-omega) for all
/// omega, which through nbar(-x) = -(1+nbar(x)) stays non-negative but does
/// not vanish at T=0 once omega > omega0.  SelfConsistent uses
/// |omega0-omega|*nbar(|omega0-omega|) instead; the two coincide for
/// omega < omega0 and SelfConsistent is identically zero at T=0.
enum class ThermalConvention { AsPrinted, SelfConsistent };

enum class SpectrumMethod { ClosedForm, GeneralQuadrature };
enum class RateMethod { ClosedForm, SeriesBranch, Quadrature };

const char* to_string(ThermalConvention c);
const char* to_string(SpectrumMethod m);
const char* to_string(RateMethod m);

/// Full parameter set of a damped-cosine drive on a thermal background.
struct PhysicalParams {
  double gamma0 = 1.0;       ///< static Robin parameter, length, > 0
  double epsilon0 = 0.01;    ///< drive amplitude, length, >= 0
  double omega0 = 1.0;       ///< dominant drive frequency, >= 0
  double tau = 100.0;        ///< drive damping time, > 0
  double temperature = 0.0;  ///< absolute temperature, frequency units, >= 0

  /// xi = omega0 * gamma0, the dimensionless Robin-suppression parameter.
  double xi() const { return omega0 * gamma0; }
};

enum class ParamFlag { Ok, OutOfPerturbativeRegime, NotNarrowband, Degenerate };

const char* to_string(ParamFlag f);

/// Result of validate_params().  Hard problems land in `degenerate`,
/// regime warnings in the two soft flags.
struct ValidationReport {
  bool perturbative = true;  ///< epsilon0 <= 0.1 * gamma0
  bool narrowband = true;    ///< omega0 * tau >= 10
  std::vector<std::string> degenerate;  ///< hard violations, empty when usable

  bool ok() const { return degenerate.empty() && perturbative && narrowband; }
  bool usable() const { return degenerate.empty(); }

  /// Every violated or soft-warned condition; {Ok} when none.
  std::vector<ParamFlag> flags() const;
  /// One-line summary, e.g. "ok" or "not-narrowband, degenerate(tau <= 0)".
  std::string summary() const;
};

/// Pure report on a candidate parameter record.  gamma0 <= 0, tau <= 0,
/// negative epsilon0/omega0/temperature and non-finite fields are hard
/// ("degenerate") flags; the perturbative and narrowband conditions only
/// warn, so the omega0 -> 0 end of a rate sweep stays computable.
ValidationReport validate_params(const PhysicalParams& p);

/// Multiplicative factors linking raw densities/rates to the scaled
/// quantities this library reports.
struct UnitsNote {
  double spectrum_scale = 0.0;  ///< 2*pi / (eps0^2 * tau); raw -> scaled
  double rate_scale = 0.0;      ///< 2*pi / eps0^2
  bool omega0_zero = false;     ///< omega/omega0 axis unavailable
  std::string unit_system;
};

/// Scaling conventions for the given parameters.  When
/// `normalize_by_omega0` is requested at omega0 = 0 the note carries the
/// "omega0-zero" flag instead of a usable frequency unit.
UnitsNote scaled_units_note(const PhysicalParams& p,
                            bool normalize_by_omega0 = true);

/// Strictly increasing, non-negative frequency grid with at least 2 points.
class FrequencyGrid {
 public:
  explicit FrequencyGrid(Eigen::ArrayXd points) : pts_(std::move(points)) {
    if (pts_.size() < 2)
      throw std::invalid_argument("FrequencyGrid: need at least 2 points");
    if (!(pts_[0] >= 0.0))
      throw std::invalid_argument("FrequencyGrid: points must be >= 0");
    for (Eigen::Index i = 1; i < pts_.size(); ++i)
      if (!(pts_[i] > pts_[i - 1]))
        throw std::invalid_argument(
            "FrequencyGrid: points must be strictly increasing");
    if (!pts_.isFinite().all())
      throw std::invalid_argument("FrequencyGrid: points must be finite");
  }

  static FrequencyGrid linspace(double lo, double hi, Eigen::Index n) {
    return FrequencyGrid(Eigen::ArrayXd::LinSpaced(n, lo, hi));
  }

  const Eigen::ArrayXd& points() const { return pts_; }
  Eigen::Index size() const { return pts_.size(); }
  double operator[](Eigen::Index i) const { return pts_[i]; }

 private:
  Eigen::ArrayXd pts_;
};

/// Scaled spectral densities on a frequency grid.  `total` is the
/// elementwise sum of `vacuum` and `thermal` by construction.
struct SpectralResult {
  FrequencyGrid grid;
  Eigen::ArrayXd vacuum;   ///< (2*pi/eps0^2/tau) dN_vac/domega
  Eigen::ArrayXd thermal;  ///< (2*pi/eps0^2/tau) dN_T/domega
  Eigen::ArrayXd total;    ///< vacuum + thermal
  SpectrumMethod method = SpectrumMethod::ClosedForm;
  ThermalConvention convention = ThermalConvention::SelfConsistent;
  PhysicalParams params;

  static SpectralResult assemble(FrequencyGrid grid, Eigen::ArrayXd vacuum,
                                 Eigen::ArrayXd thermal, SpectrumMethod method,
                                 ThermalConvention convention,
                                 const PhysicalParams& params) {
    if (vacuum.size() != grid.size() || thermal.size() != grid.size())
      throw std::invalid_argument("SpectralResult: length mismatch");
    if ((vacuum < 0.0).any() || (thermal < 0.0).any())
      throw std::invalid_argument("SpectralResult: negative density");
    Eigen::ArrayXd total = vacuum + thermal;
    return SpectralResult{std::move(grid),   std::move(vacuum),
                          std::move(thermal), std::move(total),
                          method,             convention,
                          params};
  }
};

/// Scaled particle-creation rates, (2*pi/eps0^2) * R.
struct RateResult {
  double vacuum_rate = 0.0;
  double thermal_rate = 0.0;
  double total_rate = 0.0;
  RateMethod method_vac = RateMethod::ClosedForm;
  ThermalConvention convention = ThermalConvention::SelfConsistent;
};

// ---------------------------------------------------------------------------
// inline implementation

inline const char* to_string(ThermalConvention c) {
  return c == ThermalConvention::AsPrinted ? "as-printed" : "self-consistent";
}

inline const char* to_string(SpectrumMethod m) {
  return m == SpectrumMethod::ClosedForm ? "closed" : "general";
}

inline const char* to_string(RateMethod m) {
  switch (m) {
    case RateMethod::ClosedForm: return "closed";
    case RateMethod::SeriesBranch: return "series";
    case RateMethod::Quadrature: return "quadrature";
  }
  return "?";
}

inline const char* to_string(ParamFlag f) {
  switch (f) {
    case ParamFlag::Ok: return "ok";
    case ParamFlag::OutOfPerturbativeRegime: return "out-of-perturbative-regime";
    case ParamFlag::NotNarrowband: return "not-narrowband";
    case ParamFlag::Degenerate: return "degenerate";
  }
  return "?";
}

inline std::vector<ParamFlag> ValidationReport::flags() const {
  std::vector<ParamFlag> out;
  if (!perturbative) out.push_back(ParamFlag::OutOfPerturbativeRegime);
  if (!narrowband) out.push_back(ParamFlag::NotNarrowband);
  if (!degenerate.empty()) out.push_back(ParamFlag::Degenerate);
  if (out.empty()) out.push_back(ParamFlag::Ok);
  return out;
}

inline std::string ValidationReport::summary() const {
  std::string s;
  for (ParamFlag f : flags()) {
    if (!s.empty()) s += ", ";
    s += to_string(f);
  }
  for (const std::string& d : degenerate) s += " (" + d + ")";
  return s;
}

inline ValidationReport validate_params(const PhysicalParams& p) {
  ValidationReport r;
  auto finite = [](double x) { return std::isfinite(x); };
  if (!finite(p.gamma0) || !(p.gamma0 > 0.0))
    r.degenerate.push_back("gamma0 must be > 0");
  if (!finite(p.tau) || !(p.tau > 0.0))
    r.degenerate.push_back("tau must be > 0");
  if (!finite(p.epsilon0) || p.epsilon0 < 0.0)
    r.degenerate.push_back("epsilon0 must be >= 0");
  if (!finite(p.omega0) || p.omega0 < 0.0)
    r.degenerate.push_back("omega0 must be >= 0");
  if (!finite(p.temperature) || p.temperature < 0.0)
    r.degenerate.push_back("temperature must be >= 0");
  // Soft regime checks are only meaningful on a non-degenerate record.
  if (r.degenerate.empty()) {
    r.perturbative = p.epsilon0 <= 0.1 * p.gamma0;
    r.narrowband = p.omega0 * p.tau >= 10.0;
  }
  return r;
}

inline UnitsNote scaled_units_note(const PhysicalParams& p,
                                   bool normalize_by_omega0) {
  UnitsNote n;
  const double two_pi = 2.0 * std::numbers::pi;
  n.spectrum_scale = two_pi / (p.epsilon0 * p.epsilon0 * p.tau);
  n.rate_scale = two_pi / (p.epsilon0 * p.epsilon0);
  n.omega0_zero = normalize_by_omega0 && !(p.omega0 > 0.0);
  n.unit_system =
      "natural units (hbar = c = k_B = 1); omega0 sets the frequency unit "
      "for figure axes";
  if (n.omega0_zero) n.unit_system += " [omega0-zero: omega/omega0 axis unavailable]";
  return n;
}

}  // namespace rdce

#endif
