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

#ifndef RDCE_QUADRATURE_HPP
#define RDCE_QUADRATURE_HPP

// Self-contained adaptive integration on finite and semi-infinite intervals.
//
// Finite intervals use globally adaptive bisection with an embedded
// Gauss(7)/Kronrod(15) pair per panel.  Semi-infinite integrals are truncated
// in geometrically growing blocks beyond a caller-supplied decay scale; the
// last block's magnitude serves as the analytic tail bound and enters the
// returned error estimate.  All routines are pure and deterministic:
// identical inputs produce bit-identical outputs.

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "rdce/core.hpp"

namespace rdce {

struct QuadratureConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  int max_subdivisions = 2000;
  /// Truncation scale for semi-infinite integrands.  Beyond a + this scale
  /// the integrand must decay at least like 1/x^2 (exponential decay for
  /// thermal tails).  Non-positive means "unset": physics-level callers
  /// derive omega0 + 40*T + 10/tau, direct callers get a tail-unbounded
  /// error.
  double tail_decay_scale = 0.0;
};

/// Config with the tail truncation scale derived from the physical
/// parameters: omega0 + 40*T + 10/tau covers the Bose tail (e^-40 of the
/// local scale) plus the Lorentzian wings of the drive line.
inline QuadratureConfig default_quadrature_config(const PhysicalParams& p) {
  QuadratureConfig cfg;
  cfg.tail_decay_scale = p.omega0 + 40.0 * p.temperature + 10.0 / p.tau;
  return cfg;
}

inline void validate(const QuadratureConfig& cfg) {
  if (!(cfg.rel_tol > 0.0) || !(cfg.rel_tol < 1.0))
    throw std::invalid_argument("QuadratureConfig: need 0 < rel_tol < 1");
  if (!(cfg.abs_tol >= 0.0))
    throw std::invalid_argument("QuadratureConfig: need abs_tol >= 0");
  if (cfg.max_subdivisions < 10)
    throw std::invalid_argument("QuadratureConfig: need max_subdivisions >= 10");
}

enum class QuadratureStatus { Converged, NoConvergence, TailUnbounded };

struct IntegrationResult {
  double value = 0.0;
  double error = 0.0;  ///< estimate; <= max(rel_tol*|value|, abs_tol) on success
  QuadratureStatus status = QuadratureStatus::Converged;
  int subdivisions = 0;
  double truncation_point = 0.0;  ///< semi-infinite only: upper end used

  bool converged() const { return status == QuadratureStatus::Converged; }
};

/// Thrown by higher-level operations when an integral fails; carries the
/// best available result.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, IntegrationResult best)
      : std::runtime_error(what), result(best) {}
  IntegrationResult result;
};

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK dqk15).
// xk holds the positive abscissae; odd indices are the Gauss nodes.
inline constexpr double kGk15Nodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

inline constexpr double kGk15Weights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

inline constexpr double kGauss7Weights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct PanelEstimate {
  double value;
  double error;
};

template <class F>
PanelEstimate gk15(F&& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double result_gauss = fc * kGauss7Weights[3];
  double result_kronrod = fc * kGk15Weights[7];
  for (int j = 0; j < 3; ++j) {  // shared Gauss/Kronrod pairs
    const double dx = half * kGk15Nodes[2 * j + 1];
    const double fsum = f(center - dx) + f(center + dx);
    result_gauss += kGauss7Weights[j] * fsum;
    result_kronrod += kGk15Weights[2 * j + 1] * fsum;
  }
  for (int j = 0; j < 4; ++j) {  // Kronrod-only pairs
    const double dx = half * kGk15Nodes[2 * j];
    result_kronrod += kGk15Weights[2 * j] * (f(center - dx) + f(center + dx));
  }
  return {result_kronrod * half,
          std::abs((result_kronrod - result_gauss) * half)};
}

struct Panel {
  double a, b, value, error;
  bool splittable;
};

}  // namespace detail

/// Adaptive integration of f over the finite interval [a, b].
///
/// Bisects the panel with the largest embedded error estimate until the
/// summed estimate meets max(rel_tol*|value|, abs_tol) or max_subdivisions
/// panels exist; exhaustion yields status NoConvergence with the best value.
template <class F>
IntegrationResult integrate(F&& f, double a, double b,
                            const QuadratureConfig& cfg = {}) {
  validate(cfg);
  if (!(a < b)) throw std::invalid_argument("integrate: need a < b");

  std::vector<detail::Panel> panels;
  panels.reserve(64);
  auto push = [&](double lo, double hi) {
    const auto est = detail::gk15(f, lo, hi);
    const double width_floor =
        8.0 * std::numeric_limits<double>::epsilon() *
        (std::abs(lo) + std::abs(hi));
    panels.push_back({lo, hi, est.value, est.error, hi - lo > width_floor});
  };
  push(a, b);

  IntegrationResult out;
  for (;;) {
    double total = 0.0, err = 0.0;
    for (const auto& p : panels) {
      total += p.value;
      err += p.error;
    }
    out.value = total;
    out.error = err;
    out.subdivisions = static_cast<int>(panels.size());
    if (err <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total))) {
      out.status = QuadratureStatus::Converged;
      return out;
    }
    if (static_cast<int>(panels.size()) >= cfg.max_subdivisions) {
      out.status = QuadratureStatus::NoConvergence;
      return out;
    }
    // worst splittable panel; first wins ties for determinism
    std::size_t worst = panels.size();
    double worst_err = -1.0;
    for (std::size_t i = 0; i < panels.size(); ++i)
      if (panels[i].splittable && panels[i].error > worst_err) {
        worst = i;
        worst_err = panels[i].error;
      }
    if (worst == panels.size()) {  // nothing left to refine
      out.status = QuadratureStatus::NoConvergence;
      return out;
    }
    const detail::Panel seg = panels[worst];
    const double mid = 0.5 * (seg.a + seg.b);
    panels.erase(panels.begin() + static_cast<std::ptrdiff_t>(worst));
    push(seg.a, mid);
    push(mid, seg.b);
  }
}

/// Adaptive integration of f over [a, infinity).
///
/// Integrates the base segment [a, a + s] with s = cfg.tail_decay_scale,
/// then extends by doubling blocks until a block's contribution falls below
/// max(rel_tol*|total|, abs_tol).  The final block magnitude bounds the
/// discarded tail for any integrand decaying at least like 1/x^2 past the
/// scale, and is added to the error estimate.
template <class F>
IntegrationResult integrate_semi_infinite(F&& f, double a,
                                          const QuadratureConfig& cfg) {
  validate(cfg);
  IntegrationResult out;
  if (!(cfg.tail_decay_scale > 0.0) || !std::isfinite(cfg.tail_decay_scale)) {
    out.status = QuadratureStatus::TailUnbounded;
    return out;
  }

  const double s = cfg.tail_decay_scale;
  IntegrationResult base = integrate(f, a, a + s, cfg);
  out.value = base.value;
  out.error = base.error;
  out.subdivisions = base.subdivisions;
  out.truncation_point = a + s;
  if (!base.converged()) {
    out.status = base.status;
    return out;
  }

  double block = s;
  constexpr int kMaxBlocks = 64;
  for (int k = 0; k < kMaxBlocks; ++k) {
    QuadratureConfig block_cfg = cfg;
    block_cfg.abs_tol = std::max(
        cfg.abs_tol, 0.1 * cfg.rel_tol * std::abs(out.value));
    const double lo = out.truncation_point;
    IntegrationResult piece = integrate(f, lo, lo + block, block_cfg);
    out.value += piece.value;
    out.error += piece.error;
    out.subdivisions += piece.subdivisions;
    out.truncation_point = lo + block;
    if (!piece.converged()) {
      out.status = piece.status;
      return out;
    }
    if (std::abs(piece.value) <=
        std::max(cfg.abs_tol, cfg.rel_tol * std::abs(out.value))) {
      out.error += std::abs(piece.value);  // analytic tail bound
      out.status = QuadratureStatus::Converged;
      return out;
    }
    block *= 2.0;
  }
  out.status = QuadratureStatus::NoConvergence;
  return out;
}

}  // namespace rdce

#endif
