// Copyright 2026 The scarsim Authors - All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SCARSIM_SCATTER_HPP
#define SCARSIM_SCATTER_HPP

#include <complex>
#include <iosfwd>
#include <optional>
#include <utility>

#include "scarsim/special_functions.hpp"

namespace scarsim {

// The chiral two-channel scattering problem of the infinite CBG, in the
// rescaled energy variable k = E/sqrt(S). Everything here is built from
// the Gaussian vacuum wavefunction phi(x) = pi^{-1/4} e^{-x^2/2} and the
// three integrals
//   G(k) = int phi(z) e^{ikz} dz
//   H(k,x) = int_{-inf}^{x} phi'(z) e^{-ikz} dz,   H(k) = lim_{x->inf}
//   F(k) = int phi(z) e^{ikz} H(k,z) dz.

/// G(k) = 2^{1/2} pi^{1/4} e^{-k^2/2}; even and real.
double integral_G(double k);

/// H(k) = i k G(k).
std::complex<double> integral_H(double k);

/// Pointwise H(k,x) via the complex error function (x0 -> -infinity).
std::complex<double> integral_H_at(double k, double x);

/// F(k) = 1 - 2 k D(k) + i sqrt(pi) k e^{-k^2}, with D the Dawson
/// integral. This is the exact value of the defining double integral; see
/// integral_F_series for the Hermite-series form it resums.
std::complex<double> integral_F(double k);

struct SeriesEval {
  std::complex<double> value;  // best available partial sum
  int terms_used = 0;
  double last_term = 0.0;      // magnitude of the last term added
  bool converged = false;      // reached tol before the term cap
};

/// Hermite-series expansion of F(k). The series is asymptotic: its terms
/// shrink only down to a k-dependent floor before growing again, so for
/// most k no truncation reaches 1e-14. Summation therefore stops at the
/// smallest term (or at tol, if reached first). Kept as a diagnostic
/// cross-check of integral_F at small |k|; not used in any production
/// path.
SeriesEval integral_F_series(double k, double tol = 1e-14, int max_terms = 300);

/// The main text and the appendix derivation disagree on the closed form
/// of t0 (and on the sign of t1); the variant is fixed by cross-checking
/// against ode_oracle_transmission.
enum class FormulaVariant { appendix, main_text };

const char* to_string(FormulaVariant v);

/// Per-k scattering record.
struct ScatterResult {
  double k;
  double G;
  std::complex<double> H;
  std::complex<double> F;
  std::complex<double> t0;
  std::complex<double> t1;
  double unitarity_residual;  // | |t0|^2 + |t1|^2 - 1 |
  FormulaVariant variant;
};

/// Raw transmission amplitudes from the G/H/F closed forms under the
/// given variant. 0/0 at k = 0; use transmission() for production.
std::pair<std::complex<double>, std::complex<double>> transmission_formula(
    double k, FormulaVariant variant);

struct TransmissionOptions {
  double k_cut = 1e-3;              // below this, the reduced (regular) branch
  double unitarity_tol = 1e-6;
  std::optional<FormulaVariant> variant_override;
};

/// Transmission amplitudes (t0, t1). The raw formulas are 0/0 at k = 0
/// (F(0) = 1, H(0) = 0); below k_cut the algebraically reduced branch
///   t1 = 2 e^{-k^2} / (w(k) (2 + i sqrt(pi) k w(k))),  t0 = 1 - F t1,
/// with w the Faddeeva function, carries the exact limit t0(0) = 0,
/// t1(0) = 1. Unitarity is checked and NumericError thrown past
/// unitarity_tol.
ScatterResult transmission(double k, const TransmissionOptions& opts = {});

/// Independent oracle: solves the coupled chiral equations directly on a
/// uniform x grid by composite-Simpson quadrature (no erf/Dawson/Hermite),
/// closing the 2x2 self-consistency system in the two vacuum overlaps and
/// reading (t0, t1) off the x -> +infinity amplitudes. |k| below 1e-6 is
/// rejected (the self-consistency matrix degenerates at k = 0).
std::pair<std::complex<double>, std::complex<double>> ode_oracle_transmission(
    double k, double x_lo = -8.0, double x_hi = 8.0, double dx = 1e-3);

/// The variant agreeing with the ODE oracle (cached after first call).
FormulaVariant select_formula_variant();

/// P1 = (1/2pi) int |t1(k) A~(k; xi)|^2 dk over k in [-8, 8].
double compute_P1(double xi = 0.0, double abs_tol = 1e-8);

struct GmaxResult {
  double g_max;
  double tau_star;
};

/// g(tau) = |(1/2pi) int e^{ik tau} A~2(k) A~(k)* dk| with
/// A~2 = (t0^2 + t1^2) A~. If tau is given, evaluates there; otherwise
/// maximizes over tau in [0, 2pi) by golden section to 1e-6.
GmaxResult compute_gmax(std::optional<double> tau = std::nullopt, double xi = 0.0);

/// zeta1 = i (1/t1) dt1/dk at k = 0, by Richardson-extrapolated central
/// differences on the regularized branch (steps 1e-2, 5e-3, 2.5e-3).
double compute_zeta1();

struct ScatterFunctionals {
  double P1;
  double g_max;
  double tau_star;
  double g_max_at_2zeta1;
  double zeta1;
  FormulaVariant variant;
};

ScatterFunctionals compute_functionals(double xi = 0.0);

/// CSV over a uniform k grid: columns
/// (k, ReG, ReH, ImH, ReF, ImF, Ret0, Imt0, Ret1, Imt1, unitarity_residual).
void dump_scatter_csv(std::ostream& out, double k_max = 8.0, double dk = 0.005);

}  // namespace scarsim

#endif  // SCARSIM_SCATTER_HPP
