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

#include "scarsim/scatter.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>
#include <ostream>
#include <vector>

#include "scarsim/errors.hpp"
#include "scarsim/io.hpp"
#include "scarsim/quadrature.hpp"
#include "scarsim/states.hpp"

namespace scarsim {

namespace {

using cd = std::complex<double>;

constexpr double kSqrtPi = 1.7724538509055160273;
constexpr double kPiQuarter = 1.3313353638003897128;  // pi^{1/4}
constexpr cd kI{0.0, 1.0};

double phi_x(double x) { return std::pow(std::numbers::pi, -0.25) * std::exp(-x * x / 2.0); }
double phi_prime(double x) { return -x * phi_x(x); }

}  // namespace

const char* to_string(FormulaVariant v) {
  switch (v) {
    case FormulaVariant::appendix: return "appendix";
    case FormulaVariant::main_text: return "main_text";
  }
  return "?";
}

double integral_G(double k) {
  if (!std::isfinite(k)) throw InvalidInputError("integral_G needs finite k");
  return std::numbers::sqrt2 * kPiQuarter * std::exp(-k * k / 2.0);
}

std::complex<double> integral_H(double k) { return kI * k * integral_G(k); }

std::complex<double> integral_H_at(double k, double x) {
  if (std::abs(x) > 8.0) {
    throw InvalidInputError("integral_H_at is supported for |x| <= 8");
  }
  const cd erf_term = erf_complex(cd(x, k) / std::numbers::sqrt2);
  return phi_x(x) * std::exp(-kI * k * x) +
         kI * k * (kPiQuarter / std::numbers::sqrt2) * std::exp(-k * k / 2.0) * (erf_term + 1.0);
}

std::complex<double> integral_F(double k) {
  if (!std::isfinite(k)) throw InvalidInputError("integral_F needs finite k");
  // The defining double integral evaluates exactly to
  //   F(k) = 1 - 2 k D(k) + i sqrt(pi) k e^{-k^2}:
  // substituting the erf form of H(k,x) leaves a single Gaussian-times-erf
  // integral, which closes to sqrt(2 pi) e^{-k^2/2} erf(ik), i.e. a Dawson
  // term. This resums the asymptotic Hermite series of integral_F_series.
  return cd(1.0 - 2.0 * k * dawson(k), kSqrtPi * k * std::exp(-k * k));
}

SeriesEval integral_F_series(double k, double tol, int max_terms) {
  if (max_terms < 1 || max_terms > 300) {
    throw InvalidInputError("series term cap must lie in [1, 300]");
  }
  const cd prefactor = -kI * 2.0 * k * std::exp(-k * k / 2.0);
  const cd arg_im = kI * k / std::numbers::sqrt2;
  const double arg_re = k / std::numbers::sqrt2;
  SeriesEval out;
  cd sum = 0.0;
  cd best_sum = 0.0;
  double best_term = std::numeric_limits<double>::infinity();
  int best_n = 0;
  cd pow_2i = 1.0;      // (2i)^n
  double factorial = 1.0;  // n!
  for (int n = 1; n <= max_terms; ++n) {
    pow_2i *= 2.0 * kI;
    factorial *= n;
    const cd term = hermite(n - 1, arg_im) * hermite(n, arg_re) / (pow_2i * factorial);
    sum += term;
    const double mag = std::abs(term);
    out.terms_used = n;
    out.last_term = mag;
    // asymptotic series: track the partial sum at the smallest term
    if (mag < best_term) {
      best_term = mag;
      best_sum = sum;
      best_n = n;
    }
    if (mag < tol) {
      out.converged = true;
      break;
    }
    if (mag > 1e6 * best_term && n > best_n + 5) break;  // clearly diverging
  }
  const cd series_part = out.converged ? sum : best_sum;
  if (!out.converged) {
    out.terms_used = best_n;
    out.last_term = best_term;
  }
  out.value = cd(1.0, kSqrtPi * k * std::exp(-k * k)) -
              2.0 * k * std::exp(-k * k / 2.0) * dawson(k / std::numbers::sqrt2) +
              prefactor * series_part;
  return out;
}

std::pair<cd, cd> transmission_formula(double k, FormulaVariant variant) {
  const double g = integral_G(k);
  const cd h = integral_H(k);
  const cd f = integral_F(k);
  const cd den = 1.0 - f * f;
  if (std::abs(den) < 1e-300) {
    throw NumericError("transmission formula is singular at this k");
  }
  if (variant == FormulaVariant::appendix) {
    return {1.0 + g * f * h / den, -g * h / den};
  }
  return {(1.0 + g * f * h) / den, g * h / den};
}

namespace {

/// Algebraically reduced amplitudes, regular at k = 0:
///   u = i sqrt(pi) k w(k),  F = 1 + u,
///   t1 = 2 e^{-k^2} / (w (2 + u)),  t0 = 1 - F t1.
/// Identical to the appendix variant wherever both are defined.
std::pair<cd, cd> transmission_reduced(double k) {
  const cd w = faddeeva_w(cd(k, 0.0));
  const cd u = kI * kSqrtPi * k * w;
  const cd f = 1.0 + u;
  const cd t1 = 2.0 * std::exp(-k * k) / (w * (2.0 + u));
  return {1.0 - f * t1, t1};
}

std::once_flag g_variant_once;
FormulaVariant g_variant = FormulaVariant::appendix;

}  // namespace

std::pair<cd, cd> ode_oracle_transmission(double k, double x_lo, double x_hi, double dx) {
  if (std::abs(k) < 1e-6) {
    throw InvalidInputError("oracle self-consistency degenerates below |k| = 1e-6");
  }
  if (!(x_lo < 0.0 && x_hi > 0.0) || dx > 1e-3 + 1e-15 || dx <= 0.0) {
    throw InvalidInputError("oracle grid must span x = 0 with spacing <= 1e-3");
  }
  std::size_t n = static_cast<std::size_t>(std::ceil((x_hi - x_lo) / dx));
  if (n % 2 == 1) ++n;  // even interval count for Simpson
  const double h = (x_hi - x_lo) / static_cast<double>(n);

  // integrand of H(k,x) and cumulative Simpson along the grid; odd nodes
  // get the partial-interval rule through the surrounding three points
  std::vector<cd> hk(n + 1);
  std::vector<cd> f_phi_eik(n + 1);
  {
    std::vector<cd> integ(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
      const double x = x_lo + h * static_cast<double>(i);
      integ[i] = phi_prime(x) * std::exp(-kI * k * x);
      f_phi_eik[i] = phi_x(x) * std::exp(kI * k * x);
    }
    hk[0] = 0.0;
    for (std::size_t i = 2; i <= n; i += 2) {
      hk[i] = hk[i - 2] + (h / 3.0) * (integ[i - 2] + 4.0 * integ[i - 1] + integ[i]);
    }
    for (std::size_t i = 1; i <= n; i += 2) {
      hk[i] = hk[i - 1] + (h / 12.0) * (5.0 * integ[i - 1] + 8.0 * integ[i] - integ[i + 1]);
    }
  }

  // G and F by composite Simpson on the same grid
  cd g_quad = 0.0, f_quad = 0.0;
  for (std::size_t i = 0; i + 2 <= n; i += 2) {
    g_quad += (h / 3.0) * (f_phi_eik[i] + 4.0 * f_phi_eik[i + 1] + f_phi_eik[i + 2]);
    f_quad += (h / 3.0) * (f_phi_eik[i] * hk[i] + 4.0 * f_phi_eik[i + 1] * hk[i + 1] +
                           f_phi_eik[i + 2] * hk[i + 2]);
  }

  // close the 2x2 self-consistency system for a = <phi|A>, b = <phi|B>
  // with incoming amplitude A(x_lo) = 1
  const cd den = 1.0 - f_quad * f_quad;
  if (std::abs(den) < 1e-12) {
    throw NumericError("singular self-consistency matrix in the scattering oracle");
  }
  const cd ein = std::exp(-kI * k * x_lo);
  const cd a = ein * g_quad / den;
  const cd b = -a * f_quad;
  // A(x) = e^{ik(x-x_lo)} - b e^{ikx} H(k,x); read off at x_hi
  const cd t0 = 1.0 - b * std::exp(kI * k * x_lo) * hk[n];
  const cd t1 = -a * std::exp(kI * k * x_lo) * hk[n];
  return {t0, t1};
}

FormulaVariant select_formula_variant() {
  std::call_once(g_variant_once, [] {
    const double ks[] = {0.1, 0.5, 1.0, 2.0, 4.0};
    double worst_app = 0.0, worst_main = 0.0;
    for (double k : ks) {
      const auto oracle = ode_oracle_transmission(k);
      const auto app = transmission_formula(k, FormulaVariant::appendix);
      const auto main = transmission_formula(k, FormulaVariant::main_text);
      worst_app = std::max({worst_app, std::abs(app.first - oracle.first),
                            std::abs(app.second - oracle.second)});
      worst_main = std::max({worst_main, std::abs(main.first - oracle.first),
                             std::abs(main.second - oracle.second)});
    }
    g_variant = worst_app <= worst_main ? FormulaVariant::appendix : FormulaVariant::main_text;
  });
  return g_variant;
}

ScatterResult transmission(double k, const TransmissionOptions& opts) {
  if (std::abs(k) > 8.0) {
    throw InvalidInputError("transmission is evaluated on |k| <= 8");
  }
  const FormulaVariant variant =
      opts.variant_override ? *opts.variant_override : select_formula_variant();
  ScatterResult r;
  r.k = k;
  r.G = integral_G(k);
  r.H = integral_H(k);
  r.F = integral_F(k);
  r.variant = variant;
  if (std::abs(k) < opts.k_cut) {
    // the raw formulas are 0/0 at k = 0; use the reduced branch, possibly
    // sign-adjusted to the selected variant (t1 flips between the two)
    auto [t0, t1] = transmission_reduced(k);
    if (variant == FormulaVariant::main_text) t1 = -t1;
    r.t0 = t0;
    r.t1 = t1;
  } else {
    auto [t0, t1] = transmission_formula(k, variant);
    r.t0 = t0;
    r.t1 = t1;
  }
  r.unitarity_residual = std::abs(std::norm(r.t0) + std::norm(r.t1) - 1.0);
  if (r.unitarity_residual > opts.unitarity_tol) {
    throw NumericError("transmission amplitudes violate unitarity; residual " +
                       std::to_string(r.unitarity_residual));
  }
  return r;
}

namespace {

cd a2_over_a(double k) {
  const auto [t0, t1] = transmission_reduced(k);
  return t0 * t0 + t1 * t1;
}

double gmax_at_tau(double tau, double xi) {
  const cd val = integrate_adaptive(
      [tau, xi](double k) {
        const double a = squeezed_momentum_amplitude(xi, k);
        return std::exp(kI * k * tau) * a2_over_a(k) * (a * a);
      },
      -8.0, 8.0, 1e-10);
  return std::abs(val) / (2.0 * std::numbers::pi);
}

}  // namespace

double compute_P1(double xi, double abs_tol) {
  const double v = integrate_adaptive(
      [xi](double k) {
        const auto [t0, t1] = transmission_reduced(k);
        (void)t0;
        const double a = squeezed_momentum_amplitude(xi, k);
        return std::norm(t1) * a * a;
      },
      -8.0, 8.0, abs_tol);
  return v / (2.0 * std::numbers::pi);
}

GmaxResult compute_gmax(std::optional<double> tau, double xi) {
  if (tau) {
    return {gmax_at_tau(*tau, xi), *tau};
  }
  // golden-section maximization over [0, 2 pi)
  constexpr double inv_phi = 0.6180339887498949;
  double a = 0.0, b = 2.0 * std::numbers::pi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = gmax_at_tau(c, xi), fd = gmax_at_tau(d, xi);
  while (b - a > 1e-6) {
    if (fc > fd) {
      b = d; d = c; fd = fc;
      c = b - inv_phi * (b - a);
      fc = gmax_at_tau(c, xi);
    } else {
      a = c; c = d; fc = fd;
      d = a + inv_phi * (b - a);
      fd = gmax_at_tau(d, xi);
    }
  }
  const double tau_star = 0.5 * (a + b);
  return {gmax_at_tau(tau_star, xi), tau_star};
}

double compute_zeta1() {
  // zeta1 = i (1/t1) dt1/dk at k = 0 on the regular branch, Richardson
  // extrapolation of central differences over a 3-step halving sweep
  const cd t1_0 = transmission_reduced(0.0).second;
  auto fd = [&](double h) {
    const cd tp = transmission_reduced(h).second;
    const cd tm = transmission_reduced(-h).second;
    return kI * (tp - tm) / (2.0 * h) / t1_0;
  };
  const cd z1 = fd(1e-2);
  const cd z2 = fd(5e-3);
  const cd z3 = fd(2.5e-3);
  const cd r1 = (4.0 * z2 - z1) / 3.0;
  const cd r2 = (4.0 * z3 - z2) / 3.0;
  const cd out = (16.0 * r2 - r1) / 15.0;
  if (std::abs(out.imag()) > 1e-6) {
    throw NumericError("zeta1 extrapolation produced a non-real phase derivative");
  }
  if (std::abs(out - r2) > 1e-5) {
    throw NumericError("zeta1 Richardson extrapolation did not settle");
  }
  return out.real();
}

ScatterFunctionals compute_functionals(double xi) {
  ScatterFunctionals out{};
  out.variant = select_formula_variant();
  out.P1 = compute_P1(xi);
  const GmaxResult best = compute_gmax(std::nullopt, xi);
  out.g_max = best.g_max;
  out.tau_star = best.tau_star;
  out.zeta1 = compute_zeta1();
  out.g_max_at_2zeta1 = compute_gmax(2.0 * out.zeta1, xi).g_max;
  return out;
}

void dump_scatter_csv(std::ostream& out, double k_max, double dk) {
  if (k_max <= 0.0 || k_max > 8.0 || dk <= 0.0) {
    throw InvalidInputError("scatter grid must satisfy 0 < k_max <= 8, dk > 0");
  }
  out << "k,ReG,ReH,ImH,ReF,ImF,Ret0,Imt0,Ret1,Imt1,unitarity_residual\n";
  const auto n = static_cast<long>(std::llround(k_max / dk));
  for (long i = -n; i <= n; ++i) {
    const double k = static_cast<double>(i) * dk;
    const ScatterResult r = transmission(k);
    out << fmt_data(k) << ',' << fmt_data(r.G) << ',' << fmt_data(r.H.real()) << ','
        << fmt_data(r.H.imag()) << ',' << fmt_data(r.F.real()) << ',' << fmt_data(r.F.imag())
        << ',' << fmt_data(r.t0.real()) << ',' << fmt_data(r.t0.imag()) << ','
        << fmt_data(r.t1.real()) << ',' << fmt_data(r.t1.imag()) << ','
        << fmt_data(r.unitarity_residual) << '\n';
  }
}

}  // namespace scarsim
