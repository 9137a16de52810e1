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

#include "scarsim/special_functions.hpp"

#include <cmath>
#include <numbers>

#include "scarsim/errors.hpp"

namespace scarsim {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

// --- Dawson -----------------------------------------------------------------

double dawson_maclaurin(double x) {
  // D(x) = sum_{n>=0} (-2)^n x^{2n+1} / (2n+1)!!
  const double x2 = x * x;
  double term = x;
  double sum = x;
  for (int n = 1; n < 40; ++n) {
    term *= -2.0 * x2 / (2 * n + 1);
    sum += term;
    if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

double dawson_rybicki(double x) {
  // Exponentially accurate sampling of the defining Hilbert transform on a
  // midpoint grid of odd multiples of h, centered near x (Rybicki 1989).
  constexpr double h = 0.2;
  constexpr int half_width = 60;  // odd offsets; e^{-(60*0.2)^2} ~ 1e-63
  int nc = static_cast<int>(std::lround(x / h));
  if (nc % 2 == 0) nc += 1;
  double sum = 0.0;
  for (int dn = -half_width; dn <= half_width; dn += 2) {
    const int n = nc + dn;
    if (n == 0) continue;
    const double d = x - n * h;
    sum += std::exp(-d * d) / n;
  }
  return sum / kSqrtPi;
}

// --- Faddeeva ---------------------------------------------------------------

constexpr double kFaddeevaH = 0.35;
constexpr double kAxisBand = 0.05;  // |Im z| below this: Taylor off the real axis

/// w on the real axis: e^{-x^2} + 2i D(x)/sqrt(pi).
std::complex<double> faddeeva_real(double x) {
  return {std::exp(-x * x), 2.0 * dawson(x) / kSqrtPi};
}

/// Midpoint-trapezoidal sum plus the image-pole correction; Im z >= 0.
std::complex<double> faddeeva_upper(std::complex<double> z) {
  constexpr double h = kFaddeevaH;
  constexpr double t_max = 11.5;
  const int n_max = static_cast<int>(t_max / h);
  std::complex<double> sum = 0.0;
  for (int n = -n_max; n < n_max; ++n) {
    const double t = (n + 0.5) * h;
    sum += std::exp(-t * t) / (z - t);
  }
  sum *= std::complex<double>(0.0, h / std::numbers::pi);
  const std::complex<double> q = std::exp(std::complex<double>(0.0, 2.0 * std::numbers::pi / h) * z);
  return sum + 2.0 * std::exp(-z * z) * q / (1.0 + q);
}

/// Taylor continuation from the real axis, using the exact derivative
/// recurrence w' = -2 z w + 2i/sqrt(pi), w^{(n+1)} = -2 z w^{(n)} - 2 n w^{(n-1)}.
std::complex<double> faddeeva_near_axis(std::complex<double> z) {
  const double x = z.real();
  constexpr int terms = 12;
  std::complex<double> der[terms + 1];
  der[0] = faddeeva_real(x);
  der[1] = -2.0 * x * der[0] + std::complex<double>(0.0, 2.0 / kSqrtPi);
  for (int n = 1; n < terms; ++n) {
    der[n + 1] = -2.0 * x * der[n] - 2.0 * static_cast<double>(n) * der[n - 1];
  }
  const std::complex<double> dz(0.0, z.imag());
  std::complex<double> sum = 0.0;
  std::complex<double> f = 1.0;
  for (int n = 0; n <= terms; ++n) {
    if (n > 0) f *= dz / static_cast<double>(n);
    sum += der[n] * f;
  }
  return sum;
}

}  // namespace

double dawson(double x) {
  if (!std::isfinite(x)) throw InvalidInputError("dawson needs a finite argument");
  return std::abs(x) < 1.0 ? dawson_maclaurin(x) : dawson_rybicki(x);
}

std::complex<double> faddeeva_w(std::complex<double> z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw InvalidInputError("faddeeva_w needs a finite argument");
  }
  if (std::abs(z.imag()) < kAxisBand) return faddeeva_near_axis(z);
  if (z.imag() > 0.0) return faddeeva_upper(z);
  // lower half plane via w(z) + w(-z) = 2 e^{-z^2}
  return 2.0 * std::exp(-z * z) - faddeeva_upper(-z);
}

std::complex<double> erf_complex(std::complex<double> z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw InvalidInputError("erf_complex needs a finite argument");
  }
  if (std::abs(z.imag()) > 12.0) {
    // e^{Im^2 - Re^2} can overflow past here; the H(k,x) strip stays well inside
    throw InvalidInputError("erf_complex argument outside the supported strip |Im z| <= 12");
  }
  if (z.real() < 0.0) return -erf_complex(-z);
  if (std::norm(z) < 1.0) {
    // Maclaurin: erf(z) = 2/sqrt(pi) sum (-1)^n z^{2n+1} / (n! (2n+1))
    const std::complex<double> z2 = z * z;
    std::complex<double> term = z;
    std::complex<double> sum = z;
    for (int n = 1; n < 40; ++n) {
      term *= -z2 / static_cast<double>(n);
      sum += term / static_cast<double>(2 * n + 1);
      if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
    }
    return 2.0 / kSqrtPi * sum;
  }
  // erf(z) = 1 - e^{-z^2} w(iz); Re z >= 0 puts iz in the upper half plane
  const std::complex<double> iz(-z.imag(), z.real());
  return 1.0 - std::exp(-z * z) * faddeeva_w(iz);
}

std::complex<double> hermite(int n, std::complex<double> z) {
  if (n < 0 || n > 400) {
    throw InvalidInputError("hermite order must lie in [0, 400]");
  }
  std::complex<double> hm = 1.0;  // H_0
  if (n == 0) return hm;
  std::complex<double> hc = 2.0 * z;  // H_1
  for (int k = 1; k < n; ++k) {
    const std::complex<double> hn = 2.0 * z * hc - 2.0 * static_cast<double>(k) * hm;
    hm = hc;
    hc = hn;
    if (std::abs(hc.real()) > 1e290 || std::abs(hc.imag()) > 1e290) {
      throw NumericError("hermite recurrence overflow at n = " + std::to_string(k + 1));
    }
  }
  return hc;
}

}  // namespace scarsim
