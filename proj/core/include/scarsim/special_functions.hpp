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

#ifndef SCARSIM_SPECIAL_FUNCTIONS_HPP
#define SCARSIM_SPECIAL_FUNCTIONS_HPP

#include <complex>

namespace scarsim {

/// Faddeeva function w(z) = e^{-z^2} erfc(-iz).
///
/// Evaluated by the midpoint-trapezoidal representation of the Hilbert
/// transform of a Gaussian (Chiarella-Reichel), with the image-pole
/// correction term; the quadrature error is O(e^{-pi^2/h^2}) and thus far
/// below double precision at h = 0.35. Near the real axis, where the pole
/// correction becomes ill-conditioned, a Taylor continuation from the
/// real-axis value w(x) = e^{-x^2} + 2i D(x)/sqrt(pi) is used instead
/// (derivatives from the recurrence w' = -2 z w + 2i/sqrt(pi)).
std::complex<double> faddeeva_w(std::complex<double> z);

/// Complex error function, accurate to ~1e-13 relative on the strip
/// |Im z| <= 12 (the H(k,x) evaluations use |Im z| <= 8/sqrt(2)).
/// Arguments further from the real axis overflow the intermediate
/// e^{-z^2} factor and are rejected.
std::complex<double> erf_complex(std::complex<double> z);

/// Dawson integral D(x) = e^{-x^2} int_0^x e^{t^2} dt. Maclaurin series
/// below |x| = 1, Rybicki's exponentially convergent midpoint sum above.
double dawson(double x);

/// Physicists' Hermite polynomial by the three-term recurrence
/// H_{n+1} = 2 z H_n - 2 n H_{n-1}. n is capped at 400; intermediate
/// overflow raises NumericError.
std::complex<double> hermite(int n, std::complex<double> z);

}  // namespace scarsim

#endif  // SCARSIM_SPECIAL_FUNCTIONS_HPP
