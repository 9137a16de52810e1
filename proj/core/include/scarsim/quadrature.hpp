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

#ifndef SCARSIM_QUADRATURE_HPP
#define SCARSIM_QUADRATURE_HPP

#include <complex>
#include <functional>

namespace scarsim {

/// Adaptive Gauss-Kronrod (G7,K15) quadrature over [a, b]. Panels are
/// bisected until the Kronrod error estimate satisfies the absolute
/// tolerance (distributed proportionally to panel length). Throws
/// NumericError if the recursion depth cap is hit first.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol = 1e-10, int max_depth = 48);

std::complex<double> integrate_adaptive(const std::function<std::complex<double>(double)>& f,
                                        double a, double b, double abs_tol = 1e-10,
                                        int max_depth = 48);

}  // namespace scarsim

#endif  // SCARSIM_QUADRATURE_HPP
