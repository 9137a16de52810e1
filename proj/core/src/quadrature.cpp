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

#include "scarsim/quadrature.hpp"

#include <cmath>
#include <vector>

#include "scarsim/errors.hpp"

namespace scarsim {

namespace {

// 15-point Kronrod abscissae (one symmetric half, descending) and weights,
// with the embedded 7-point Gauss weights on the odd-indexed nodes.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <typename T>
struct PanelResult {
  T kronrod;
  double error;
};

template <typename T>
PanelResult<T> g7k15(const std::function<T(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double hl = 0.5 * (b - a);
  const T fc = f(c);
  T k15 = kWgk[7] * fc;
  T g7 = kWg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = hl * kXgk[i];
    const T fsum = f(c - dx) + f(c + dx);
    k15 += kWgk[i] * fsum;
    if (i % 2 == 1) g7 += kWg[i / 2] * fsum;
  }
  k15 *= hl;
  g7 *= hl;
  return {k15, std::abs(k15 - g7)};
}

template <typename T>
T integrate_impl(const std::function<T(double)>& f, double a, double b, double abs_tol,
                 int max_depth) {
  if (!(a < b)) {
    if (a == b) return T{};
    throw InvalidInputError("integration bounds must satisfy a <= b");
  }
  struct Frame {
    double a, b, tol;
    int depth;
  };
  T total{};
  std::vector<Frame> stack{{a, b, abs_tol, 0}};
  while (!stack.empty()) {
    const Frame fr = stack.back();
    stack.pop_back();
    const PanelResult<T> r = g7k15(f, fr.a, fr.b);
    if (r.error <= fr.tol || r.error <= 1e-300) {
      total += r.kronrod;
      continue;
    }
    if (fr.depth >= max_depth) {
      throw NumericError("adaptive quadrature failed to converge; panel error " +
                         std::to_string(r.error));
    }
    const double m = 0.5 * (fr.a + fr.b);
    stack.push_back({fr.a, m, fr.tol / 2, fr.depth + 1});
    stack.push_back({m, fr.b, fr.tol / 2, fr.depth + 1});
  }
  return total;
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, int max_depth) {
  return integrate_impl<double>(f, a, b, abs_tol, max_depth);
}

std::complex<double> integrate_adaptive(const std::function<std::complex<double>(double)>& f,
                                        double a, double b, double abs_tol, int max_depth) {
  return integrate_impl<std::complex<double>>(f, a, b, abs_tol, max_depth);
}

}  // namespace scarsim
