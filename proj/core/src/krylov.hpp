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

#ifndef SCARSIM_SRC_KRYLOV_HPP
#define SCARSIM_SRC_KRYLOV_HPP

#include <complex>
#include <functional>

#include <Eigen/Dense>

namespace scarsim::detail {

using ApplyRef = std::function<void(const Eigen::VectorXcd&, Eigen::VectorXcd&)>;

/// exp(-i t H) v for Hermitian H given through its matvec. Lanczos with
/// full reorthogonalization; the step is subdivided adaptively until the
/// per-step local error estimate beta_m * |[exp(-i dt T)]_{m,1}| drops
/// below tol. Throws NumericError on breakdown of the adaptation.
Eigen::VectorXcd expv_hermitian(const ApplyRef& apply_h, const Eigen::VectorXcd& v,
                                double t, double tol, int krylov_dim);

}  // namespace scarsim::detail

#endif  // SCARSIM_SRC_KRYLOV_HPP
