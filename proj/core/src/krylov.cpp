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

#include "krylov.hpp"

#include <algorithm>
#include <cmath>

#include "scarsim/errors.hpp"

namespace scarsim::detail {

namespace {

struct LanczosBasis {
  Eigen::MatrixXcd v;      // n x m orthonormal
  Eigen::VectorXd alpha;   // m diagonal entries
  Eigen::VectorXd beta;    // m-1 off-diagonal + trailing residual norm
  int m = 0;               // effective dimension
  double beta0 = 0.0;      // norm of the input vector
  bool invariant = false;  // happy breakdown: Krylov space is H-invariant
};

LanczosBasis lanczos(const ApplyRef& apply_h, const Eigen::VectorXcd& x, int m_max) {
  const auto n = x.size();
  LanczosBasis out;
  out.beta0 = x.norm();
  if (out.beta0 == 0.0) {
    out.invariant = true;
    return out;
  }
  out.v.resize(n, m_max);
  out.alpha.resize(m_max);
  out.beta.resize(m_max);
  out.v.col(0) = x / out.beta0;
  Eigen::VectorXcd w(n);
  for (int j = 0; j < m_max; ++j) {
    apply_h(out.v.col(j), w);
    out.alpha[j] = out.v.col(j).dot(w).real();
    w -= out.alpha[j] * out.v.col(j);
    if (j > 0) w -= out.beta[j - 1] * out.v.col(j - 1);
    // full reorthogonalization; m stays small so this is cheap
    for (int i = 0; i <= j; ++i) w -= out.v.col(i).dot(w) * out.v.col(i);
    const double b = w.norm();
    out.beta[j] = b;
    out.m = j + 1;
    if (b < 1e-14 * out.beta0) {
      out.invariant = true;
      return out;
    }
    if (j + 1 < m_max) out.v.col(j + 1) = w / b;
  }
  return out;
}

/// exp(-i dt T) e1 for the tridiagonal T held in (alpha, beta).
Eigen::VectorXcd exp_tridiag_e1(const Eigen::VectorXd& alpha, const Eigen::VectorXd& beta,
                                int m, double dt) {
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
  for (int i = 0; i < m; ++i) {
    t(i, i) = alpha[i];
    if (i + 1 < m) t(i, i + 1) = t(i + 1, i) = beta[i];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
  const Eigen::VectorXd& lam = es.eigenvalues();
  const Eigen::MatrixXd& q = es.eigenvectors();
  Eigen::VectorXcd phase(m);
  for (int i = 0; i < m; ++i) {
    phase[i] = std::exp(std::complex<double>(0.0, -dt * lam[i]));
  }
  return q * (phase.array() * q.row(0).transpose().array().cast<std::complex<double>>()).matrix();
}

}  // namespace

Eigen::VectorXcd expv_hermitian(const ApplyRef& apply_h, const Eigen::VectorXcd& v,
                                double t, double tol, int krylov_dim) {
  if (tol <= 0.0) throw NumericError("krylov tolerance must be positive");
  if (krylov_dim < 2) throw NumericError("krylov subspace dimension must be >= 2");
  Eigen::VectorXcd psi = v;
  if (t == 0.0 || psi.norm() == 0.0) return psi;

  const double sign = t < 0.0 ? -1.0 : 1.0;
  double remaining = std::abs(t);
  double dt = remaining;
  int halvings = 0;
  while (remaining > 0.0) {
    dt = std::min(dt, remaining);
    const LanczosBasis lb = lanczos(apply_h, psi, krylov_dim);
    if (lb.beta0 == 0.0) break;
    if (lb.invariant) {
      // exact in the invariant subspace for any step length
      const Eigen::VectorXcd y = exp_tridiag_e1(lb.alpha, lb.beta, lb.m, sign * remaining);
      psi = lb.beta0 * (lb.v.leftCols(lb.m) * y);
      return psi;
    }
    const Eigen::VectorXcd y = exp_tridiag_e1(lb.alpha, lb.beta, lb.m, sign * dt);
    const double err_est = lb.beta[lb.m - 1] * std::abs(y[lb.m - 1]) * dt;
    if (err_est > tol) {
      dt *= 0.5;
      if (++halvings > 60) {
        throw NumericError("krylov propagation failed to reach tolerance; residual " +
                           std::to_string(err_est));
      }
      continue;
    }
    psi = lb.beta0 * (lb.v.leftCols(lb.m) * y);
    remaining -= dt;
    if (err_est < 0.1 * tol) dt *= 1.8;  // step-size growth when comfortably converged
  }
  return psi;
}

}  // namespace scarsim::detail
