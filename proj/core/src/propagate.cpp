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

#include "scarsim/propagate.hpp"

#include <cmath>
#include <numbers>
#include <ostream>

#include "krylov.hpp"
#include "scarsim/errors.hpp"
#include "scarsim/io.hpp"

namespace scarsim {

const char* to_string(Engine engine) {
  switch (engine) {
    case Engine::dense_eig: return "dense_eig";
    case Engine::krylov: return "krylov";
  }
  return "?";
}

void Trajectory::dump_csv(std::ostream& out, const std::map<std::string, std::string>& meta) const {
  for (const auto& [k, v] : meta) {
    out << "# " << k << ": " << v << "\n";
  }
  const bool channels = !p_A.empty();
  out << (channels ? "t,g,p_A,p_B,p_vac" : "t,g") << "\n";
  for (std::size_t i = 0; i < times.size(); ++i) {
    out << fmt_data(times[i]) << ',' << fmt_data(fidelity[i]);
    if (channels) {
      out << ',' << fmt_data(p_A[i]) << ',' << fmt_data(p_B[i]) << ',' << fmt_data(p_vac[i]);
    }
    out << '\n';
  }
}

namespace {

void record_sample(Trajectory& traj, const StateVector& psi0, const Eigen::VectorXcd& psi,
                   const EvolveOptions& opts) {
  traj.fidelity.push_back(std::abs(psi0.amplitudes.dot(psi)));
  if (opts.store_states) traj.states.push_back(psi);
  if (opts.record_channels) {
    StateVector s;
    s.basis_tag = BasisTag::dicke_sector;
    s.amplitudes = psi;
    const ChannelPopulations p = channel_populations(s);
    traj.p_A.push_back(p.p_A);
    traj.p_B.push_back(p.p_B);
    traj.p_vac.push_back(p.p_vac);
  }
}

}  // namespace

Trajectory evolve(const SparseOperator& hamiltonian, const StateVector& psi0,
                  const std::vector<double>& times, const EvolveOptions& opts) {
  if (hamiltonian.hermiticity() != Hermiticity::hermitian) {
    throw InvalidInputError("evolve requires a Hermitian operator");
  }
  if (hamiltonian.dim() != psi0.dim()) {
    throw InvalidInputError("Hamiltonian/state dimension mismatch");
  }
  if (hamiltonian.basis_tag() != psi0.basis_tag) {
    throw InvalidInputError("Hamiltonian/state basis mismatch");
  }
  if (times.empty()) throw InvalidInputError("empty time grid");
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (times[i] < 0.0 || (i > 0 && times[i] < times[i - 1])) {
      throw InvalidInputError("time grid must be nonnegative and nondecreasing");
    }
  }
  if (opts.record_channels && psi0.basis_tag != BasisTag::dicke_sector) {
    throw InvalidInputError("channel populations are defined for sector states");
  }

  Trajectory traj;
  traj.times = times;
  traj.fidelity.reserve(times.size());

  if (opts.engine == Engine::dense_eig) {
    if (hamiltonian.dim() > kDenseEigCap) {
      throw ResourceError("dense_eig engine is capped at dim 4096");
    }
    const Eigen::MatrixXcd h = hamiltonian.to_dense();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    if (es.info() != Eigen::Success) {
      throw NumericError("eigendecomposition failed");
    }
    const Eigen::VectorXd& lam = es.eigenvalues();
    const Eigen::MatrixXcd& v = es.eigenvectors();
    const Eigen::VectorXcd c = v.adjoint() * psi0.amplitudes;
    Eigen::VectorXcd phase(lam.size()), psi;
    for (double t : times) {
      for (Eigen::Index i = 0; i < lam.size(); ++i) {
        phase[i] = std::exp(std::complex<double>(0.0, -lam[i] * t));
      }
      psi = v * (phase.array() * c.array()).matrix();
      record_sample(traj, psi0, psi, opts);
    }
    return traj;
  }

  // krylov
  if (opts.tol <= 0.0) throw InvalidInputError("krylov engine requires tol > 0");
  detail::ApplyRef apply_h = [&hamiltonian](const Eigen::VectorXcd& in, Eigen::VectorXcd& out) {
    hamiltonian.apply(in, out);
  };
  Eigen::VectorXcd psi = psi0.amplitudes;
  double t_prev = 0.0;
  for (double t : times) {
    const double dt = t - t_prev;
    if (dt > 0.0) {
      psi = detail::expv_hermitian(apply_h, psi, dt, opts.tol, opts.krylov_dim);
    }
    t_prev = t;
    record_sample(traj, psi0, psi, opts);
  }
  return traj;
}

std::vector<double> fidelity_series(const Trajectory& traj, const StateVector& psi0) {
  if (traj.states.empty()) {
    throw InvalidInputError("fidelity_series needs stored snapshots");
  }
  std::vector<double> g;
  g.reserve(traj.states.size());
  for (const auto& s : traj.states) {
    g.push_back(std::abs(psi0.amplitudes.dot(s)));
  }
  return g;
}

ChannelPopulations channel_populations(const StateVector& sector_state) {
  if (sector_state.basis_tag != BasisTag::dicke_sector) {
    throw InvalidInputError("channel_populations expects a Dicke-sector state");
  }
  const std::size_t dim = sector_state.dim();
  if (dim < 5 || dim % 2 == 0) {
    throw InvalidInputError("sector dimension must be odd (N + 1 with N even)");
  }
  const std::size_t half = (dim - 1) / 2;  // N/2
  ChannelPopulations out{0.0, 0.0, std::norm(sector_state.amplitudes[0])};
  for (std::size_t i = 1; i <= half; ++i) {
    out.p_A += std::norm(sector_state.amplitudes[static_cast<Eigen::Index>(i)]);
  }
  for (std::size_t i = half + 1; i < dim; ++i) {
    out.p_B += std::norm(sector_state.amplitudes[static_cast<Eigen::Index>(i)]);
  }
  return out;
}

RevivalPeak find_first_revival(std::span<const double> g, std::span<const double> times,
                               double window_lo, double window_hi) {
  if (g.size() != times.size() || g.empty()) {
    throw InvalidInputError("fidelity/time arrays must match and be nonempty");
  }
  if (window_lo >= window_hi) throw InvalidInputError("empty revival window");
  if (window_lo < times.front() - 1e-12 || window_hi > times.back() + 1e-12) {
    throw InvalidInputError("revival window outside the sampled range");
  }
  std::size_t best = g.size();
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (times[i] < window_lo || times[i] > window_hi) continue;
    if (i + 1 < times.size()) {
      const double dt = times[i + 1] - times[i];
      if (dt > 0.05 + 1e-12) {
        throw InvalidInputError("grid too coarse for peak refinement (need >= 20 samples per 1/Omega)");
      }
    }
    if (best == g.size() || g[i] > g[best]) best = i;
  }
  if (best == g.size()) throw InvalidInputError("no samples inside the revival window");

  RevivalPeak peak{times[best], g[best]};
  if (best > 0 && best + 1 < g.size()) {
    // local parabola through the three samples removes grid-quantization bias
    const double y0 = g[best - 1], y1 = g[best], y2 = g[best + 1];
    const double denom = y0 - 2.0 * y1 + y2;
    if (denom < 0.0) {
      const double delta = 0.5 * (y0 - y2) / denom;
      if (std::abs(delta) <= 1.0) {
        const double dt = times[best + 1] - times[best];
        peak.t_peak = times[best] + delta * dt;
        peak.g_max = y1 - 0.25 * (y0 - y2) * delta;
      }
    }
  }
  return peak;
}

double numeric_P1(int n_sites, Engine engine, double tol) {
  if (n_sites < 8 || n_sites % 2 != 0) {
    throw InvalidInputError("numeric_P1 needs an even CBG size >= 8");
  }
  const SpinSector sector(n_sites);
  const SparseOperator h = build_cbg_sector_hamiltonian(sector);
  const StateVector psi0 = z2_state(sector, Partition::A);
  EvolveOptions opts;
  opts.engine = engine;
  opts.tol = tol;
  opts.store_states = true;
  const Trajectory traj = evolve(h, psi0, {2.0 * std::numbers::pi}, opts);
  StateVector final_state;
  final_state.basis_tag = BasisTag::dicke_sector;
  final_state.amplitudes = traj.states.back();
  return channel_populations(final_state).p_B;
}

P1Extrapolation numeric_P1_extrapolated(std::span<const int> sizes, Engine engine, double tol) {
  if (sizes.size() < 3) {
    throw InvalidInputError("extrapolation needs at least three sizes");
  }
  P1Extrapolation out;
  for (int n : sizes) {
    out.samples.emplace_back(n, numeric_P1(n, engine, tol));
  }
  std::sort(out.samples.begin(), out.samples.end());
  // linear fit p_B = a + b/sqrt(N) over the largest three sizes; the
  // scattering window shrinks as 1/sqrt(N)
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const std::size_t m = out.samples.size();
  for (std::size_t i = m - 3; i < m; ++i) {
    const double x = 1.0 / std::sqrt(static_cast<double>(out.samples[i].first));
    const double y = out.samples[i].second;
    sx += x; sy += y; sxx += x * x; sxy += x * y;
  }
  const double denom = 3.0 * sxx - sx * sx;
  out.extrapolated = (sy * sxx - sx * sxy) / denom;
  return out;
}

std::vector<double> default_time_grid(double dt, double t_max) {
  if (dt <= 0.0 || t_max < 0.0) throw InvalidInputError("invalid time grid parameters");
  const auto n = static_cast<std::size_t>(std::llround(t_max / dt));
  std::vector<double> t(n + 1);
  for (std::size_t i = 0; i <= n; ++i) t[i] = static_cast<double>(i) * dt;
  return t;
}

}  // namespace scarsim
