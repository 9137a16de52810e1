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

#ifndef SCARSIM_PROPAGATE_HPP
#define SCARSIM_PROPAGATE_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "scarsim/operators.hpp"
#include "scarsim/states.hpp"

namespace scarsim {

enum class Engine { dense_eig, krylov };

const char* to_string(Engine engine);

struct EvolveOptions {
  Engine engine = Engine::krylov;
  double tol = 1e-10;          // Krylov per-step local error bound
  int krylov_dim = 30;
  bool store_states = false;
  bool record_channels = false;  // sector states only
};

/// dense_eig is limited to this dimension.
inline constexpr std::size_t kDenseEigCap = 4096;

/// A sampled trajectory. Times are in units of 1/Omega. fidelity holds
/// g(t) = |<psi(0)|psi(t)>| (absolute value, not squared).
struct Trajectory {
  std::vector<double> times;
  std::vector<double> fidelity;
  std::vector<Eigen::VectorXcd> states;           // filled if store_states
  std::vector<double> p_A, p_B, p_vac;            // filled if record_channels

  /// CSV dump with one "# key: value" header comment per metadata entry.
  /// Columns: t,g[,p_A,p_B,p_vac].
  void dump_csv(std::ostream& out, const std::map<std::string, std::string>& meta) const;
};

/// e^{-iHt}|psi0> sampled on the given time grid. The Krylov engine
/// substeps adaptively between grid points, keeping the per-step local
/// error estimate below tol.
Trajectory evolve(const SparseOperator& hamiltonian, const StateVector& psi0,
                  const std::vector<double>& times, const EvolveOptions& opts = {});

/// g(t) = |<psi0|psi(t)>| from stored snapshots.
std::vector<double> fidelity_series(const Trajectory& traj, const StateVector& psi0);

struct ChannelPopulations {
  double p_A;
  double p_B;
  double p_vac;
};

/// Weight on the A ladder, B ladder and shared vacuum of a sector state.
ChannelPopulations channel_populations(const StateVector& sector_state);

struct RevivalPeak {
  double t_peak;
  double g_max;
};

/// Location and height of the maximum of g within [window_lo, window_hi],
/// parabolically refined between grid points. The grid must resolve the
/// revival structure (>= 20 samples per unit time).
RevivalPeak find_first_revival(std::span<const double> g, std::span<const double> times,
                               double window_lo, double window_hi);

/// Norm of the state on partition B at Omega t = 2 pi, starting from
/// |Z2^A> in the Dicke sector of a CBG with n_sites vertices.
double numeric_P1(int n_sites, Engine engine = Engine::dense_eig, double tol = 1e-10);

struct P1Extrapolation {
  std::vector<std::pair<int, double>> samples;  // (N, p_B at 2 pi)
  double extrapolated;                          // linear fit in 1/sqrt(N), largest 3 sizes
};

P1Extrapolation numeric_P1_extrapolated(std::span<const int> sizes,
                                        Engine engine = Engine::dense_eig,
                                        double tol = 1e-10);

/// Default time grid: dt = 0.05/Omega out to t_max = 40/Omega.
std::vector<double> default_time_grid(double dt = 0.05, double t_max = 40.0);

}  // namespace scarsim

#endif  // SCARSIM_PROPAGATE_HPP
