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

#ifndef SCARSIM_STATES_HPP
#define SCARSIM_STATES_HPP

#include <complex>
#include <iosfwd>

#include <Eigen/Dense>

#include "scarsim/graph.hpp"

namespace scarsim {

class ConstrainedBasis;
class SparseOperator;
struct SpinSector;

enum class BasisTag { constrained, full, dicke_sector };

const char* to_string(BasisTag tag);

/// Complex amplitudes over a constrained basis, the full 2^N space, or a
/// collective Dicke sector.
struct StateVector {
  BasisTag basis_tag = BasisTag::constrained;
  Eigen::VectorXcd amplitudes;

  std::size_t dim() const { return static_cast<std::size_t>(amplitudes.size()); }
  double norm() const { return amplitudes.norm(); }
  void normalize();

  /// CSV dump: rows (index, re, im); basis_tag recorded in a header comment.
  void dump_csv(std::ostream& out) const;
};

enum class SqueezeMode { none, global, local };

const char* to_string(SqueezeMode mode);

/// Squeezing strength bookkeeping. xi is the dimensionless squeezing
/// parameter; chi the raw generator strength. On the CBG (global mode)
/// xi = chi * N/2; in local mode xi = chi * z with z the coordination
/// number of the lattice.
struct SqueezeSpec {
  SqueezeMode mode = SqueezeMode::none;
  double xi = 0.0;

  double chi_for(const BipartiteGraph& graph) const;
  double chi_for_sector(int n_sites) const;
};

/// |Z2^A> (or |Z2^B>): the single configuration with every site of the
/// active partition in |1>.
StateVector z2_state(const ConstrainedBasis& basis, Partition active);

/// Dicke-sector version: unit weight on the m = +S endpoint of the active
/// partition's ladder.
StateVector z2_state(const SpinSector& sector, Partition active);

/// Full-2^N-space version (amplitude 1 on the Z2 configuration).
StateVector z2_state_full(const BipartiteGraph& graph, Partition active);

/// Dicke coefficients C_m (m = -S..+S, ascending) of the spin coherent
/// state |S,theta,phi>:
///   C_m = binom(2S, S+m)^{1/2} cos^{2S}(theta/2) tan^{S+m}(theta/2)
///         e^{-i phi (S+m)}.
/// Binomials are evaluated in log space; theta = pi is treated as the
/// exact m = +S endpoint. 2S must be a nonnegative integer.
Eigen::VectorXcd spin_coherent_dicke(double spin, double theta, double phi);

/// <phi|S,theta,phi> = cos^{2S}(theta/2), evaluated in log space.
double vacuum_overlap(double spin, double theta);

/// Squeezed momentum-space wavepacket of the Z2 state,
///   A~(k; xi) = 2^{1/2} pi^{1/4} exp(-k^2 e^{2 xi}/2 + xi/2).
double squeezed_momentum_amplitude(double xi, double k);

/// Holstein-Primakoff vacuum wavefunction phi(x) = pi^{-1/4} e^{-x^2/2}
/// (real phase convention).
double hp_vacuum_wavefunction(double x);

enum class ExpMethod { taylor_scaled, krylov };

struct ExpApplyOptions {
  ExpMethod method = ExpMethod::taylor_scaled;
  double tol = 1e-14;      // per-substep series truncation
  int krylov_dim = 30;
};

/// exp(G)|state> for an anti-Hermitian generator G. taylor_scaled splits
/// the exponential into substeps small enough for the truncated series to
/// converge below tol; krylov uses a Lanczos subspace.
StateVector apply_exp_generator(const SparseOperator& generator,
                                const StateVector& state,
                                const ExpApplyOptions& opts = {});

}  // namespace scarsim

#endif  // SCARSIM_STATES_HPP
