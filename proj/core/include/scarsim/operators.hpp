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

#ifndef SCARSIM_OPERATORS_HPP
#define SCARSIM_OPERATORS_HPP

#include <complex>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

#include <Eigen/Dense>

#include "scarsim/graph.hpp"
#include "scarsim/hilbert.hpp"
#include "scarsim/states.hpp"

namespace scarsim {

enum class Hermiticity { hermitian, anti_hermitian, general };

struct Triplet {
  std::size_t row;
  std::size_t col;
  std::complex<double> value;
};

/// A linear operator in a fixed basis, stored either as sparse entries
/// (CSR) or as a matrix-free application rule. Full-2^N-space operators
/// above 20 sites must be matrix-free (memory ceiling); stored entries are
/// fine below that.
class SparseOperator {
 public:
  using ApplyFn = std::function<void(const Eigen::VectorXcd&, Eigen::VectorXcd&)>;

  static SparseOperator from_triplets(std::size_t dim, std::vector<Triplet> entries,
                                      Hermiticity herm, BasisTag basis);
  static SparseOperator matrix_free(std::size_t dim, ApplyFn apply,
                                    Hermiticity herm, BasisTag basis);

  std::size_t dim() const noexcept { return dim_; }
  Hermiticity hermiticity() const noexcept { return hermiticity_; }
  BasisTag basis_tag() const noexcept { return basis_tag_; }
  bool has_entries() const noexcept { return !matrix_free_; }

  /// out = M * in. out is resized and overwritten.
  void apply(const Eigen::VectorXcd& in, Eigen::VectorXcd& out) const;
  Eigen::VectorXcd apply(const Eigen::VectorXcd& in) const;

  /// max |M - M^dag| (hermitian) or |M + M^dag| (anti-hermitian) over
  /// stored entries. Requires stored entries.
  double hermiticity_residual() const;

  /// Dense realization; dim is capped at 4096.
  Eigen::MatrixXcd to_dense() const;

  /// Coordinate-format dump (row, col, re, im), one entry per line, for
  /// dims <= 10^4. Entries are emitted in CSR order.
  void dump_coordinate(std::ostream& out) const;

  std::size_t entry_count() const;

 private:
  SparseOperator() = default;

  std::size_t dim_ = 0;
  Hermiticity hermiticity_ = Hermiticity::general;
  BasisTag basis_tag_ = BasisTag::constrained;
  bool matrix_free_ = false;

  // CSR storage (row-major, columns sorted within a row, duplicates merged)
  std::vector<std::size_t> row_ptr_;
  std::vector<std::size_t> col_;
  std::vector<std::complex<double>> val_;

  ApplyFn apply_fn_;
};

/// The joined A/B Dicke ladders of the complete bipartite graph on
/// n_sites vertices, sharing one vacuum. Basis order: index 0 = vacuum;
/// 1..N/2 = A-ladder states m = -S+1..+S (with B in vacuum); N/2+1..N =
/// the mirrored B ladder. S = N/4, dim = N + 1.
struct SpinSector {
  int n_sites;

  explicit SpinSector(int n);

  double spin() const noexcept { return n_sites / 4.0; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(n_sites) + 1; }
  int ladder_length() const noexcept { return n_sites / 2; }  // states per ladder excl. vacuum
  std::size_t a_index(int step) const;  // step = S+m in 1..N/2
  std::size_t b_index(int step) const;
};

/// PXP Hamiltonian in the constrained basis: (omega/2) between any two
/// basis configurations differing by exactly one bit flip. Hermitian,
/// zero diagonal.
SparseOperator build_pxp(const BipartiteGraph& graph, const ConstrainedBasis& basis,
                         double omega = 1.0);

/// Collective-spin form of the CBG Hamiltonian on the joined Dicke
/// ladders: standard S^x tridiagonal elements omega/2 sqrt((S-m)(S+m+1))
/// within each ladder, the two ladders coupling only through the shared
/// vacuum row/column.
SparseOperator build_cbg_sector_hamiltonian(const SpinSector& sector, double omega = 1.0);

/// Generator of the global squeeze V_chi = exp(chi/2 ((S+)^2 - (S-)^2))
/// over partition A, restricted to the Dicke sector: pentadiagonal
/// m -> m+-2 couplings on the A ladder (the vacuum is the m = -S rung);
/// components on the B ladder are annihilated, since the physical
/// operator maps them out of the sector. Anti-Hermitian.
SparseOperator build_global_squeeze_generator(const SpinSector& sector, double chi);

/// Lattice version on the full 2^N space: chi * sum_{i<j in A}
/// (s+_i s+_j - s-_i s-_j). Matrix-free above 20 sites.
SparseOperator build_global_squeeze_generator(const BipartiteGraph& graph, double chi);

/// Quasi-local squeeze generator on the full 2^N space,
///   (chi/2) sum_{i in B} ((S_i^+)^2 - (S_i^-)^2),
/// with S_i^+- = 1/2 sum_{j in nbr(i)} s_j^+-. On-site (s^+-)^2 terms
/// vanish, leaving pair raising/lowering terms with coefficient chi/4 per
/// unordered neighbour pair. Defined for ring and torus graphs; the CBG
/// is rejected (global and local coincide there up to normalization).
SparseOperator build_local_squeeze_generator(const BipartiteGraph& graph, double chi);

/// First-order deformed PXP Hamiltonian on a ring. The bare (omega/2)
/// flip entry at site i is weighted by (1 - chi * z_{i+2}), with
/// z = +1 for |1> and -1 for |0> read from the configuration at site
/// i+2. chi > 0 strengthens flips whose second neighbour is empty, which
/// enhances the Z2 revivals.
SparseOperator build_deformed_pxp_first_order(const BipartiteGraph& graph,
                                              const ConstrainedBasis& basis,
                                              double omega, double chi);

struct ConjugatedEvolveOptions {
  double tol = 1e-12;       // Krylov propagation tolerance
  int krylov_dim = 30;
  double exp_tol = 1e-14;   // squeeze exponential series tolerance
};

/// U^dag e^{-iHt} U |state>, applied without ever forming U^dag H U.
///
/// When the generator lives on the full 2^N space and H on the constrained
/// basis, the state is embedded, squeezed, projected (PXP dynamics are
/// frozen outside the constrained space), evolved, unsqueezed and
/// projected back.
StateVector apply_conjugated_hamiltonian(const SparseOperator& hamiltonian,
                                         const SparseOperator& squeeze_generator,
                                         const ConstrainedBasis* basis,
                                         const StateVector& state, double t,
                                         const ConjugatedEvolveOptions& opts = {});

/// Embed a constrained-basis state into the full 2^N space.
StateVector embed_full(const ConstrainedBasis& basis, const StateVector& state);

}  // namespace scarsim

#endif  // SCARSIM_OPERATORS_HPP
