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

#include "scarsim/operators.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "scarsim/errors.hpp"
#include "scarsim/io.hpp"
#include "scarsim/propagate.hpp"

namespace scarsim {

// ---------------------------------------------------------------------------
// SparseOperator

SparseOperator SparseOperator::from_triplets(std::size_t dim, std::vector<Triplet> entries,
                                             Hermiticity herm, BasisTag basis) {
  SparseOperator op;
  op.dim_ = dim;
  op.hermiticity_ = herm;
  op.basis_tag_ = basis;
  op.matrix_free_ = false;
  for (const Triplet& t : entries) {
    if (t.row >= dim || t.col >= dim) {
      throw InvalidInputError("triplet index out of range");
    }
  }
  std::sort(entries.begin(), entries.end(), [](const Triplet& a, const Triplet& b) {
    return std::tie(a.row, a.col) < std::tie(b.row, b.col);
  });
  op.row_ptr_.assign(dim + 1, 0);
  op.col_.reserve(entries.size());
  op.val_.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size();) {
    std::size_t j = i;
    std::complex<double> v = 0.0;
    while (j < entries.size() && entries[j].row == entries[i].row &&
           entries[j].col == entries[i].col) {
      v += entries[j].value;
      ++j;
    }
    if (v != std::complex<double>(0.0, 0.0)) {
      op.col_.push_back(entries[i].col);
      op.val_.push_back(v);
      ++op.row_ptr_[entries[i].row + 1];
    }
    i = j;
  }
  for (std::size_t r = 0; r < dim; ++r) op.row_ptr_[r + 1] += op.row_ptr_[r];
  // construction-time hermiticity check at small dims; larger operators
  // are checked explicitly in tests via hermiticity_residual()
  if (dim <= 4096 && herm != Hermiticity::general) {
    if (op.hermiticity_residual() > 1e-12) {
      throw InvalidInputError("stored entries violate the declared hermiticity");
    }
  }
  return op;
}

SparseOperator SparseOperator::matrix_free(std::size_t dim, ApplyFn apply, Hermiticity herm,
                                           BasisTag basis) {
  SparseOperator op;
  op.dim_ = dim;
  op.hermiticity_ = herm;
  op.basis_tag_ = basis;
  op.matrix_free_ = true;
  op.apply_fn_ = std::move(apply);
  return op;
}

void SparseOperator::apply(const Eigen::VectorXcd& in, Eigen::VectorXcd& out) const {
  if (static_cast<std::size_t>(in.size()) != dim_) {
    throw InvalidInputError("operator/vector dimension mismatch");
  }
  out.setZero(in.size());
  if (matrix_free_) {
    apply_fn_(in, out);
    return;
  }
  for (std::size_t r = 0; r < dim_; ++r) {
    std::complex<double> acc = 0.0;
    for (std::size_t p = row_ptr_[r]; p < row_ptr_[r + 1]; ++p) {
      acc += val_[p] * in[static_cast<Eigen::Index>(col_[p])];
    }
    out[static_cast<Eigen::Index>(r)] = acc;
  }
}

Eigen::VectorXcd SparseOperator::apply(const Eigen::VectorXcd& in) const {
  Eigen::VectorXcd out;
  apply(in, out);
  return out;
}

double SparseOperator::hermiticity_residual() const {
  if (matrix_free_) {
    throw InvalidInputError("hermiticity_residual requires stored entries");
  }
  const double sign = (hermiticity_ == Hermiticity::anti_hermitian) ? 1.0 : -1.0;
  double worst = 0.0;
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t p = row_ptr_[r]; p < row_ptr_[r + 1]; ++p) {
      const std::size_t c = col_[p];
      // value at (c, r) via binary search in row c
      std::complex<double> vt = 0.0;
      const auto begin = col_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[c]);
      const auto end = col_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[c + 1]);
      const auto it = std::lower_bound(begin, end, r);
      if (it != end && *it == r) {
        vt = val_[static_cast<std::size_t>(it - col_.begin())];
      }
      worst = std::max(worst, std::abs(val_[p] + sign * std::conj(vt)));
    }
  }
  return worst;
}

Eigen::MatrixXcd SparseOperator::to_dense() const {
  if (dim_ > 4096) throw ResourceError("dense realization is capped at dim 4096");
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim_),
                                              static_cast<Eigen::Index>(dim_));
  if (matrix_free_) {
    Eigen::VectorXcd e = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim_));
    Eigen::VectorXcd colv;
    for (std::size_t c = 0; c < dim_; ++c) {
      e[static_cast<Eigen::Index>(c)] = 1.0;
      apply(e, colv);
      m.col(static_cast<Eigen::Index>(c)) = colv;
      e[static_cast<Eigen::Index>(c)] = 0.0;
    }
    return m;
  }
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t p = row_ptr_[r]; p < row_ptr_[r + 1]; ++p) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(col_[p])) = val_[p];
    }
  }
  return m;
}

void SparseOperator::dump_coordinate(std::ostream& out) const {
  if (dim_ > 10000) {
    throw ResourceError("coordinate dump is limited to dims <= 10^4");
  }
  if (matrix_free_) {
    throw InvalidInputError("coordinate dump requires stored entries");
  }
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t p = row_ptr_[r]; p < row_ptr_[r + 1]; ++p) {
      out << r << ' ' << col_[p] << ' ' << fmt_full(val_[p].real()) << ' '
          << fmt_full(val_[p].imag()) << '\n';
    }
  }
}

std::size_t SparseOperator::entry_count() const {
  if (matrix_free_) throw InvalidInputError("matrix-free operator has no stored entries");
  return val_.size();
}

// ---------------------------------------------------------------------------
// SpinSector

SpinSector::SpinSector(int n) : n_sites(n) {
  if (n < 4 || n % 2 != 0) {
    throw InvalidInputError("spin sector needs an even site count >= 4");
  }
}

std::size_t SpinSector::a_index(int step) const {
  if (step < 1 || step > ladder_length()) throw InvalidInputError("ladder step out of range");
  return static_cast<std::size_t>(step);
}

std::size_t SpinSector::b_index(int step) const {
  if (step < 1 || step > ladder_length()) throw InvalidInputError("ladder step out of range");
  return static_cast<std::size_t>(ladder_length() + step);
}

// ---------------------------------------------------------------------------
// Hamiltonians

SparseOperator build_pxp(const BipartiteGraph& graph, const ConstrainedBasis& basis,
                         double omega) {
  if (&basis.graph() != &graph) {
    throw InvalidInputError("basis was enumerated from a different graph");
  }
  const int n = graph.n_vertices();
  std::vector<Triplet> trips;
  trips.reserve(basis.dimension() * static_cast<std::size_t>(n) / 2);
  for (std::size_t ci = 0; ci < basis.dimension(); ++ci) {
    const std::uint64_t c = basis.config(ci);
    for (int i = 0; i < n; ++i) {
      if (c & graph.neighbor_mask(i)) continue;  // flip blocked
      const std::uint64_t c2 = c ^ (std::uint64_t{1} << i);
      if (c2 < c) continue;  // add each pair once, symmetrize below
      const auto cj = basis.index_of(c2);
      if (!cj) continue;  // unreachable for valid bases
      trips.push_back(Triplet{*cj, ci, omega / 2.0});
      trips.push_back(Triplet{ci, *cj, omega / 2.0});
    }
  }
  return SparseOperator::from_triplets(basis.dimension(), std::move(trips),
                                       Hermiticity::hermitian, BasisTag::constrained);
}

SparseOperator build_cbg_sector_hamiltonian(const SpinSector& sector, double omega) {
  const int len = sector.ladder_length();  // 2S steps per ladder
  std::vector<Triplet> trips;
  // ladder bond between steps j and j+1 carries 1/2 sqrt((2S-j)(j+1)),
  // j = 0 being the shared vacuum rung of either ladder
  for (int j = 0; j < len; ++j) {
    const double el = 0.5 * omega * std::sqrt(static_cast<double>(len - j) * (j + 1));
    const std::size_t lo_a = (j == 0) ? 0 : sector.a_index(j);
    const std::size_t hi_a = sector.a_index(j + 1);
    trips.push_back(Triplet{lo_a, hi_a, el});
    trips.push_back(Triplet{hi_a, lo_a, el});
    const std::size_t lo_b = (j == 0) ? 0 : sector.b_index(j);
    const std::size_t hi_b = sector.b_index(j + 1);
    trips.push_back(Triplet{lo_b, hi_b, el});
    trips.push_back(Triplet{hi_b, lo_b, el});
  }
  return SparseOperator::from_triplets(sector.dim(), std::move(trips), Hermiticity::hermitian,
                                       BasisTag::dicke_sector);
}

// ---------------------------------------------------------------------------
// Squeeze generators

SparseOperator build_global_squeeze_generator(const SpinSector& sector, double chi) {
  if (!std::isfinite(chi)) throw InvalidInputError("chi must be finite");
  const int len = sector.ladder_length();
  std::vector<Triplet> trips;
  // (chi/2) ((S+)^2 - (S-)^2) on the A ladder; step j is m = -S + j
  for (int j = 0; j + 2 <= len; ++j) {
    const double el = 0.5 * chi *
                      std::sqrt(static_cast<double>(len - j) * (j + 1) *
                                (len - j - 1) * (j + 2));
    if (el == 0.0) continue;
    const std::size_t lo = (j == 0) ? 0 : sector.a_index(j);
    const std::size_t hi = sector.a_index(j + 2);
    trips.push_back(Triplet{hi, lo, el});
    trips.push_back(Triplet{lo, hi, -el});
  }
  return SparseOperator::from_triplets(sector.dim(), std::move(trips),
                                       Hermiticity::anti_hermitian, BasisTag::dicke_sector);
}

namespace {

struct PairTerm {
  std::uint64_t bits;  // the two sites raised/lowered together
  double coeff;
};

/// sum over terms of coeff (s+_a s+_b - s-_a s-_b) as a full-space operator.
SparseOperator pair_updown_operator(int n_sites, std::vector<PairTerm> terms) {
  const std::size_t dim = std::size_t{1} << n_sites;
  auto apply = [terms = std::move(terms), dim](const Eigen::VectorXcd& in,
                                               Eigen::VectorXcd& out) {
    for (const PairTerm& t : terms) {
      for (std::size_t s = 0; s < dim; ++s) {
        if (s & t.bits) continue;
        const std::size_t s2 = s | t.bits;
        out[static_cast<Eigen::Index>(s2)] += t.coeff * in[static_cast<Eigen::Index>(s)];
        out[static_cast<Eigen::Index>(s)] -= t.coeff * in[static_cast<Eigen::Index>(s2)];
      }
    }
  };
  return SparseOperator::matrix_free(dim, std::move(apply), Hermiticity::anti_hermitian,
                                     BasisTag::full);
}

}  // namespace

SparseOperator build_global_squeeze_generator(const BipartiteGraph& graph, double chi) {
  if (!std::isfinite(chi)) throw InvalidInputError("chi must be finite");
  if (graph.n_vertices() > 26) {
    throw ResourceError("full-space generators are capped at 26 sites");
  }
  const auto a_sites = graph.sites_in(Partition::A);
  std::vector<PairTerm> terms;
  for (std::size_t i = 0; i < a_sites.size(); ++i) {
    for (std::size_t j = i + 1; j < a_sites.size(); ++j) {
      // (S+)^2 = 2 sum_{i<j} s+_i s+_j  (on-site squares vanish)
      terms.push_back(PairTerm{(std::uint64_t{1} << a_sites[i]) | (std::uint64_t{1} << a_sites[j]),
                               chi});
    }
  }
  return pair_updown_operator(graph.n_vertices(), std::move(terms));
}

SparseOperator build_local_squeeze_generator(const BipartiteGraph& graph, double chi) {
  if (!std::isfinite(chi)) throw InvalidInputError("chi must be finite");
  if (graph.kind() == GraphKind::complete_bipartite) {
    throw InvalidInputError(
        "on the complete bipartite graph local and global squeezing coincide; "
        "use build_global_squeeze_generator");
  }
  if (graph.kind() != GraphKind::ring && graph.kind() != GraphKind::torus) {
    throw InvalidInputError("local squeezing is defined for ring and torus graphs");
  }
  if (graph.n_vertices() > 26) {
    throw ResourceError("full-space generators are capped at 26 sites");
  }
  std::vector<PairTerm> terms;
  for (int i : graph.sites_in(Partition::B)) {
    const auto& nbrs = graph.adjacency()[static_cast<std::size_t>(i)];
    for (std::size_t a = 0; a < nbrs.size(); ++a) {
      for (std::size_t b = a + 1; b < nbrs.size(); ++b) {
        // (S_i^+)^2 = 1/2 sum_{j<j' in nbr(i)} s+_j s+_j', so chi/2 * 1/2
        terms.push_back(PairTerm{
            (std::uint64_t{1} << nbrs[a]) | (std::uint64_t{1} << nbrs[b]), chi / 4.0});
      }
    }
  }
  return pair_updown_operator(graph.n_vertices(), std::move(terms));
}

// ---------------------------------------------------------------------------
// Deformation

SparseOperator build_deformed_pxp_first_order(const BipartiteGraph& graph,
                                              const ConstrainedBasis& basis, double omega,
                                              double chi) {
  if (graph.kind() != GraphKind::ring) {
    throw InvalidInputError("the first-order deformation is defined on rings");
  }
  if (&basis.graph() != &graph) {
    throw InvalidInputError("basis was enumerated from a different graph");
  }
  const int n = graph.n_vertices();
  std::vector<Triplet> trips;
  for (std::size_t ci = 0; ci < basis.dimension(); ++ci) {
    const std::uint64_t c = basis.config(ci);
    for (int i = 0; i < n; ++i) {
      if (c & graph.neighbor_mask(i)) continue;
      const std::uint64_t c2 = c ^ (std::uint64_t{1} << i);
      if (c2 < c) continue;
      const auto cj = basis.index_of(c2);
      if (!cj) continue;
      // z reads sigma^z (+1 for |1>) at site i+2; the flip at i never
      // touches it, so the weight is the same seen from either side
      const int watched = (i + 2) % n;
      const double z = ((c >> watched) & 1) ? 1.0 : -1.0;
      const double w = (omega / 2.0) * (1.0 - chi * z);
      trips.push_back(Triplet{*cj, ci, w});
      trips.push_back(Triplet{ci, *cj, w});
    }
  }
  return SparseOperator::from_triplets(basis.dimension(), std::move(trips),
                                       Hermiticity::hermitian, BasisTag::constrained);
}

// ---------------------------------------------------------------------------
// Conjugated evolution

StateVector embed_full(const ConstrainedBasis& basis, const StateVector& state) {
  if (state.basis_tag != BasisTag::constrained || state.dim() != basis.dimension()) {
    throw InvalidInputError("embed_full expects a matching constrained-basis state");
  }
  StateVector out;
  out.basis_tag = BasisTag::full;
  out.amplitudes =
      Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(std::size_t{1} << basis.graph().n_vertices()));
  for (std::size_t i = 0; i < basis.dimension(); ++i) {
    out.amplitudes[static_cast<Eigen::Index>(basis.config(i))] =
        state.amplitudes[static_cast<Eigen::Index>(i)];
  }
  return out;
}

namespace {

SparseOperator negate_generator(const SparseOperator& gen) {
  return SparseOperator::matrix_free(
      gen.dim(),
      [gen](const Eigen::VectorXcd& in, Eigen::VectorXcd& out) {
        gen.apply(in, out);
        out = -out;
      },
      Hermiticity::anti_hermitian, gen.basis_tag());
}

}  // namespace

StateVector apply_conjugated_hamiltonian(const SparseOperator& hamiltonian,
                                         const SparseOperator& squeeze_generator,
                                         const ConstrainedBasis* basis, const StateVector& state,
                                         double t, const ConjugatedEvolveOptions& opts) {
  if (hamiltonian.hermiticity() != Hermiticity::hermitian) {
    throw InvalidInputError("conjugated evolution needs a Hermitian Hamiltonian");
  }
  if (hamiltonian.dim() != state.dim() || hamiltonian.basis_tag() != state.basis_tag) {
    throw InvalidInputError("Hamiltonian/state mismatch");
  }
  ExpApplyOptions exp_opts;
  exp_opts.tol = opts.exp_tol;

  const SparseOperator unsqueezer = negate_generator(squeeze_generator);

  EvolveOptions ev;
  ev.engine = Engine::krylov;
  ev.tol = opts.tol;
  ev.krylov_dim = opts.krylov_dim;
  ev.store_states = true;

  const bool mediated =
      squeeze_generator.basis_tag() == BasisTag::full && state.basis_tag == BasisTag::constrained;
  if (!mediated && squeeze_generator.basis_tag() != state.basis_tag) {
    throw InvalidInputError("generator/state basis mismatch");
  }
  if (mediated && basis == nullptr) {
    throw InvalidInputError("full-space generator over a constrained state needs the basis");
  }

  StateVector squeezed = state;
  if (mediated) {
    squeezed = project_to_constrained(*basis, apply_exp_generator(
                                                  squeeze_generator, embed_full(*basis, state),
                                                  exp_opts))
                   .state;
  } else {
    squeezed = apply_exp_generator(squeeze_generator, state, exp_opts);
  }

  Trajectory traj = evolve(hamiltonian, squeezed, {t}, ev);
  StateVector evolved;
  evolved.basis_tag = state.basis_tag;
  evolved.amplitudes = traj.states.back();

  if (mediated) {
    return project_to_constrained(*basis,
                                  apply_exp_generator(unsqueezer, embed_full(*basis, evolved),
                                                      exp_opts))
        .state;
  }
  return apply_exp_generator(unsqueezer, evolved, exp_opts);
}

}  // namespace scarsim
