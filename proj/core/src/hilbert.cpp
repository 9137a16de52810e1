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

#include "scarsim/hilbert.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include "scarsim/errors.hpp"

namespace scarsim {

namespace {

// Hard cap on the basis size so a near-edgeless graph cannot silently eat
// all memory (2^26 configs = 512 MB of uint64).
constexpr std::size_t kMaxBasisSize = std::size_t{1} << 26;

void enumerate_rec(int site, std::uint64_t acc, const std::vector<std::uint64_t>& nbr,
                   std::vector<std::uint64_t>& out) {
  if (site < 0) {
    if (out.size() >= kMaxBasisSize) {
      throw ResourceError("constrained basis exceeds the size cap");
    }
    out.push_back(acc);
    return;
  }
  // bit = 0 first, so configs are produced in ascending numeric order
  enumerate_rec(site - 1, acc, nbr, out);
  if ((acc & nbr[static_cast<std::size_t>(site)]) == 0) {
    enumerate_rec(site - 1, acc | (std::uint64_t{1} << site), nbr, out);
  }
}

}  // namespace

ConstrainedBasis::ConstrainedBasis(const BipartiteGraph& graph,
                                   std::vector<std::uint64_t> configs)
    : graph_(&graph), configs_(std::move(configs)) {}

ConstrainedBasis ConstrainedBasis::enumerate(const BipartiteGraph& graph, int site_cap) {
  const int n = graph.n_vertices();
  if (n > site_cap) {
    throw ResourceError("graph has " + std::to_string(n) +
                        " sites, above the enumeration cap of " + std::to_string(site_cap));
  }
  if (n > 64) {
    throw ResourceError("configurations are stored as 64-bit masks");
  }
  std::vector<std::uint64_t> nbr(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) nbr[static_cast<std::size_t>(v)] = graph.neighbor_mask(v);
  std::vector<std::uint64_t> configs;
  enumerate_rec(n - 1, 0, nbr, configs);
  return ConstrainedBasis(graph, std::move(configs));
}

std::optional<std::size_t> ConstrainedBasis::index_of(std::uint64_t config) const {
  const int n = graph_->n_vertices();
  if (n < 64 && (config >> n) != 0) {
    throw InvalidInputError("configuration has bits beyond n_vertices");
  }
  auto it = std::lower_bound(configs_.begin(), configs_.end(), config);
  if (it == configs_.end() || *it != config) return std::nullopt;
  return static_cast<std::size_t>(it - configs_.begin());
}

void ConstrainedBasis::dump_csv(std::ostream& out) const {
  const int n = graph_->n_vertices();
  out << "index,config\n";
  for (std::size_t i = 0; i < configs_.size(); ++i) {
    std::string bits(static_cast<std::size_t>(n), '0');
    for (int b = 0; b < n; ++b) {
      if ((configs_[i] >> b) & 1) bits[static_cast<std::size_t>(n - 1 - b)] = '1';
    }
    out << i << ',' << bits << '\n';
  }
}

ProjectionResult project_to_constrained(const ConstrainedBasis& basis,
                                        const StateVector& full_state) {
  if (full_state.basis_tag != BasisTag::full) {
    throw InvalidInputError("project_to_constrained expects a full-space state");
  }
  const int n = basis.graph().n_vertices();
  const std::size_t full_dim = std::size_t{1} << n;
  if (full_state.dim() != full_dim) {
    throw InvalidInputError("full state dimension must be 2^N");
  }
  const double total = full_state.amplitudes.squaredNorm();
  if (!(total > 0.0) || !std::isfinite(total)) {
    throw NumericError("cannot project a state with zero or non-finite norm");
  }
  StateVector out;
  out.basis_tag = BasisTag::constrained;
  out.amplitudes.resize(static_cast<Eigen::Index>(basis.dimension()));
  double kept = 0.0;
  for (std::size_t i = 0; i < basis.dimension(); ++i) {
    const std::complex<double> a = full_state.amplitudes[static_cast<Eigen::Index>(basis.config(i))];
    out.amplitudes[static_cast<Eigen::Index>(i)] = a;
    kept += std::norm(a);
  }
  if (kept <= 0.0) {
    throw NumericError("projection annihilates the state entirely");
  }
  out.amplitudes /= std::sqrt(kept);
  double discarded = 1.0 - kept / total;
  if (discarded < 0.0) discarded = 0.0;  // roundoff guard
  return ProjectionResult{std::move(out), discarded};
}

}  // namespace scarsim
