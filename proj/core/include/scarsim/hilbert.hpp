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

#ifndef SCARSIM_HILBERT_HPP
#define SCARSIM_HILBERT_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "scarsim/graph.hpp"
#include "scarsim/states.hpp"

namespace scarsim {

/// The blockade-constrained Hilbert space of a graph: all independent-set
/// bit configurations (bit i set = site i in |1>), stored sorted ascending
/// as integers. Immutable after enumeration; safe to share across threads.
///
/// Configurations are machine integers, so enumeration is capped at 32
/// sites (every paper lattice fits well below that).
class ConstrainedBasis {
 public:
  static constexpr int kDefaultSiteCap = 32;

  /// Enumerates all blockade-satisfying configurations by backtracking
  /// from the most significant site, which yields ascending order
  /// directly.
  static ConstrainedBasis enumerate(const BipartiteGraph& graph,
                                    int site_cap = kDefaultSiteCap);

  std::size_t dimension() const noexcept { return configs_.size(); }
  std::uint64_t config(std::size_t index) const { return configs_.at(index); }
  const std::vector<std::uint64_t>& configs() const noexcept { return configs_; }
  const BipartiteGraph& graph() const noexcept { return *graph_; }

  /// Ordinal of a configuration (binary search), or nullopt if the
  /// configuration violates the blockade. Bits beyond n_vertices are an
  /// argument error.
  std::optional<std::size_t> index_of(std::uint64_t config) const;

  /// CSV dump: rows (index, config_as_binary_string), site 0 rightmost.
  void dump_csv(std::ostream& out) const;

 private:
  ConstrainedBasis(const BipartiteGraph& graph, std::vector<std::uint64_t> configs);

  const BipartiteGraph* graph_;  // non-owning; graphs outlive their bases
  std::vector<std::uint64_t> configs_;
};

struct ProjectionResult {
  StateVector state;        // renormalized restriction to the basis
  double discarded_weight;  // squared norm removed, in [0, 1)
};

/// Applies the blockade projector to a full-2^N-space state and
/// renormalizes. Throws NumericError if the projection annihilates the
/// state.
ProjectionResult project_to_constrained(const ConstrainedBasis& basis,
                                        const StateVector& full_state);

}  // namespace scarsim

#endif  // SCARSIM_HILBERT_HPP
