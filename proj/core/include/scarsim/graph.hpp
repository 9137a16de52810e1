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

#ifndef SCARSIM_GRAPH_HPP
#define SCARSIM_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace scarsim {

enum class GraphKind { complete_bipartite, ring, torus, custom };

enum class Partition : std::uint8_t { A, B };

/// Unordered edge, stored with u < v.
struct Edge {
  int u;
  int v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct BipartiteViolation {
  enum class Reason { same_partition, self_loop, duplicate_edge };
  Reason reason;
  Edge edge;  // the first offending edge
};

/// Checks that every edge crosses the A/B partition and that the edge list
/// has no self-loops or duplicates. Returns the first violation, or nullopt.
std::optional<BipartiteViolation> validate_bipartite(
    const std::vector<Edge>& edges, const std::vector<Partition>& partition);

/// A bipartite interaction graph. Immutable after construction; vertex
/// numbering is fixed per kind so that state dumps are reproducible:
///   - complete_bipartite(s): A = {0..s-1}, B = {s..2s-1}, all A-B pairs;
///   - ring(n): vertices 0..n-1 around the circle, even indices in A;
///   - torus(r, c): row-major ids i*c + j, checkerboard partition
///     ((i + j) even -> A), periodic in both directions.
class BipartiteGraph {
 public:
  static BipartiteGraph complete_bipartite(int n_side);
  static BipartiteGraph ring(int n_sites);
  static BipartiteGraph torus(int rows, int cols);
  static BipartiteGraph custom(int n_vertices, std::vector<Edge> edges,
                               std::vector<Partition> partition);

  /// Reads a custom graph from a text file: one edge per line as "u v",
  /// plus a partition line "A: u1 u2 ...". '#' starts a comment. Vertices
  /// not listed after "A:" are assigned to B.
  static BipartiteGraph from_file(const std::string& path);
  static BipartiteGraph from_stream(std::istream& in);

  int n_vertices() const noexcept { return n_vertices_; }
  GraphKind kind() const noexcept { return kind_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<Partition>& partition() const noexcept { return partition_; }
  Partition partition_of(int v) const { return partition_.at(static_cast<std::size_t>(v)); }

  int degree(int v) const;
  const std::vector<std::vector<int>>& adjacency() const noexcept { return adjacency_; }

  /// Bitmask of the neighbours of v; valid for n_vertices <= 64.
  std::uint64_t neighbor_mask(int v) const { return neighbor_masks_.at(static_cast<std::size_t>(v)); }

  std::vector<int> sites_in(Partition p) const;

  /// Bitmask with one bit per site of the given partition.
  std::uint64_t partition_mask(Partition p) const;

  /// Lattice coordination number: n/2 for the CBG, 2 for the ring, 4 for
  /// the torus. Throws for custom graphs (no canonical value).
  int coordination_number() const;

  /// For the ring: rows/cols of the torus; otherwise unset.
  std::optional<std::pair<int, int>> torus_shape() const { return torus_shape_; }

 private:
  BipartiteGraph(GraphKind kind, int n_vertices, std::vector<Edge> edges,
                 std::vector<Partition> partition);

  GraphKind kind_;
  int n_vertices_;
  std::vector<Edge> edges_;
  std::vector<Partition> partition_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::uint64_t> neighbor_masks_;
  std::optional<std::pair<int, int>> torus_shape_;
};

}  // namespace scarsim

#endif  // SCARSIM_GRAPH_HPP
