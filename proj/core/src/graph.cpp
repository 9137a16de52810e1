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

#include "scarsim/graph.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "scarsim/errors.hpp"

namespace scarsim {

namespace {

Edge make_edge(int u, int v) {
  if (u > v) std::swap(u, v);
  return Edge{u, v};
}

}  // namespace

std::optional<BipartiteViolation> validate_bipartite(
    const std::vector<Edge>& edges, const std::vector<Partition>& partition) {
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : edges) {
    Edge c = make_edge(e.u, e.v);
    if (c.u == c.v) {
      return BipartiteViolation{BipartiteViolation::Reason::self_loop, c};
    }
    if (!seen.insert({c.u, c.v}).second) {
      return BipartiteViolation{BipartiteViolation::Reason::duplicate_edge, c};
    }
    if (c.u < 0 || static_cast<std::size_t>(c.v) >= partition.size()) {
      return BipartiteViolation{BipartiteViolation::Reason::same_partition, c};
    }
    if (partition[static_cast<std::size_t>(c.u)] == partition[static_cast<std::size_t>(c.v)]) {
      return BipartiteViolation{BipartiteViolation::Reason::same_partition, c};
    }
  }
  return std::nullopt;
}

BipartiteGraph::BipartiteGraph(GraphKind kind, int n_vertices, std::vector<Edge> edges,
                               std::vector<Partition> partition)
    : kind_(kind),
      n_vertices_(n_vertices),
      edges_(std::move(edges)),
      partition_(std::move(partition)) {
  if (n_vertices_ <= 0) {
    throw InvalidInputError("graph must have a positive number of vertices");
  }
  for (Edge& e : edges_) e = make_edge(e.u, e.v);
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
  if (auto violation = validate_bipartite(edges_, partition_)) {
    std::ostringstream msg;
    msg << "graph is not a valid bipartite graph: edge " << violation->edge.u << "-"
        << violation->edge.v;
    switch (violation->reason) {
      case BipartiteViolation::Reason::same_partition:
        msg << " does not cross the partition";
        break;
      case BipartiteViolation::Reason::self_loop:
        msg << " is a self-loop";
        break;
      case BipartiteViolation::Reason::duplicate_edge:
        msg << " is duplicated";
        break;
    }
    throw InvalidInputError(msg.str());
  }
  adjacency_.assign(static_cast<std::size_t>(n_vertices_), {});
  for (const Edge& e : edges_) {
    adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
    adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
  neighbor_masks_.assign(static_cast<std::size_t>(n_vertices_), 0);
  if (n_vertices_ <= 64) {
    for (const Edge& e : edges_) {
      neighbor_masks_[static_cast<std::size_t>(e.u)] |= std::uint64_t{1} << e.v;
      neighbor_masks_[static_cast<std::size_t>(e.v)] |= std::uint64_t{1} << e.u;
    }
  }
}

BipartiteGraph BipartiteGraph::complete_bipartite(int n_side) {
  if (n_side < 1) {
    throw InvalidInputError("complete bipartite graph needs side >= 1");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n_side) * static_cast<std::size_t>(n_side));
  for (int a = 0; a < n_side; ++a) {
    for (int b = 0; b < n_side; ++b) {
      edges.push_back(Edge{a, n_side + b});
    }
  }
  std::vector<Partition> part(static_cast<std::size_t>(2 * n_side), Partition::B);
  for (int a = 0; a < n_side; ++a) part[static_cast<std::size_t>(a)] = Partition::A;
  return BipartiteGraph(GraphKind::complete_bipartite, 2 * n_side, std::move(edges),
                        std::move(part));
}

BipartiteGraph BipartiteGraph::ring(int n_sites) {
  if (n_sites < 4 || n_sites % 2 != 0) {
    throw InvalidInputError("ring size must be even and >= 4");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n_sites));
  for (int i = 0; i < n_sites; ++i) {
    edges.push_back(make_edge(i, (i + 1) % n_sites));
  }
  std::vector<Partition> part(static_cast<std::size_t>(n_sites));
  for (int i = 0; i < n_sites; ++i) {
    part[static_cast<std::size_t>(i)] = (i % 2 == 0) ? Partition::A : Partition::B;
  }
  return BipartiteGraph(GraphKind::ring, n_sites, std::move(edges), std::move(part));
}

BipartiteGraph BipartiteGraph::torus(int rows, int cols) {
  // Odd dimensions break bipartiteness under periodic wrap; dimension 2
  // would duplicate edges. Both are rejected rather than silently fixed.
  if (rows < 4 || cols < 4 || rows % 2 != 0 || cols % 2 != 0) {
    throw InvalidInputError("torus dimensions must be even and >= 4");
  }
  auto id = [cols](int i, int j) { return i * cols + j; };
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(2 * rows * cols));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      edges.push_back(make_edge(id(i, j), id(i, (j + 1) % cols)));
      edges.push_back(make_edge(id(i, j), id((i + 1) % rows, j)));
    }
  }
  std::vector<Partition> part(static_cast<std::size_t>(rows * cols));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      part[static_cast<std::size_t>(id(i, j))] = ((i + j) % 2 == 0) ? Partition::A : Partition::B;
    }
  }
  BipartiteGraph g(GraphKind::torus, rows * cols, std::move(edges), std::move(part));
  g.torus_shape_ = {rows, cols};
  return g;
}

BipartiteGraph BipartiteGraph::custom(int n_vertices, std::vector<Edge> edges,
                                      std::vector<Partition> partition) {
  if (static_cast<int>(partition.size()) != n_vertices) {
    throw InvalidInputError("partition label count must match n_vertices");
  }
  return BipartiteGraph(GraphKind::custom, n_vertices, std::move(edges), std::move(partition));
}

BipartiteGraph BipartiteGraph::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw InvalidInputError("cannot open graph file: " + path);
  }
  return from_stream(in);
}

BipartiteGraph BipartiteGraph::from_stream(std::istream& in) {
  std::vector<Edge> edges;
  std::vector<int> a_sites;
  int max_vertex = -1;
  std::string line;
  while (std::getline(in, line)) {
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "A:") {
      int v;
      while (ls >> v) {
        if (v < 0) throw InvalidInputError("negative vertex id in partition line");
        a_sites.push_back(v);
        max_vertex = std::max(max_vertex, v);
      }
      if (!ls.eof()) throw InvalidInputError("malformed partition line in graph file");
      continue;
    }
    int u, v;
    std::istringstream es(line);
    if (!(es >> u >> v)) {
      throw InvalidInputError("malformed edge line in graph file: '" + line + "'");
    }
    std::string rest;
    if (es >> rest) {
      throw InvalidInputError("trailing tokens on edge line: '" + line + "'");
    }
    if (u < 0 || v < 0) throw InvalidInputError("negative vertex id in edge line");
    edges.push_back(Edge{u, v});
    max_vertex = std::max({max_vertex, u, v});
  }
  if (max_vertex < 0) throw InvalidInputError("graph file defines no vertices");
  const int n = max_vertex + 1;
  std::vector<Partition> part(static_cast<std::size_t>(n), Partition::B);
  for (int v : a_sites) part[static_cast<std::size_t>(v)] = Partition::A;
  return custom(n, std::move(edges), std::move(part));
}

int BipartiteGraph::degree(int v) const {
  return static_cast<int>(adjacency_.at(static_cast<std::size_t>(v)).size());
}

std::vector<int> BipartiteGraph::sites_in(Partition p) const {
  std::vector<int> out;
  for (int v = 0; v < n_vertices_; ++v) {
    if (partition_[static_cast<std::size_t>(v)] == p) out.push_back(v);
  }
  return out;
}

std::uint64_t BipartiteGraph::partition_mask(Partition p) const {
  if (n_vertices_ > 64) throw InvalidInputError("partition_mask needs <= 64 vertices");
  std::uint64_t mask = 0;
  for (int v = 0; v < n_vertices_; ++v) {
    if (partition_[static_cast<std::size_t>(v)] == p) mask |= std::uint64_t{1} << v;
  }
  return mask;
}

int BipartiteGraph::coordination_number() const {
  switch (kind_) {
    case GraphKind::complete_bipartite:
      return n_vertices_ / 2;
    case GraphKind::ring:
      return 2;
    case GraphKind::torus:
      return 4;
    case GraphKind::custom:
      throw InvalidInputError("custom graphs have no canonical coordination number");
  }
  throw InvalidInputError("unknown graph kind");
}

}  // namespace scarsim
