// Copyright 2026 The crosscut authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CROSSCUT_MULTIGRAPH_HPP
#define CROSSCUT_MULTIGRAPH_HPP

#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace crosscut {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

class InvalidGraphOp : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Edge {
  EdgeId id;
  VertexId u;
  VertexId v;
  Rational weight;

  bool is_loop() const { return u == v; }
  VertexId other(VertexId at) const { return at == u ? v : u; }
};

/// Weighted multigraph with parallel edges and (where a caller allows them)
/// self-loops. Edge and vertex ids are assigned by monotone counters and are
/// never reused, so they stay stable references across transformations.
/// Instances are meant to be treated as values: transformations copy.
class Multigraph {
public:
  VertexId add_vertex();
  void add_vertex_with_id(VertexId v);
  EdgeId add_edge(VertexId u, VertexId v, const Rational& w);
  void add_edge_with_id(EdgeId id, VertexId u, VertexId v, const Rational& w);

  void remove_edge(EdgeId e);
  /// Vertex must have no incident edges.
  void remove_vertex(VertexId v);
  /// Re-attaches one endpoint of an existing edge (keeps id and weight).
  void move_endpoint(EdgeId e, VertexId from, VertexId to);

  bool has_vertex(VertexId v) const { return vertices_.count(v) != 0; }
  bool has_edge(EdgeId e) const { return edges_.count(e) != 0; }
  const Edge& edge(EdgeId e) const;

  const std::set<VertexId>& vertices() const { return vertices_; }
  const std::map<EdgeId, Edge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  /// Number of edge endpoints at v; a self-loop contributes two.
  int degree(VertexId v) const;
  std::vector<EdgeId> incident_edges(VertexId v) const;  // loops listed once

  Rational total_weight() const;

  VertexId next_vertex_id() const { return next_vertex_; }
  EdgeId next_edge_id() const { return next_edge_; }

  friend bool operator==(const Multigraph& a, const Multigraph& b);

private:
  std::set<VertexId> vertices_;
  std::map<EdgeId, Edge> edges_;
  VertexId next_vertex_ = 0;
  EdgeId next_edge_ = 0;
};

bool operator==(const Multigraph& a, const Multigraph& b);

/// Contracts u and v into a fresh vertex (returned with the new graph).
/// Edges between u and v become self-loops; ids and weights are preserved.
std::pair<Multigraph, VertexId> contract(const Multigraph& g, VertexId u, VertexId v);

/// Total weight of edges whose endpoints get different sides. Self-loops
/// never contribute. Every vertex must be assigned.
Rational cut_value(const Multigraph& g, const std::map<VertexId, int>& side);

struct SolveStats {
  long long branches = 0;
  long long infeasible_branches = 0;
  long long offsets_applied = 0;
};

struct CutSolution {
  std::map<VertexId, int> side;
  Rational value;
  SolveStats stats;
};

}  // namespace crosscut

#endif  // CROSSCUT_MULTIGRAPH_HPP
