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

#include "multigraph.hpp"

#include <algorithm>

namespace crosscut {

VertexId Multigraph::add_vertex() {
  VertexId v = next_vertex_++;
  vertices_.insert(v);
  return v;
}

void Multigraph::add_vertex_with_id(VertexId v) {
  if (vertices_.count(v)) throw InvalidGraphOp("duplicate vertex id " + std::to_string(v));
  vertices_.insert(v);
  next_vertex_ = std::max(next_vertex_, v + 1);
}

EdgeId Multigraph::add_edge(VertexId u, VertexId v, const Rational& w) {
  EdgeId id = next_edge_;
  add_edge_with_id(id, u, v, w);
  return id;
}

void Multigraph::add_edge_with_id(EdgeId id, VertexId u, VertexId v, const Rational& w) {
  if (!has_vertex(u) || !has_vertex(v)) {
    throw InvalidGraphOp("edge endpoint not in vertex set");
  }
  if (edges_.count(id)) throw InvalidGraphOp("duplicate edge id " + std::to_string(id));
  edges_.emplace(id, Edge{id, u, v, w});
  next_edge_ = std::max(next_edge_, id + 1);
}

void Multigraph::remove_edge(EdgeId e) {
  if (edges_.erase(e) == 0) throw InvalidGraphOp("unknown edge " + std::to_string(e));
}

void Multigraph::remove_vertex(VertexId v) {
  if (!has_vertex(v)) throw InvalidGraphOp("unknown vertex " + std::to_string(v));
  if (degree(v) != 0) throw InvalidGraphOp("removing non-isolated vertex " + std::to_string(v));
  vertices_.erase(v);
}

void Multigraph::move_endpoint(EdgeId e, VertexId from, VertexId to) {
  auto it = edges_.find(e);
  if (it == edges_.end()) throw InvalidGraphOp("unknown edge " + std::to_string(e));
  if (!has_vertex(to)) throw InvalidGraphOp("unknown vertex " + std::to_string(to));
  Edge& rec = it->second;
  if (rec.u == from) {
    rec.u = to;
  } else if (rec.v == from) {
    rec.v = to;
  } else {
    throw InvalidGraphOp("edge endpoint mismatch");
  }
}

const Edge& Multigraph::edge(EdgeId e) const {
  auto it = edges_.find(e);
  if (it == edges_.end()) throw InvalidGraphOp("unknown edge " + std::to_string(e));
  return it->second;
}

int Multigraph::degree(VertexId v) const {
  if (!has_vertex(v)) throw InvalidGraphOp("unknown vertex " + std::to_string(v));
  int d = 0;
  for (const auto& [id, e] : edges_) {
    if (e.u == v) ++d;
    if (e.v == v) ++d;
  }
  return d;
}

std::vector<EdgeId> Multigraph::incident_edges(VertexId v) const {
  std::vector<EdgeId> out;
  for (const auto& [id, e] : edges_) {
    if (e.u == v || e.v == v) out.push_back(id);
  }
  return out;
}

Rational Multigraph::total_weight() const {
  Rational t;
  for (const auto& [id, e] : edges_) t += e.weight;
  return t;
}

bool operator==(const Multigraph& a, const Multigraph& b) {
  if (a.vertices_ != b.vertices_) return false;
  if (a.edges_.size() != b.edges_.size()) return false;
  for (const auto& [id, e] : a.edges_) {
    auto it = b.edges_.find(id);
    if (it == b.edges_.end()) return false;
    const Edge& o = it->second;
    if (e.u != o.u || e.v != o.v || e.weight != o.weight) return false;
  }
  return true;
}

std::pair<Multigraph, VertexId> contract(const Multigraph& g, VertexId u, VertexId v) {
  if (u == v) throw InvalidGraphOp("contracting a vertex with itself");
  if (!g.has_vertex(u) || !g.has_vertex(v)) throw InvalidGraphOp("unknown vertex in contract");
  Multigraph out = g;
  VertexId merged = out.add_vertex();
  for (EdgeId id : out.incident_edges(u)) {
    const Edge e = out.edge(id);
    if (e.u == u) out.move_endpoint(id, u, merged);
    if (out.edge(id).v == u) out.move_endpoint(id, u, merged);
  }
  for (EdgeId id : out.incident_edges(v)) {
    const Edge e = out.edge(id);
    if (e.u == v) out.move_endpoint(id, v, merged);
    if (out.edge(id).v == v) out.move_endpoint(id, v, merged);
  }
  out.remove_vertex(u);
  out.remove_vertex(v);
  return {std::move(out), merged};
}

Rational cut_value(const Multigraph& g, const std::map<VertexId, int>& side) {
  for (VertexId v : g.vertices()) {
    if (side.find(v) == side.end()) {
      throw InvalidGraphOp("cut_value: vertex " + std::to_string(v) + " unassigned");
    }
  }
  Rational total;
  for (const auto& [id, e] : g.edges()) {
    if (e.is_loop()) continue;
    if (side.at(e.u) != side.at(e.v)) total += e.weight;
  }
  return total;
}

}  // namespace crosscut
