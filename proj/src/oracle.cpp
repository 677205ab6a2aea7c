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

#include "oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <tuple>

namespace crosscut {

namespace {

int env_int(const char* name, int fallback) {
  const char* s = std::getenv(name);
  if (s == nullptr || *s == '\0') return fallback;
  return std::atoi(s);
}

// Union-find with parity relative to the class root.
struct ParityDsu {
  std::vector<int> parent, rank_, parity;

  explicit ParityDsu(int n) : parent(n), rank_(n, 0), parity(n, 0) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  std::pair<int, int> find(int x) {
    if (parent[x] == x) return {x, 0};
    auto [root, p] = find(parent[x]);
    parent[x] = root;
    parity[x] ^= p;
    return {root, parity[x]};
  }

  // Returns false on contradiction.
  bool join(int a, int b, int rel) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return (pa ^ pb) == rel;
    if (rank_[ra] < rank_[rb]) {
      std::swap(ra, rb);
      std::swap(pa, pb);
    }
    parent[rb] = ra;
    parity[rb] = pa ^ pb ^ rel;
    if (rank_[ra] == rank_[rb]) ++rank_[ra];
    return true;
  }
};

}  // namespace

OracleBounds OracleBounds::from_env() {
  OracleBounds b;
  b.max_vertices = env_int("CROSSCUT_ORACLE_MAX_N", b.max_vertices);
  b.max_bfactor_edges = env_int("CROSSCUT_ORACLE_MAX_EDGES", b.max_bfactor_edges);
  return b;
}

std::optional<BruteCut> brute_cmc_cut(const Multigraph& g,
                                      const std::vector<std::pair<VertexId, VertexId>>& pairs,
                                      const OracleBounds& bounds) {
  const int n = static_cast<int>(g.vertex_count());
  if (n > bounds.max_vertices) {
    throw OracleBoundExceeded("instance exceeds oracle vertex bound (" + std::to_string(n) +
                              " > " + std::to_string(bounds.max_vertices) + ")");
  }
  std::vector<VertexId> verts(g.vertices().begin(), g.vertices().end());
  std::map<VertexId, int> index;
  for (int i = 0; i < n; ++i) index[verts[i]] = i;

  ParityDsu dsu(std::max(n, 1));
  for (const auto& [a, b] : pairs) {
    if (!g.has_vertex(a) || !g.has_vertex(b)) {
      throw InvalidGraphOp("constraint references unknown vertex");
    }
    if (!dsu.join(index[a], index[b], 1)) return std::nullopt;
  }

  // One free bit per parity class; the first class is pinned to side 0.
  std::map<int, int> class_bit;
  for (int i = 0; i < n; ++i) {
    int root = dsu.find(i).first;
    if (!class_bit.count(root)) {
      int bit = static_cast<int>(class_bit.size());
      class_bit[root] = bit;
    }
  }
  const int free_bits = std::max(0, static_cast<int>(class_bit.size()) - 1);

  struct FlatEdge {
    int u, v;
    Rational w;
  };
  std::vector<FlatEdge> flat;
  for (const auto& [id, e] : g.edges()) {
    if (e.is_loop()) continue;
    flat.push_back({index[e.u], index[e.v], e.weight});
  }

  std::vector<int> side_of_vertex(std::max(n, 1), 0);
  auto assign = [&](unsigned long long mask) {
    for (int i = 0; i < n; ++i) {
      auto [root, parity] = dsu.find(i);
      int bit = class_bit[root];
      int base = bit == 0 ? 0 : static_cast<int>((mask >> (bit - 1)) & 1ULL);
      side_of_vertex[i] = base ^ parity;
    }
  };

  std::optional<BruteCut> best;
  for (unsigned long long mask = 0; mask < (1ULL << free_bits); ++mask) {
    assign(mask);
    Rational value;
    for (const FlatEdge& e : flat) {
      if (side_of_vertex[e.u] != side_of_vertex[e.v]) value += e.w;
    }
    if (!best || best->value < value) {
      BruteCut cut;
      cut.value = value;
      for (int i = 0; i < n; ++i) cut.side[verts[i]] = side_of_vertex[i];
      best = std::move(cut);
    }
  }
  return best;
}

std::optional<Rational> brute_cmc(const Multigraph& g,
                                  const std::vector<std::pair<VertexId, VertexId>>& pairs,
                                  const OracleBounds& bounds) {
  auto cut = brute_cmc_cut(g, pairs, bounds);
  if (!cut) return std::nullopt;
  return cut->value;
}

Rational brute_mc(const Multigraph& g, const OracleBounds& bounds) {
  auto r = brute_cmc(g, {}, bounds);
  return *r;  // always feasible without constraints
}

std::optional<Rational> brute_bfactor(const Multigraph& g, const std::map<VertexId, int>& b,
                                      const OracleBounds& bounds) {
  const int m = static_cast<int>(g.edge_count());
  if (m > bounds.max_bfactor_edges) {
    throw OracleBoundExceeded("instance exceeds oracle edge bound (" + std::to_string(m) +
                              " > " + std::to_string(bounds.max_bfactor_edges) + ")");
  }
  std::vector<VertexId> verts(g.vertices().begin(), g.vertices().end());
  const int n = static_cast<int>(verts.size());
  std::map<VertexId, int> index;
  for (int i = 0; i < n; ++i) index[verts[i]] = i;

  std::vector<int> need(n);
  for (int i = 0; i < n; ++i) {
    auto it = b.find(verts[i]);
    if (it == b.end()) throw InvalidGraphOp("b-factor target missing for a vertex");
    need[i] = it->second;
    if (need[i] < 0) return std::nullopt;
  }

  struct FlatEdge {
    int u, v;  // u == v encodes a self-loop
    Rational w;
  };
  std::vector<FlatEdge> flat;
  for (const auto& [id, e] : g.edges()) flat.push_back({index[e.u], index[e.v], e.weight});

  // Process edges ordered by their larger endpoint so that each vertex's
  // incident list closes at a known position; prune on remaining capacity.
  std::sort(flat.begin(), flat.end(), [](const FlatEdge& a, const FlatEdge& b2) {
    return std::max(a.u, a.v) < std::max(b2.u, b2.v);
  });
  std::vector<int> capacity(n, 0);  // endpoint slots still ahead of position i
  for (const FlatEdge& e : flat) {
    capacity[e.u] += e.u == e.v ? 2 : 1;
    if (e.u != e.v) capacity[e.v] += 1;
  }
  std::vector<int> remaining = need;
  std::optional<Rational> best;
  Rational acc;

  auto feasible_ahead = [&]() {
    for (int v = 0; v < n; ++v) {
      if (remaining[v] < 0 || remaining[v] > capacity[v]) return false;
    }
    return true;
  };

  std::function<void(int)> rec = [&](int i) {
    if (i == static_cast<int>(flat.size())) {
      for (int v = 0; v < n; ++v) {
        if (remaining[v] != 0) return;
      }
      if (!best || *best < acc) best = acc;
      return;
    }
    const FlatEdge& e = flat[i];
    const int du = e.u == e.v ? 2 : 1;
    capacity[e.u] -= du;
    if (e.u != e.v) capacity[e.v] -= 1;

    // skip edge
    if (feasible_ahead()) rec(i + 1);

    // take edge
    remaining[e.u] -= du;
    if (e.u != e.v) remaining[e.v] -= 1;
    acc += e.w;
    if (feasible_ahead()) rec(i + 1);
    acc -= e.w;
    remaining[e.u] += du;
    if (e.u != e.v) remaining[e.v] += 1;

    capacity[e.u] += du;
    if (e.u != e.v) capacity[e.v] += 1;
  };

  // Isolated vertices with b > 0 are infeasible outright.
  for (int v = 0; v < n; ++v) {
    if (need[v] > capacity[v]) return std::nullopt;
  }
  rec(0);
  return best;
}

std::optional<Rational> brute_perfect_matching(
    int n, const std::vector<std::tuple<int, int, Rational>>& edges) {
  if (n % 2 != 0) return std::nullopt;
  std::vector<std::vector<std::pair<int, Rational>>> adj(n);
  for (const auto& [u, v, w] : edges) {
    adj[u].emplace_back(v, w);
    adj[v].emplace_back(u, w);
  }
  std::vector<bool> used(n, false);
  std::optional<Rational> best;
  Rational acc;

  std::function<void()> rec = [&]() {
    int u = -1;
    for (int i = 0; i < n; ++i) {
      if (!used[i]) {
        u = i;
        break;
      }
    }
    if (u < 0) {
      if (!best || *best < acc) best = acc;
      return;
    }
    used[u] = true;
    for (const auto& [v, w] : adj[u]) {
      if (used[v]) continue;
      used[v] = true;
      acc += w;
      rec();
      acc -= w;
      used[v] = false;
    }
    used[u] = false;
  };
  rec();
  return best;
}

}  // namespace crosscut
