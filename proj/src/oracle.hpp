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

#ifndef CROSSCUT_ORACLE_HPP
#define CROSSCUT_ORACLE_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "multigraph.hpp"

namespace crosscut {

class OracleBoundExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Size caps for the exhaustive reference solvers. Defaults can be overridden
/// with the CROSSCUT_ORACLE_MAX_N and CROSSCUT_ORACLE_MAX_EDGES environment
/// variables.
struct OracleBounds {
  int max_vertices = 20;
  int max_bfactor_edges = 24;

  static OracleBounds from_env();
};

/// Maximum cut by enumeration of all bipartitions (one vertex side is fixed;
/// the empty side is allowed, so the result is never negative for loop-free
/// graphs... more precisely: never below zero, since S = empty is a cut).
Rational brute_mc(const Multigraph& g, const OracleBounds& bounds = OracleBounds::from_env());

/// Maximum cut separating every pair in `pairs`, or nullopt when no
/// bipartition separates them all. Pairs are propagated by a parity
/// union-find first, so only one representative per forced class is
/// enumerated.
std::optional<Rational> brute_cmc(const Multigraph& g,
                                  const std::vector<std::pair<VertexId, VertexId>>& pairs,
                                  const OracleBounds& bounds = OracleBounds::from_env());

/// Like brute_cmc but also returns one optimal bipartition.
struct BruteCut {
  Rational value;
  std::map<VertexId, int> side;
};
std::optional<BruteCut> brute_cmc_cut(const Multigraph& g,
                                      const std::vector<std::pair<VertexId, VertexId>>& pairs,
                                      const OracleBounds& bounds = OracleBounds::from_env());

/// Maximum-cost subgraph in which every vertex v has degree exactly b(v)
/// (self-loops count two), by pruned enumeration over edge subsets.
std::optional<Rational> brute_bfactor(const Multigraph& g, const std::map<VertexId, int>& b,
                                      const OracleBounds& bounds = OracleBounds::from_env());

/// Maximum-weight perfect matching by recursive pairing enumeration.
/// `edges` are (u, v, w) with 0 <= u < v < n. Returns nullopt when no
/// perfect matching exists.
std::optional<Rational> brute_perfect_matching(
    int n, const std::vector<std::tuple<int, int, Rational>>& edges);

}  // namespace crosscut

#endif  // CROSSCUT_ORACLE_HPP
