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

#include "embedding.hpp"

#include <algorithm>

#include "doctest.h"

using namespace crosscut;

namespace {

RawInstance triangle_raw() {
  RawInstance raw;
  raw.nodes = {{0, NodeKind::vertex}, {1, NodeKind::vertex}, {2, NodeKind::vertex}};
  raw.edges = {{0, 0, 1, Rational(1), {0}}, {1, 1, 2, Rational(1), {1}}, {2, 2, 0, Rational(1), {2}}};
  raw.rotations = {{0, {0, 2}}, {1, {1, 0}}, {2, {2, 1}}};
  return raw;
}

DrawnInstance cycle_drawn(int n) {
  DrawnInstance d;
  std::vector<VertexId> vs;
  for (int i = 0; i < n; ++i) vs.push_back(d.add_vertex());
  for (int i = 0; i < n; ++i) d.add_edge_appending(vs[i], vs[(i + 1) % n], Rational(1));
  return d;
}

// Some dart at node n bounding face `face`.
Dart dart_at_on_face(const DrawnInstance& d, NodeId n, int face, const FaceSet& fs) {
  for (int slot = 0; slot < static_cast<int>(d.rotation(n).size()); ++slot) {
    Dart cand{n, slot};
    if (fs.face_of.at(cand) == face) return cand;
  }
  throw std::runtime_error("no dart of that node on the face");
}

// C4 with one extra 0-3 edge crossing the 1-2 edge once.
DrawnInstance crossed_square() {
  DrawnInstance d = cycle_drawn(4);
  EdgeId e12 = 1;  // edges were added in order 01, 12, 23, 30
  SegmentId s = d.edge_chain(e12).front();
  Dart sd = d.find_dart(s, 0);
  FaceSet fs = d.compute_faces();
  Dart before_u = dart_at_on_face(d, 0, fs.face_of.at(sd), fs);
  Dart before_v = dart_at_on_face(d, 3, fs.face_of.at(d.twin(sd)), fs);
  d.insert_edge_crossing(before_u, sd, before_v, Rational(1));
  return d;
}

}  // namespace

TEST_CASE("triangle from raw parts validates and has two triangular faces") {
  DrawnInstance d = DrawnInstance::from_raw(triangle_raw());
  CHECK(!d.validate().has_value());
  CHECK(d.k() == 0);
  CHECK(d.is_one_planar());
  FaceSet fs = d.compute_faces();
  REQUIRE(fs.faces.size() == 2);
  CHECK(fs.faces[0].size() == 3);
  CHECK(fs.faces[1].size() == 3);
}

TEST_CASE("face sizes sum to twice the segment count") {
  for (int n : {3, 4, 6}) {
    DrawnInstance d = cycle_drawn(n);
    FaceSet fs = d.compute_faces();
    std::size_t total = 0;
    for (const Face& f : fs.faces) total += f.size();
    CHECK(total == 2 * d.segments().size());
  }
}

TEST_CASE("cube graph embedding has six quadrilateral faces") {
  // Outer 4-cycle, inner 4-cycle, four spokes; rotations written by hand.
  RawInstance raw;
  for (int i = 0; i < 8; ++i) raw.nodes.push_back({i, NodeKind::vertex});
  // outer edges 0..3 (segments 0..3), inner edges 4..7 (segments 4..7),
  // spokes i -> i+4 with edges 8..11 (segments 8..11)
  for (int i = 0; i < 4; ++i) {
    raw.edges.push_back({i, i, (i + 1) % 4, Rational(1), {i}});
    raw.edges.push_back({4 + i, 4 + i, 4 + (i + 1) % 4, Rational(1), {4 + i}});
    raw.edges.push_back({8 + i, i, 4 + i, Rational(1), {8 + i}});
  }
  for (int i = 0; i < 4; ++i) {
    int prev_outer = (i + 3) % 4;
    // counterclockwise at outer vertex i: next outer, spoke, previous outer
    raw.rotations[i] = {i, 8 + i, prev_outer};
    // counterclockwise at inner vertex: previous inner, spoke, next inner
    raw.rotations[4 + i] = {4 + (i + 3) % 4, 8 + i, 4 + i};
  }
  DrawnInstance d = DrawnInstance::from_raw(raw);
  FaceSet fs = d.compute_faces();
  REQUIRE(fs.faces.size() == 6);
  for (const Face& f : fs.faces) CHECK(f.size() == 4);
}

TEST_CASE("validate flags a dangling segment occurrence") {
  RawInstance raw = triangle_raw();
  raw.rotations[1] = {1};  // drop segment 0's second end
  auto [inst, issue] = DrawnInstance::from_raw_lenient(raw);
  (void)inst;
  REQUIRE(issue.has_value());
  CHECK(issue->find("segment") != std::string::npos);
}

TEST_CASE("validate flags non-opposite crossing segments") {
  // Two edges 0-1 and 2-3 meeting at a degree-4 crossing node, but with the
  // same edge's segments adjacent in the rotation.
  RawInstance raw;
  for (int i = 0; i < 4; ++i) raw.nodes.push_back({i, NodeKind::vertex});
  raw.nodes.push_back({4, NodeKind::crossing});
  raw.edges = {{0, 0, 1, Rational(1), {0, 1}}, {1, 2, 3, Rational(1), {2, 3}}};
  raw.rotations = {{0, {0}}, {1, {1}}, {2, {2}}, {3, {3}}, {4, {0, 1, 2, 3}}};
  auto [inst, issue] = DrawnInstance::from_raw_lenient(raw);
  (void)inst;
  REQUIRE(issue.has_value());
  CHECK(issue->find("opposite") != std::string::npos);
}

TEST_CASE("inserting an edge across a segment creates one valid crossing") {
  DrawnInstance d = crossed_square();
  CHECK(!d.validate().has_value());
  CHECK(d.k() == 1);
  CHECK(d.is_one_planar());
  CHECK(d.graph().edge_count() == 5);
  // planarization: 5 nodes, 7 segments, 4 faces
  CHECK(d.nodes().size() == 5);
  CHECK(d.segments().size() == 7);
  CHECK(d.compute_faces().faces.size() == 4);
}

TEST_CASE("crossing corners are the four endpoints of the crossed edges") {
  DrawnInstance d = crossed_square();
  NodeId x = d.crossings().begin()->first;
  auto corners = d.crossing_corners(x);
  std::set<VertexId> got(corners.begin(), corners.end());
  CHECK(got == std::set<VertexId>{0, 1, 2, 3});
}

TEST_CASE("subdividing a triangle edge yields a five-cycle") {
  DrawnInstance d = DrawnInstance::from_raw(triangle_raw());
  auto res = d.subdivide_edge(0, SubdivideSplit{0, 0, 0});
  CHECK(!d.validate().has_value());
  CHECK(d.graph().edge_count() == 5);
  CHECK(d.graph().vertex_count() == 5);
  for (const auto& [id, e] : d.graph().edges()) CHECK(e.weight == Rational(1));
  for (EdgeId e : res.path_edges) CHECK(d.graph().has_edge(e));
  for (VertexId v : res.path_nodes) CHECK(d.graph().degree(v) == 2);
  FaceSet fs = d.compute_faces();
  REQUIRE(fs.faces.size() == 2);
  CHECK(fs.faces[0].size() == 5);
}

TEST_CASE("subdividing a crossed edge keeps the crossing and distributes it") {
  DrawnInstance d = crossed_square();
  EdgeId crossed = d.crossings().begin()->second.e1;
  auto res = d.subdivide_edge(crossed, SubdivideSplit{0, 1, 0});
  CHECK(!d.validate().has_value());
  CHECK(d.k() == 1);
  // the middle path edge now carries the crossing
  CHECK(d.edge_chain(res.path_edges[1]).size() == 2);
  CHECK(d.edge_chain(res.path_edges[0]).size() == 1);
  CHECK(d.edge_chain(res.path_edges[2]).size() == 1);
}

TEST_CASE("subdividing a self-loop dissolves it into a triangle") {
  DrawnInstance d;
  VertexId u = d.add_vertex();
  EdgeId loop = d.add_edge_appending(u, u, Rational(2));
  CHECK(!d.validate().has_value());
  d.subdivide_edge(loop, SubdivideSplit{0, 0, 0});
  CHECK(!d.validate().has_value());
  CHECK(d.graph().vertex_count() == 3);
  CHECK(d.graph().edge_count() == 3);
  for (const auto& [id, e] : d.graph().edges()) CHECK(!e.is_loop());
}

TEST_CASE("removing a crossed edge dissolves its crossing") {
  DrawnInstance d = crossed_square();
  EdgeId added = d.crossings().begin()->second.e2;
  d.remove_edge_uncrossing(added);
  CHECK(!d.validate().has_value());
  CHECK(d.k() == 0);
  CHECK(d.graph().edge_count() == 4);
  CHECK(d.segments().size() == 4);
  CHECK(d.compute_faces().faces.size() == 2);
}

TEST_CASE("contracting a preprocessed crossing removes it and stays valid") {
  DrawnInstance d = crossed_square();
  NodeId x = d.crossings().begin()->first;
  CrossingInfo info = d.crossings().begin()->second;
  d.subdivide_edge(info.e1, SubdivideSplit{0, 1, 0});
  d.subdivide_edge(info.e2, SubdivideSplit{0, 1, 0});
  REQUIRE(!d.validate().has_value());

  SUBCASE("contraction") {
    auto res = d.contract_crossing(x);
    CHECK(!d.validate().has_value());
    CHECK(d.k() == 0);
    CHECK(d.graph().has_vertex(res.merged));
    CHECK(d.graph().degree(res.merged) == 4);
    CHECK(d.graph().vertex_count() == 7);  // 4 + 4 subdivision - 2 merged + 1
  }

  SUBCASE("pseudo-face frame") {
    std::size_t edges_before = d.graph().edge_count();
    auto frame = d.add_pseudo_face_frame(x);
    CHECK(!d.validate().has_value());
    CHECK(d.k() == 1);
    CHECK(d.graph().edge_count() == edges_before + 4);
    for (EdgeId e : frame.cycle_edges) CHECK(d.graph().edge(e).weight == Rational(0));
    // the four faces at the crossing node are triangles
    FaceSet fs = d.compute_faces();
    std::set<int> faces_at_x;
    for (int slot = 0; slot < 4; ++slot) faces_at_x.insert(fs.face_of.at(Dart{x, slot}));
    CHECK(faces_at_x.size() == 4);
    for (int f : faces_at_x) CHECK(fs.faces[f].size() == 3);
    // corner degrees grew from 2 to 4
    for (VertexId c : frame.corners) CHECK(d.graph().degree(c) == 4);
  }
}

TEST_CASE("add_chord splits a face") {
  DrawnInstance d = cycle_drawn(4);
  FaceSet fs = d.compute_faces();
  Dart c0 = dart_at_on_face(d, 0, 0, fs);
  Dart c2 = dart_at_on_face(d, 2, 0, fs);
  d.add_chord(c0, c2, Rational(0));
  CHECK(!d.validate().has_value());
  FaceSet after = d.compute_faces();
  CHECK(after.faces.size() == 3);
}

TEST_CASE("add_vertex_in_face fans out to the chosen corners") {
  DrawnInstance d = cycle_drawn(4);
  FaceSet fs = d.compute_faces();
  const Face& f = fs.faces[0];
  std::vector<Dart> corners = {f.darts[0], f.darts[1], f.darts[2]};
  VertexId x = d.add_vertex_in_face(corners, {Rational(1), Rational(1), Rational(1)});
  CHECK(!d.validate().has_value());
  CHECK(d.graph().degree(x) == 3);
  CHECK(d.compute_faces().faces.size() == 4);
}
