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

#ifndef CROSSCUT_EMBEDDING_HPP
#define CROSSCUT_EMBEDDING_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "multigraph.hpp"

namespace crosscut {

using NodeId = VertexId;  // vertices and crossing nodes share one id space
using SegmentId = std::int32_t;

enum class NodeKind : std::uint8_t { vertex, crossing };

class EmbeddingError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// One end of a segment, addressed as a slot in a node's rotation.
struct Dart {
  NodeId node;
  int slot;

  friend bool operator==(const Dart& a, const Dart& b) {
    return a.node == b.node && a.slot == b.slot;
  }
  friend bool operator<(const Dart& a, const Dart& b) {
    return a.node != b.node ? a.node < b.node : a.slot < b.slot;
  }
};

/// Entry in a rotation list: which segment end leaves the node here.
struct DartRef {
  SegmentId seg;
  int end;  // 0 or 1

  friend bool operator==(const DartRef& a, const DartRef& b) {
    return a.seg == b.seg && a.end == b.end;
  }
};

struct Segment {
  SegmentId id;
  std::array<NodeId, 2> node;  // node[end]
  EdgeId edge;
};

struct CrossingInfo {
  NodeId node;
  EdgeId e1, e2;  // e1 < e2
};

struct Face {
  std::vector<Dart> darts;
  std::size_t size() const { return darts.size(); }
};

/// All faces of an embedding plus a dart -> face lookup.
struct FaceSet {
  std::vector<Face> faces;
  std::map<Dart, int> face_of;
};

struct SubdivideSplit {
  int before = 0;  // crossings assigned to the tail-side replacement edge
  int middle = 0;
  int after = 0;
};

struct SubdivideResult {
  EdgeId original;
  std::array<EdgeId, 3> path_edges;    // tail..u', u'..v', v'..head
  std::array<VertexId, 2> path_nodes;  // u', v'
  SubdivideSplit split;
  Rational weight;
};

struct ContractResult {
  NodeId crossing;
  std::array<VertexId, 4> corners;  // (a, b, c, d) ccw around the crossing
  EdgeId edge_ac, edge_bd;
  VertexId merged;  // replaces a and b
};

struct PseudoFaceFrame {
  NodeId crossing;
  std::array<VertexId, 4> corners;      // (a, b, c, d) ccw
  std::array<EdgeId, 4> cycle_edges;    // ab, bc, cd, da, all weight 0
  EdgeId edge_ac, edge_bd;              // the crossing diagonals
  EdgeId constrained_edge;              // == cycle_edges[0]
};

struct InsertCrossingResult {
  EdgeId new_edge;
  NodeId crossing;
};

struct CornerContext {
  std::array<VertexId, 4> corners;
  std::array<EdgeId, 4> out_edge;    // the non-diagonal edge at each corner
  std::array<SegmentId, 4> out_seg;  // its segment touching the corner
  std::array<int, 4> out_end;        // which end of out_seg sits there
};

/// Raw representation used by the JSON loader and by test fixtures; segment
/// endpoints are inferred from rotation occurrences (first hit is end 0).
struct RawInstance {
  struct RawEdge {
    EdgeId id;
    VertexId u, v;
    Rational weight;
    std::vector<SegmentId> segments;  // ordered from u to v
  };
  std::vector<std::pair<NodeId, NodeKind>> nodes;
  std::vector<RawEdge> edges;
  std::map<NodeId, std::vector<SegmentId>> rotations;  // counterclockwise
};

/// A weighted multigraph together with a combinatorial drawing: the rotation
/// system of its planarized skeleton, where each crossing is a marked
/// degree-4 node splitting the two involved edges into segments. Faces and
/// all drawing surgery are derived from the rotation system alone; there is
/// no geometry and no distinguished outer face.
class DrawnInstance {
public:
  DrawnInstance() = default;

  static DrawnInstance from_raw(const RawInstance& raw);
  /// Builds what it can and reports the first problem (structural or
  /// invariant) instead of throwing.
  static std::pair<DrawnInstance, std::optional<std::string>> from_raw_lenient(
      const RawInstance& raw);

  // --- read access -------------------------------------------------------
  const Multigraph& graph() const { return graph_; }
  const std::map<NodeId, NodeKind>& nodes() const { return kind_; }
  NodeKind kind(NodeId n) const;
  const std::vector<DartRef>& rotation(NodeId n) const;
  const std::map<SegmentId, Segment>& segments() const { return segments_; }
  const Segment& segment(SegmentId s) const;
  const std::map<NodeId, CrossingInfo>& crossings() const { return crossings_; }
  const std::vector<SegmentId>& edge_chain(EdgeId e) const;
  int k() const { return static_cast<int>(crossings_.size()); }

  DartRef dart_ref(const Dart& d) const;
  NodeId dart_target(const Dart& d) const;  // node at the segment's far end
  Dart twin(const Dart& d) const;
  Dart rot_next(const Dart& d) const;
  Dart rot_prev(const Dart& d) const;
  Dart find_dart(SegmentId seg, int end) const;

  /// Node sequence of an edge's chain from edge.u to edge.v.
  std::vector<NodeId> chain_nodes(EdgeId e) const;
  /// Crossing nodes along an edge, in chain order.
  std::vector<NodeId> crossings_on_edge(EdgeId e) const;

  // --- faces & validation -------------------------------------------------
  FaceSet compute_faces() const;
  std::optional<std::string> validate() const;
  bool is_one_planar() const;
  /// Corner labels (a, b, c, d) of a crossing, counterclockwise, starting
  /// with the tail-side neighbor of the lower-id edge. Requires both edges
  /// to carry only this crossing (i.e. after preprocessing).
  std::array<VertexId, 4> crossing_corners(NodeId x) const;

  // --- construction -------------------------------------------------------
  VertexId add_vertex();
  void add_vertex_with_id(VertexId v);
  /// First edge between isolated-ish endpoints: darts are appended to the
  /// end of both rotations. Only safe while building where any cyclic
  /// position is acceptable (e.g. degree <= 1 endpoints).
  EdgeId add_edge_appending(VertexId u, VertexId v, const Rational& w);

  // --- drawing surgery ----------------------------------------------------
  /// New zero-or-weighted edge between two corners of one face. A corner is
  /// named by the dart it precedes: the new dart is inserted immediately
  /// before `before_*` in the counterclockwise rotation.
  EdgeId add_chord(const Dart& before_u, const Dart& before_v, const Rational& w);

  /// New vertex inside the face shared by all corners, joined to each
  /// corner's node. Corners must be listed in face order.
  VertexId add_vertex_in_face(const std::vector<Dart>& corners, const std::vector<Rational>& weights);

  /// New edge from corner `before_u` across segment `seg_dart` (a dart on
  /// the same face) to corner `before_v` on the segment's other face,
  /// creating one crossing.
  InsertCrossingResult insert_edge_crossing(const Dart& before_u, const Dart& seg_dart,
                                            const Dart& before_v, const Rational& w);

  /// Replaces edge e by a three-edge path of the same weight, distributing
  /// e's crossings over the path per `split` (order preserved).
  SubdivideResult subdivide_edge(EdgeId e, const SubdivideSplit& split);

  /// Removes an edge; crossings on it are dissolved (the other edge's two
  /// segments merge). Endpoints stay.
  void remove_edge_uncrossing(EdgeId e);
  void remove_isolated_vertex(VertexId v);

  /// Branch case |S ∩ {a,b}| != 1: merges corners a and b of a preprocessed
  /// crossing into a fresh vertex and removes the crossing, rerouting the
  /// diagonals to c and d without creating a new crossing.
  ContractResult contract_crossing(NodeId x);

  /// Branch case |S ∩ {a,b}| = 1: adds the four zero-weight cycle edges
  /// ab, bc, cd, da around a preprocessed crossing. No new crossing.
  PseudoFaceFrame add_pseudo_face_frame(NodeId x);

  friend bool operator==(const DrawnInstance& a, const DrawnInstance& b);

private:
  CornerContext corner_context(NodeId x) const;
  int slot_of(NodeId n, SegmentId seg, int end) const;
  void insert_dart_before(NodeId n, int slot, SegmentId seg, int end);
  void append_dart(NodeId n, SegmentId seg, int end);
  void remove_dart(NodeId n, SegmentId seg, int end);
  SegmentId new_segment(NodeId n0, NodeId n1, EdgeId e);
  void retarget_segment_end(SegmentId s, int end, NodeId to);
  NodeId new_crossing_node(EdgeId e1, EdgeId e2);
  /// Splits a segment at a new interior node; returns the id of the half
  /// adjacent to `seg`'s end 1 (the end-0 half keeps the id).
  SegmentId split_segment(SegmentId s, NodeId at);

  Multigraph graph_;
  std::map<NodeId, NodeKind> kind_;
  std::map<NodeId, std::vector<DartRef>> rotation_;
  std::map<SegmentId, Segment> segments_;
  std::map<EdgeId, std::vector<SegmentId>> edge_segments_;
  std::map<NodeId, CrossingInfo> crossings_;
  SegmentId next_segment_ = 0;
  NodeId next_node_ = 0;
};

bool operator==(const DrawnInstance& a, const DrawnInstance& b);

/// Throws EmbeddingError unless the instance validates; used after every
/// surgery step in the pipeline.
void require_valid(const DrawnInstance& d, const std::string& context);

}  // namespace crosscut

#endif  // CROSSCUT_EMBEDDING_HPP
