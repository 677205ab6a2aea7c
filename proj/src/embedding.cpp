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
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace crosscut {

namespace {

std::string fmt(const char* what, long long a, long long b = -1) {
  std::ostringstream os;
  os << what << " " << a;
  if (b >= 0) os << "/" << b;
  return os.str();
}

}  // namespace

NodeKind DrawnInstance::kind(NodeId n) const {
  auto it = kind_.find(n);
  if (it == kind_.end()) throw EmbeddingError("unknown node " + std::to_string(n));
  return it->second;
}

const std::vector<DartRef>& DrawnInstance::rotation(NodeId n) const {
  auto it = rotation_.find(n);
  if (it == rotation_.end()) throw EmbeddingError("unknown node " + std::to_string(n));
  return it->second;
}

const Segment& DrawnInstance::segment(SegmentId s) const {
  auto it = segments_.find(s);
  if (it == segments_.end()) throw EmbeddingError("unknown segment " + std::to_string(s));
  return it->second;
}

const std::vector<SegmentId>& DrawnInstance::edge_chain(EdgeId e) const {
  auto it = edge_segments_.find(e);
  if (it == edge_segments_.end()) throw EmbeddingError("unknown edge chain " + std::to_string(e));
  return it->second;
}

DartRef DrawnInstance::dart_ref(const Dart& d) const {
  const auto& rot = rotation(d.node);
  if (d.slot < 0 || d.slot >= static_cast<int>(rot.size())) {
    throw EmbeddingError("dart slot out of range at node " + std::to_string(d.node));
  }
  return rot[d.slot];
}

NodeId DrawnInstance::dart_target(const Dart& d) const {
  DartRef r = dart_ref(d);
  return segment(r.seg).node[1 - r.end];
}

Dart DrawnInstance::find_dart(SegmentId seg, int end) const {
  NodeId n = segment(seg).node[end];
  return Dart{n, slot_of(n, seg, end)};
}

Dart DrawnInstance::twin(const Dart& d) const {
  DartRef r = dart_ref(d);
  return find_dart(r.seg, 1 - r.end);
}

Dart DrawnInstance::rot_next(const Dart& d) const {
  int deg = static_cast<int>(rotation(d.node).size());
  return Dart{d.node, (d.slot + 1) % deg};
}

Dart DrawnInstance::rot_prev(const Dart& d) const {
  int deg = static_cast<int>(rotation(d.node).size());
  return Dart{d.node, (d.slot + deg - 1) % deg};
}

int DrawnInstance::slot_of(NodeId n, SegmentId seg, int end) const {
  const auto& rot = rotation(n);
  for (int i = 0; i < static_cast<int>(rot.size()); ++i) {
    if (rot[i].seg == seg && rot[i].end == end) return i;
  }
  throw EmbeddingError("dart (" + std::to_string(seg) + "," + std::to_string(end) +
                       ") not present at node " + std::to_string(n));
}

void DrawnInstance::insert_dart_before(NodeId n, int slot, SegmentId seg, int end) {
  auto& rot = rotation_.at(n);
  rot.insert(rot.begin() + slot, DartRef{seg, end});
}

void DrawnInstance::append_dart(NodeId n, SegmentId seg, int end) {
  rotation_.at(n).push_back(DartRef{seg, end});
}

void DrawnInstance::remove_dart(NodeId n, SegmentId seg, int end) {
  auto& rot = rotation_.at(n);
  rot.erase(rot.begin() + slot_of(n, seg, end));
}

SegmentId DrawnInstance::new_segment(NodeId n0, NodeId n1, EdgeId e) {
  SegmentId id = next_segment_++;
  segments_.emplace(id, Segment{id, {n0, n1}, e});
  return id;
}

void DrawnInstance::retarget_segment_end(SegmentId s, int end, NodeId to) {
  segments_.at(s).node[end] = to;
}

NodeId DrawnInstance::new_crossing_node(EdgeId e1, EdgeId e2) {
  NodeId id = next_node_++;
  kind_[id] = NodeKind::crossing;
  rotation_[id] = {};
  if (e1 > e2) std::swap(e1, e2);
  crossings_[id] = CrossingInfo{id, e1, e2};
  return id;
}

SegmentId DrawnInstance::split_segment(SegmentId s, NodeId at) {
  Segment& rec = segments_.at(s);
  NodeId far = rec.node[1];
  // The far node keeps its slot; the dart there now belongs to the new half.
  SegmentId s2 = new_segment(at, far, rec.edge);
  int slot = slot_of(far, s, 1);
  rotation_.at(far)[slot] = DartRef{s2, 1};
  segments_.at(s).node[1] = at;
  append_dart(at, s, 1);
  append_dart(at, s2, 0);
  return s2;
}

VertexId DrawnInstance::add_vertex() {
  NodeId id = next_node_++;
  graph_.add_vertex_with_id(id);
  kind_[id] = NodeKind::vertex;
  rotation_[id] = {};
  return id;
}

void DrawnInstance::add_vertex_with_id(VertexId v) {
  graph_.add_vertex_with_id(v);
  kind_[v] = NodeKind::vertex;
  rotation_[v] = {};
  next_node_ = std::max(next_node_, v + 1);
}

EdgeId DrawnInstance::add_edge_appending(VertexId u, VertexId v, const Rational& w) {
  EdgeId e = graph_.add_edge(u, v, w);
  SegmentId s = new_segment(u, v, e);
  append_dart(u, s, 0);
  append_dart(v, s, 1);
  edge_segments_[e] = {s};
  return e;
}

std::vector<NodeId> DrawnInstance::chain_nodes(EdgeId e) const {
  const Edge& rec = graph_.edge(e);
  const auto& chain = edge_chain(e);
  std::vector<NodeId> nodes{rec.u};
  NodeId cur = rec.u;
  for (SegmentId s : chain) {
    const Segment& seg = segment(s);
    NodeId next;
    if (seg.node[0] == cur) {
      next = seg.node[1];
    } else if (seg.node[1] == cur) {
      next = seg.node[0];
    } else {
      throw EmbeddingError("broken chain on edge " + std::to_string(e));
    }
    nodes.push_back(next);
    cur = next;
  }
  if (cur != rec.v) throw EmbeddingError("chain of edge " + std::to_string(e) + " misses its head");
  return nodes;
}

std::vector<NodeId> DrawnInstance::crossings_on_edge(EdgeId e) const {
  auto nodes = chain_nodes(e);
  return std::vector<NodeId>(nodes.begin() + 1, nodes.end() - 1);
}

FaceSet DrawnInstance::compute_faces() const {
  FaceSet fs;
  std::vector<Dart> all;
  for (const auto& [n, rot] : rotation_) {
    for (int i = 0; i < static_cast<int>(rot.size()); ++i) all.push_back(Dart{n, i});
  }
  std::map<Dart, bool> seen;
  for (const Dart& d : all) seen[d] = false;
  for (const Dart& start : all) {
    if (seen[start]) continue;
    Face f;
    Dart cur = start;
    do {
      if (f.darts.size() > all.size()) {
        throw EmbeddingError("face traversal does not close");
      }
      seen[cur] = true;
      f.darts.push_back(cur);
      cur = rot_next(twin(cur));
    } while (!(cur == start));
    int idx = static_cast<int>(fs.faces.size());
    for (const Dart& d : f.darts) fs.face_of[d] = idx;
    fs.faces.push_back(std::move(f));
  }
  return fs;
}

bool DrawnInstance::is_one_planar() const {
  for (const auto& [e, chain] : edge_segments_) {
    if (chain.size() > 2) return false;
  }
  return true;
}

std::array<VertexId, 4> DrawnInstance::crossing_corners(NodeId x) const {
  auto it = crossings_.find(x);
  if (it == crossings_.end()) throw EmbeddingError("node is not a crossing");
  const CrossingInfo& info = it->second;
  const auto& chain = edge_chain(info.e1);
  if (chain.size() != 2 || edge_chain(info.e2).size() != 2) {
    throw EmbeddingError("crossing not preprocessed: an involved edge has several crossings");
  }
  SegmentId tail_seg = chain[0];
  const Segment& ts = segment(tail_seg);
  int end_at_x = ts.node[0] == x ? 0 : 1;
  Dart d0{x, slot_of(x, tail_seg, end_at_x)};
  std::array<VertexId, 4> corners{};
  Dart cur = d0;
  for (int i = 0; i < 4; ++i) {
    corners[i] = dart_target(cur);
    cur = rot_next(cur);
  }
  return corners;
}

std::pair<DrawnInstance, std::optional<std::string>> DrawnInstance::from_raw_lenient(
    const RawInstance& raw) {
  DrawnInstance d;
  std::optional<std::string> issue;
  auto note = [&](const std::string& msg) {
    if (!issue) issue = msg;
  };

  for (const auto& [id, kind] : raw.nodes) {
    if (d.kind_.count(id)) {
      note("duplicate node id " + std::to_string(id));
      continue;
    }
    d.kind_[id] = kind;
    d.rotation_[id] = {};
    if (kind == NodeKind::vertex) d.graph_.add_vertex_with_id(id);
    d.next_node_ = std::max(d.next_node_, id + 1);
  }

  for (const auto& e : raw.edges) {
    try {
      d.graph_.add_edge_with_id(e.id, e.u, e.v, e.weight);
    } catch (const InvalidGraphOp& err) {
      note(err.what());
      continue;
    }
    if (e.segments.empty()) {
      note("edge " + std::to_string(e.id) + " has no segments");
      continue;
    }
    d.edge_segments_[e.id] = e.segments;
  }

  // Segment endpoints come from rotation occurrences: first hit is end 0.
  std::map<SegmentId, EdgeId> owner;
  for (const auto& [e, chain] : d.edge_segments_) {
    for (SegmentId s : chain) {
      if (owner.count(s)) note(fmt("segment listed in two edges:", s));
      owner[s] = e;
    }
  }
  std::map<SegmentId, int> occurrences;
  for (const auto& [n, segs] : raw.rotations) {
    if (!d.kind_.count(n)) {
      note("rotation for unknown node " + std::to_string(n));
      continue;
    }
    for (SegmentId s : segs) {
      auto ow = owner.find(s);
      if (ow == owner.end()) {
        note(fmt("rotation references a segment on no edge:", s));
        continue;
      }
      int& c = occurrences[s];
      if (c == 0) {
        d.segments_.emplace(s, Segment{s, {n, -1}, ow->second});
      } else if (c == 1) {
        d.segments_.at(s).node[1] = n;
      } else {
        note(fmt("segment appears more than twice in rotations:", s));
        continue;
      }
      d.rotation_[n].push_back(DartRef{s, c == 0 ? 0 : 1});
      ++c;
      d.next_segment_ = std::max(d.next_segment_, s + 1);
    }
  }

  // Crossing records: the two edges whose chains pass through each node.
  for (const auto& [n, kind] : d.kind_) {
    if (kind != NodeKind::crossing) continue;
    std::set<EdgeId> through;
    for (const auto& [e, chain] : d.edge_segments_) {
      (void)chain;
      auto nodes = [&]() -> std::vector<NodeId> {
        try {
          return d.chain_nodes(e);
        } catch (const EmbeddingError&) {
          return {};
        }
      }();
      for (std::size_t i = 1; i + 1 < nodes.size(); ++i) {
        if (nodes[i] == n) through.insert(e);
      }
    }
    if (through.size() != 2) {
      note("crossing node " + std::to_string(n) + " is not interior to exactly two edges");
      continue;
    }
    auto itr = through.begin();
    EdgeId e1 = *itr++;
    EdgeId e2 = *itr;
    d.crossings_[n] = CrossingInfo{n, e1, e2};
  }

  if (!issue) issue = d.validate();
  return {std::move(d), issue};
}

DrawnInstance DrawnInstance::from_raw(const RawInstance& raw) {
  auto [d, issue] = from_raw_lenient(raw);
  if (issue) throw EmbeddingError(*issue);
  return d;
}

std::optional<std::string> DrawnInstance::validate() const {
  // Node bookkeeping.
  for (VertexId v : graph_.vertices()) {
    auto it = kind_.find(v);
    if (it == kind_.end() || it->second != NodeKind::vertex) {
      return "graph vertex " + std::to_string(v) + " missing from the skeleton";
    }
  }
  for (const auto& [n, kind] : kind_) {
    if (!rotation_.count(n)) return "node " + std::to_string(n) + " has no rotation";
    if (kind == NodeKind::vertex && !graph_.has_vertex(n)) {
      return "skeleton vertex " + std::to_string(n) + " missing from the graph";
    }
    if (kind == NodeKind::crossing && !crossings_.count(n)) {
      return "crossing node " + std::to_string(n) + " has no crossing record";
    }
  }
  if (rotation_.size() != kind_.size()) return "rotation entries do not match node set";

  // Segment occurrence discipline.
  std::map<SegmentId, std::vector<Dart>> where;
  for (const auto& [n, rot] : rotation_) {
    for (int i = 0; i < static_cast<int>(rot.size()); ++i) {
      where[rot[i].seg].push_back(Dart{n, i});
    }
  }
  for (const auto& [s, seg] : segments_) {
    auto it = where.find(s);
    if (it == where.end() || it->second.size() != 2) {
      return "segment " + std::to_string(s) + " does not appear exactly twice in rotations";
    }
    for (int end = 0; end < 2; ++end) {
      if (seg.node[end] < 0) return "segment " + std::to_string(s) + " has a dangling end";
      bool found = false;
      for (const Dart& dd : it->second) {
        const DartRef& r = rotation_.at(dd.node)[dd.slot];
        if (r.end == end) {
          if (dd.node != seg.node[end]) {
            return "segment " + std::to_string(s) + " end placed at the wrong node";
          }
          found = true;
        }
      }
      if (!found) return "segment " + std::to_string(s) + " misses end " + std::to_string(end);
    }
  }
  for (const auto& [s, darts] : where) {
    if (!segments_.count(s)) return "rotation references unknown segment " + std::to_string(s);
  }

  // Edge chains.
  std::map<SegmentId, EdgeId> owner;
  for (const auto& [e, chain] : edge_segments_) {
    if (!graph_.has_edge(e)) return "chain for unknown edge " + std::to_string(e);
    if (chain.empty()) return "edge " + std::to_string(e) + " has an empty chain";
    for (SegmentId s : chain) {
      if (!segments_.count(s)) return "chain of edge " + std::to_string(e) + " uses unknown segment";
      if (segments_.at(s).edge != e) return "segment/edge owner mismatch on edge " + std::to_string(e);
      if (owner.count(s)) return "segment " + std::to_string(s) + " shared between chains";
      owner[s] = e;
    }
  }
  for (const auto& [s, seg] : segments_) {
    if (!owner.count(s)) return "segment " + std::to_string(s) + " belongs to no chain";
  }
  for (const auto& [e, rec] : graph_.edges()) {
    if (!edge_segments_.count(e)) return "edge " + std::to_string(e) + " has no chain";
    std::vector<NodeId> nodes;
    try {
      nodes = chain_nodes(e);
    } catch (const EmbeddingError& err) {
      return std::string(err.what());
    }
    for (std::size_t i = 1; i + 1 < nodes.size(); ++i) {
      auto it = kind_.find(nodes[i]);
      if (it == kind_.end() || it->second != NodeKind::crossing) {
        return "interior node of edge " + std::to_string(e) + " is not a crossing";
      }
    }
    if (nodes.size() > 2) {
      for (SegmentId s : edge_chain(e)) {
        if (segments_.at(s).node[0] == segments_.at(s).node[1]) {
          return "loop segment inside a crossed edge " + std::to_string(e);
        }
      }
    }
  }

  // Vertex degrees: rotation size must equal the graph degree.
  for (VertexId v : graph_.vertices()) {
    if (static_cast<int>(rotation_.at(v).size()) != graph_.degree(v)) {
      return "rotation size and graph degree differ at vertex " + std::to_string(v);
    }
  }

  // Crossing nodes.
  for (const auto& [n, kind] : kind_) {
    if (kind != NodeKind::crossing) continue;
    const auto& rot = rotation_.at(n);
    if (rot.size() != 4) return "crossing node " + std::to_string(n) + " has degree != 4";
    auto edge_at = [&](int i) { return segments_.at(rot[i].seg).edge; };
    if (edge_at(0) != edge_at(2) || edge_at(1) != edge_at(3) || edge_at(0) == edge_at(1)) {
      return "crossing node " + std::to_string(n) +
             ": same-edge segments are not opposite in the rotation";
    }
    auto rec = crossings_.find(n);
    if (rec == crossings_.end()) return "missing crossing record at " + std::to_string(n);
    EdgeId lo = std::min(edge_at(0), edge_at(1));
    EdgeId hi = std::max(edge_at(0), edge_at(1));
    if (rec->second.e1 != lo || rec->second.e2 != hi) {
      return "crossing record at node " + std::to_string(n) + " lists the wrong edges";
    }
  }
  for (const auto& [n, info] : crossings_) {
    auto it = kind_.find(n);
    if (it == kind_.end() || it->second != NodeKind::crossing) {
      return "crossing record for non-crossing node " + std::to_string(n);
    }
    if (info.e1 == info.e2) return "edge crossing itself at node " + std::to_string(n);
  }

  // Euler's formula per skeleton component.
  {
    std::map<NodeId, int> comp_index;
    int comps = 0;
    for (const auto& [n, kind] : kind_) {
      (void)kind;
      if (!comp_index.count(n)) comp_index[n] = comps++;
    }
    // union-find over nodes joined by segments
    std::vector<int> parent(comps);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& [s, seg] : segments_) {
      int a = find(comp_index.at(seg.node[0]));
      int b = find(comp_index.at(seg.node[1]));
      if (a != b) parent[a] = b;
    }
    std::map<int, long long> nodes_in, segs_in, faces_in;
    for (const auto& [n, idx] : comp_index) nodes_in[find(idx)]++;
    for (const auto& [s, seg] : segments_) segs_in[find(comp_index.at(seg.node[0]))]++;
    FaceSet fs;
    try {
      fs = compute_faces();
    } catch (const EmbeddingError& err) {
      return std::string(err.what());
    }
    for (const Face& f : fs.faces) {
      faces_in[find(comp_index.at(f.darts.front().node))]++;
    }
    for (const auto& [root, vcount] : nodes_in) {
      long long e = segs_in.count(root) ? segs_in.at(root) : 0;
      long long fcount = faces_in.count(root) ? faces_in.at(root) : 0;
      if (e == 0) {
        if (vcount != 1) return "disconnected nodes share a component";
        continue;
      }
      if (vcount - e + fcount != 2) {
        return "Euler check failed on a component (V-E+F = " +
               std::to_string(vcount - e + fcount) + ")";
      }
    }
  }

  return std::nullopt;
}

void require_valid(const DrawnInstance& d, const std::string& context) {
  if (auto problem = d.validate()) {
    throw EmbeddingError(context + ": " + *problem);
  }
}

EdgeId DrawnInstance::add_chord(const Dart& before_u, const Dart& before_v, const Rational& w) {
  NodeId nu = before_u.node, nv = before_v.node;
  if (nu == nv) throw EmbeddingError("chord endpoints coincide");
  FaceSet fs = compute_faces();
  if (fs.face_of.at(before_u) != fs.face_of.at(before_v)) {
    throw EmbeddingError("chord corners lie on different faces");
  }
  EdgeId e = graph_.add_edge(nu, nv, w);
  SegmentId s = new_segment(nu, nv, e);
  edge_segments_[e] = {s};
  insert_dart_before(nu, before_u.slot, s, 0);
  insert_dart_before(nv, before_v.slot, s, 1);
  return e;
}

VertexId DrawnInstance::add_vertex_in_face(const std::vector<Dart>& corners,
                                           const std::vector<Rational>& weights) {
  if (corners.empty() || corners.size() != weights.size()) {
    throw EmbeddingError("add_vertex_in_face: corners and weights mismatch");
  }
  FaceSet fs = compute_faces();
  int face = fs.face_of.at(corners.front());
  for (const Dart& d : corners) {
    if (fs.face_of.at(d) != face) throw EmbeddingError("corners lie on different faces");
  }
  // Capture corner identities before slots start shifting.
  std::vector<std::pair<NodeId, DartRef>> anchors;
  for (const Dart& d : corners) anchors.emplace_back(d.node, dart_ref(d));

  VertexId x = add_vertex();
  for (std::size_t i = 0; i < anchors.size(); ++i) {
    auto [n, ref] = anchors[i];
    EdgeId e = graph_.add_edge(n, x, weights[i]);
    SegmentId s = new_segment(n, x, e);
    edge_segments_[e] = {s};
    insert_dart_before(n, slot_of(n, ref.seg, ref.end), s, 0);
    append_dart(x, s, 1);
  }
  return x;
}

InsertCrossingResult DrawnInstance::insert_edge_crossing(const Dart& before_u,
                                                         const Dart& seg_dart,
                                                         const Dart& before_v, const Rational& w) {
  NodeId u = before_u.node, v = before_v.node;
  if (u == v) throw EmbeddingError("crossing edge endpoints coincide");
  if (kind(u) != NodeKind::vertex || kind(v) != NodeKind::vertex) {
    throw EmbeddingError("crossing edge endpoints must be vertices");
  }
  FaceSet fs = compute_faces();
  if (fs.face_of.at(before_u) != fs.face_of.at(seg_dart)) {
    throw EmbeddingError("tail corner not on the crossed segment's face");
  }
  if (fs.face_of.at(before_v) != fs.face_of.at(twin(seg_dart))) {
    throw EmbeddingError("head corner not on the crossed segment's other face");
  }

  DartRef sref = dart_ref(seg_dart);
  const SegmentId s = sref.seg;
  const int es = sref.end;  // seg_dart runs node[es] -> node[1-es]
  const EdgeId crossed = segment(s).edge;

  std::pair<NodeId, DartRef> anchor_u{u, dart_ref(before_u)};
  std::pair<NodeId, DartRef> anchor_v{v, dart_ref(before_v)};

  EdgeId e = graph_.add_edge(u, v, w);
  NodeId x = new_crossing_node(crossed, e);

  // Chain position of s inside the crossed edge, before the split.
  const auto chain_before = edge_chain(crossed);
  auto pos = std::find(chain_before.begin(), chain_before.end(), s) - chain_before.begin();
  auto nodes_before = chain_nodes(crossed);
  NodeId enter_node = nodes_before[pos];
  bool enters_at_end0 = segment(s).node[0] == enter_node;

  SegmentId s2 = split_segment(s, x);  // s: [node0, x], s2: [x, node1]
  // split_segment may have renamed an anchor dart at the far node.
  auto fix_anchor = [&](std::pair<NodeId, DartRef>& a) {
    if (a.second.seg == s && a.second.end == 1) a.second = DartRef{s2, 1};
  };
  fix_anchor(anchor_u);
  fix_anchor(anchor_v);

  // New edge segments u -> x -> v.
  SegmentId n1 = new_segment(u, x, e);
  SegmentId n2 = new_segment(x, v, e);
  edge_segments_[e] = {n1, n2};

  // Rotation at x, counterclockwise: toward Q (the dart's head side),
  // toward u (left of the dart), toward P, toward v.
  DartRef toP{s, 1}, toQ{s2, 0};
  if (es != 0) std::swap(toP, toQ);
  rotation_.at(x) = {toQ, DartRef{n1, 1}, toP, DartRef{n2, 0}};

  // Crossed edge's chain: replace s by its two halves in chain order.
  {
    auto& chain = edge_segments_.at(crossed);
    std::vector<SegmentId> repl =
        enters_at_end0 ? std::vector<SegmentId>{s, s2} : std::vector<SegmentId>{s2, s};
    chain.erase(chain.begin() + pos);
    chain.insert(chain.begin() + pos, repl.begin(), repl.end());
  }

  insert_dart_before(u, slot_of(u, anchor_u.second.seg, anchor_u.second.end), n1, 0);
  insert_dart_before(v, slot_of(v, anchor_v.second.seg, anchor_v.second.end), n2, 1);
  return InsertCrossingResult{e, x};
}

SubdivideResult DrawnInstance::subdivide_edge(EdgeId e, const SubdivideSplit& split) {
  const Edge rec = graph_.edge(e);
  const auto chain = edge_chain(e);
  const int t = static_cast<int>(chain.size()) - 1;
  if (split.before < 0 || split.middle < 0 || split.after < 0 ||
      split.before + split.middle + split.after != t) {
    throw EmbeddingError("subdivision split does not partition the edge's crossings in order");
  }
  auto nodes = chain_nodes(e);

  const int i = split.before;           // segment carrying u'
  const int j = split.before + split.middle;  // segment carrying v'

  // Entering end of every chain segment (node[enter] is hit first).
  std::vector<int> enter(chain.size());
  for (std::size_t p = 0; p < chain.size(); ++p) {
    const Segment& s = segment(chain[p]);
    enter[p] = s.node[0] == nodes[p] ? 0 : 1;
    if (s.node[0] == s.node[1]) enter[p] = 0;  // whole-loop chain
  }

  VertexId uprime = add_vertex();
  VertexId vprime = add_vertex();

  // Split segment i at u'. split_segment keeps the end-0 half under the old
  // id, so pick the piece order by the entering end.
  SegmentId si = chain[i];
  SegmentId si2 = split_segment(si, uprime);
  SegmentId p1 = enter[i] == 0 ? si : si2;   // tail-side piece
  SegmentId p2 = enter[i] == 0 ? si2 : si;   // head-side piece

  SegmentId q1, q2;
  if (j == i) {
    // v' lands on the head-side piece of the same segment. After the first
    // split that piece runs u' -> old head; it is entered at the u' end.
    int enter_p2 = segment(p2).node[0] == uprime ? 0 : 1;
    SegmentId r2 = split_segment(p2, vprime);
    q1 = enter_p2 == 0 ? p2 : r2;
    q2 = enter_p2 == 0 ? r2 : p2;
    p2 = q1;
  } else {
    SegmentId sj = chain[j];
    SegmentId sj2 = split_segment(sj, vprime);
    q1 = enter[j] == 0 ? sj : sj2;
    q2 = enter[j] == 0 ? sj2 : sj;
  }

  // Assemble the three replacement chains.
  std::vector<SegmentId> c1(chain.begin(), chain.begin() + i);
  c1.push_back(p1);
  std::vector<SegmentId> c2;
  if (j == i) {
    c2 = {p2};
  } else {
    c2.push_back(p2);
    for (int p = i + 1; p < j; ++p) c2.push_back(chain[p]);
    c2.push_back(q1);
  }
  std::vector<SegmentId> c3{q2};
  for (int p = j + 1; p <= t; ++p) c3.push_back(chain[p]);

  graph_.remove_edge(e);
  edge_segments_.erase(e);
  EdgeId e1 = graph_.add_edge(rec.u, uprime, rec.weight);
  EdgeId e2 = graph_.add_edge(uprime, vprime, rec.weight);
  EdgeId e3 = graph_.add_edge(vprime, rec.v, rec.weight);
  edge_segments_[e1] = c1;
  edge_segments_[e2] = c2;
  edge_segments_[e3] = c3;
  for (SegmentId s : c1) segments_.at(s).edge = e1;
  for (SegmentId s : c2) segments_.at(s).edge = e2;
  for (SegmentId s : c3) segments_.at(s).edge = e3;

  // Re-tag crossing records that referenced e.
  for (int idx = 0; idx < t; ++idx) {
    NodeId xnode = nodes[idx + 1];
    EdgeId owner = idx < i ? e1 : (idx < j ? e2 : e3);
    CrossingInfo& info = crossings_.at(xnode);
    EdgeId other = info.e1 == e ? info.e2 : info.e1;
    info.e1 = std::min(owner, other);
    info.e2 = std::max(owner, other);
  }

  return SubdivideResult{e, {e1, e2, e3}, {uprime, vprime}, split, rec.weight};
}

void DrawnInstance::remove_edge_uncrossing(EdgeId e) {
  const Edge rec = graph_.edge(e);
  auto nodes = chain_nodes(e);
  auto chain = edge_chain(e);

  // Dissolve each crossing on e: the other edge's two segments merge.
  for (std::size_t p = 1; p + 1 < nodes.size(); ++p) {
    NodeId x = nodes[p];
    CrossingInfo info = crossings_.at(x);
    EdgeId o = info.e1 == e ? info.e2 : info.e1;
    auto& ochain = edge_segments_.at(o);
    auto onodes = chain_nodes(o);
    std::size_t xpos = 0;
    for (std::size_t q = 1; q + 1 < onodes.size(); ++q) {
      if (onodes[q] == x) xpos = q;
    }
    SegmentId sb = ochain[xpos - 1];
    SegmentId sa = ochain[xpos];
    // sb keeps its id and absorbs sa.
    int sb_end_at_x = segment(sb).node[0] == x ? 0 : 1;
    int sa_end_far = segment(sa).node[0] == x ? 1 : 0;
    NodeId far = segment(sa).node[sa_end_far];
    int far_slot = slot_of(far, sa, sa_end_far);
    rotation_.at(far)[far_slot] = DartRef{sb, sb_end_at_x};
    retarget_segment_end(sb, sb_end_at_x, far);
    segments_.erase(sa);
    ochain.erase(ochain.begin() + xpos);

    crossings_.erase(x);
    rotation_.erase(x);
    kind_.erase(x);
  }

  // Drop e's own segments; darts at deleted crossing nodes are gone already.
  for (SegmentId s : chain) {
    const Segment seg = segments_.at(s);
    for (int end = 0; end < 2; ++end) {
      NodeId n = seg.node[end];
      if (kind_.count(n)) remove_dart(n, s, end);
    }
    segments_.erase(s);
  }
  edge_segments_.erase(e);
  graph_.remove_edge(e);
  (void)rec;
}

void DrawnInstance::remove_isolated_vertex(VertexId v) {
  if (!rotation_.at(v).empty()) throw EmbeddingError("vertex is not isolated");
  graph_.remove_vertex(v);
  rotation_.erase(v);
  kind_.erase(v);
}

CornerContext DrawnInstance::corner_context(NodeId x) const {
  const CrossingInfo& info = crossings_.at(x);
  CornerContext ctx;
  ctx.corners = crossing_corners(x);
  for (int i = 0; i < 4; ++i) {
    VertexId c = ctx.corners[i];
    if (kind(c) != NodeKind::vertex || graph_.degree(c) != 2) {
      throw EmbeddingError("crossing not preprocessed: corner degree != 2");
    }
    for (int p = 0; p < 4; ++p) {
      if (p != i && ctx.corners[p] == c) throw EmbeddingError("crossing corners are not distinct");
    }
    EdgeId out = -1;
    for (EdgeId cand : graph_.incident_edges(c)) {
      if (cand != info.e1 && cand != info.e2) out = cand;
    }
    if (out < 0) throw EmbeddingError("corner has no outward edge");
    VertexId far = graph_.edge(out).other(c);
    for (VertexId cc : ctx.corners) {
      if (far == cc) throw EmbeddingError("edge between two crossing corners");
    }
    ctx.out_edge[i] = out;
    const auto& ochain = edge_chain(out);
    SegmentId os = graph_.edge(out).u == c ? ochain.front() : ochain.back();
    ctx.out_seg[i] = os;
    ctx.out_end[i] = segment(os).node[0] == c ? 0 : 1;
  }
  return ctx;
}

ContractResult DrawnInstance::contract_crossing(NodeId x) {
  const CrossingInfo info = crossings_.at(x);
  CornerContext ctx = corner_context(x);
  const auto corners = ctx.corners;
  const VertexId a = corners[0], b = corners[1], c = corners[2], dcorner = corners[3];
  (void)c;

  VertexId merged = add_vertex();

  // Graph side: endpoints of the diagonals and outward edges move to merged.
  graph_.move_endpoint(info.e1, a, merged);
  graph_.move_endpoint(info.e2, b, merged);
  graph_.move_endpoint(ctx.out_edge[0], a, merged);
  graph_.move_endpoint(ctx.out_edge[1], b, merged);

  // Diagonal e1 = a..c keeps only its far half, now merged..c (single
  // segment); likewise e2 keeps merged..d.
  auto shrink_diagonal = [&](EdgeId diag, VertexId lost_corner) -> SegmentId {
    auto& chain = edge_segments_.at(diag);
    SegmentId near_seg, far_seg;
    if (segment(chain.front()).node[0] == lost_corner ||
        segment(chain.front()).node[1] == lost_corner) {
      near_seg = chain.front();
      far_seg = chain.back();
    } else {
      near_seg = chain.back();
      far_seg = chain.front();
    }
    segments_.erase(near_seg);
    int far_end_at_x = segment(far_seg).node[0] == x ? 0 : 1;
    retarget_segment_end(far_seg, far_end_at_x, merged);
    chain = {far_seg};
    return far_seg;
  };
  SegmentId seg_to_c = shrink_diagonal(info.e1, a);
  SegmentId seg_to_d = shrink_diagonal(info.e2, b);

  // Outward segments of a and b re-attach to merged.
  retarget_segment_end(ctx.out_seg[0], ctx.out_end[0], merged);
  retarget_segment_end(ctx.out_seg[1], ctx.out_end[1], merged);

  // Rotation at merged: (out_a, out_b, toward c, toward d).
  int to_c_end = segments_.at(seg_to_c).node[0] == merged ? 0 : 1;
  int to_d_end = segments_.at(seg_to_d).node[0] == merged ? 0 : 1;
  rotation_.at(merged) = {DartRef{ctx.out_seg[0], ctx.out_end[0]},
                          DartRef{ctx.out_seg[1], ctx.out_end[1]},
                          DartRef{seg_to_c, to_c_end}, DartRef{seg_to_d, to_d_end}};

  // Drop a, b and the crossing node.
  rotation_.erase(a);
  rotation_.erase(b);
  kind_.erase(a);
  kind_.erase(b);
  graph_.remove_vertex(a);
  graph_.remove_vertex(b);
  rotation_.erase(x);
  kind_.erase(x);
  crossings_.erase(x);

  return ContractResult{x, {a, b, c, dcorner}, info.e1, info.e2, merged};
}

PseudoFaceFrame DrawnInstance::add_pseudo_face_frame(NodeId x) {
  const CrossingInfo info = crossings_.at(x);
  // Capture corner structure before any cycle edge changes the degrees.
  CornerContext ctx = corner_context(x);
  const auto corners = ctx.corners;

  std::array<DartRef, 4> cross_ref{};
  for (int i = 0; i < 4; ++i) {
    EdgeId de = (i % 2 == 0) ? info.e1 : info.e2;
    const auto& dchain = edge_chain(de);
    SegmentId ds = graph_.edge(de).u == corners[i] ? dchain.front() : dchain.back();
    cross_ref[i] = DartRef{ds, segment(ds).node[0] == corners[i] ? 0 : 1};
  }
  std::array<DartRef, 4> out_ref{};
  for (int i = 0; i < 4; ++i) out_ref[i] = DartRef{ctx.out_seg[i], ctx.out_end[i]};

  // Cycle edge i runs from corner i to corner i+1: inserted before the
  // crossing dart at corner i and before the outward dart at corner i+1.
  std::array<EdgeId, 4> cycle{};
  for (int i = 0; i < 4; ++i) {
    int nxt = (i + 1) % 4;
    Dart at_i = find_dart(cross_ref[i].seg, cross_ref[i].end);
    Dart at_next = find_dart(out_ref[nxt].seg, out_ref[nxt].end);
    cycle[i] = add_chord(at_i, at_next, Rational(0));
  }

  return PseudoFaceFrame{x, corners, cycle, info.e1, info.e2, cycle[0]};
}

bool operator==(const DrawnInstance& a, const DrawnInstance& b) {
  if (!(a.graph_ == b.graph_)) return false;
  if (a.kind_ != b.kind_) return false;
  if (a.edge_segments_ != b.edge_segments_) return false;
  if (a.segments_.size() != b.segments_.size()) return false;
  for (const auto& [id, seg] : a.segments_) {
    auto it = b.segments_.find(id);
    if (it == b.segments_.end()) return false;
    if (seg.node != it->second.node || seg.edge != it->second.edge) return false;
  }
  if (a.rotation_.size() != b.rotation_.size()) return false;
  for (const auto& [n, rot] : a.rotation_) {
    auto it = b.rotation_.find(n);
    if (it == b.rotation_.end()) return false;
    if (rot.size() != it->second.size()) return false;
    for (std::size_t i = 0; i < rot.size(); ++i) {
      if (!(rot[i] == it->second[i])) return false;
    }
  }
  if (a.crossings_.size() != b.crossings_.size()) return false;
  for (const auto& [n, info] : a.crossings_) {
    auto it = b.crossings_.find(n);
    if (it == b.crossings_.end()) return false;
    if (info.e1 != it->second.e1 || info.e2 != it->second.e2) return false;
  }
  return true;
}

}  // namespace crosscut
