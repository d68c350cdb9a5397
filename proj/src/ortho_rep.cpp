#include "orthograph/ortho_rep.hpp"

#include <algorithm>
#include <sstream>

#include "orthograph/geometry.hpp"

namespace orthograph {

RepReport validate_rep(const PlaneGraph& g, const OrthoRep& r) {
  RepReport rep;
  if (static_cast<int>(r.corner_qt.size()) != g.num_corners() ||
      static_cast<int>(r.edge_bends.size()) != g.num_edges()) {
    rep.kind = RepReport::Kind::Malformed;
    rep.message = "representation size does not match the graph";
    return rep;
  }
  for (int c = 0; c < g.num_corners(); ++c) {
    if (r.corner_qt[c] < 1 || r.corner_qt[c] > 4) {
      rep.kind = RepReport::Kind::Malformed;
      rep.message = "corner " + std::to_string(c) + " has quarter turns outside 1..4";
      return rep;
    }
  }
  for (const auto& s : r.edge_bends)
    for (char c : s)
      if (c != 'L' && c != 'R') {
        rep.kind = RepReport::Kind::Malformed;
        rep.message = "bend strings may only contain L and R";
        return rep;
      }

  // P1: quarter turns around each vertex sum to 4.
  std::vector<int> sum(g.num_vertices(), 0);
  for (int c = 0; c < g.num_corners(); ++c) sum[g.dart_head(c)] += r.corner_qt[c];
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) == 0) continue;
    if (sum[v] != 4) {
      rep.kind = RepReport::Kind::P1;
      rep.vertex = v;
      rep.value = sum[v];
      rep.message = "angles around vertex " + std::to_string(v) + " sum to " +
                    std::to_string(sum[v]) + " quarter turns";
      return rep;
    }
  }

  // P2: #(pi/2) - #(3pi/2) around a face, bend corners included, is +4 for
  // inner faces and -4 for the outer face.
  for (int f = 0; f < g.num_faces(); ++f) {
    int imbalance = 0;
    for (int d : g.face(f).darts) {
      imbalance += turn_of_quarter_turns(r.corner_qt[d]);
      imbalance += r.bend_turn(d);
    }
    int want = f == g.outer_face() ? -4 : 4;
    if (g.face(f).degree() == 0) continue;  // single-vertex graph
    if (imbalance != want) {
      rep.kind = RepReport::Kind::P2;
      rep.face = f;
      rep.value = imbalance;
      rep.message = "face " + std::to_string(f) + " has imbalance " +
                    std::to_string(imbalance) + ", expected " + std::to_string(want);
      return rep;
    }
  }
  return rep;
}

OrthoRep decode_flow(const PlaneGraph& g, const FlowNetwork& net, const FlowAssignment& fa) {
  require(net.mode != NetworkMode::Manual, Errc::BadInput,
          "decode needs a network built from a plane graph");
  require(fa.flow.size() == net.arcs.size(), Errc::BadInput, "assignment/network mismatch");
  for (size_t i = 0; i < net.arcs.size(); ++i) {
    int tw = net.arcs[i].twin;
    if (tw >= 0 && fa.flow[i] > net.arcs[i].lower && fa.flow[tw] > net.arcs[tw].lower)
      fail(Errc::UncanonicalFlow, "opposite arcs " + std::to_string(i) + "/" +
                                      std::to_string(tw) + " both carry flow");
  }

  OrthoRep r;
  r.corner_qt.assign(g.num_corners(), 2);
  r.edge_bends.assign(g.num_edges(), "");

  if (net.mode == NetworkMode::Modified) {
    for (size_t i = 0; i < net.arcs.size(); ++i) {
      const auto& a = net.arcs[i];
      if (a.kind != ArcKind::Angle || fa.flow[i] == 0) continue;
      int c = a.provenance;
      bool face_to_boundary = net.nodes[a.from].kind == NodeKind::FaceNode;
      r.corner_qt[c] = face_to_boundary ? 1 : 3;
    }
  } else {
    for (size_t i = 0; i < net.arcs.size(); ++i) {
      const auto& a = net.arcs[i];
      if (a.kind != ArcKind::Angle) continue;
      r.corner_qt[a.provenance] = static_cast<int>(fa.flow[i]);
    }
  }

  for (size_t i = 0; i < net.arcs.size(); ++i) {
    const auto& a = net.arcs[i];
    if (a.kind != ArcKind::Dual || fa.flow[i] == 0) continue;
    int e = a.provenance;
    int from_face = net.nodes[a.from].ref;
    int to_face = net.nodes[a.to].ref;
    if (from_face == to_face) continue;  // bridge self-loop carries no shape
    // t units from face A to B put t bends on e that read L along the dart
    // whose left face is A.
    int d = g.dart_face(dart_id(e, 0)) == from_face ? dart_id(e, 0) : dart_id(e, 1);
    std::string s(static_cast<size_t>(fa.flow[i]), dart_side(d) == 0 ? 'L' : 'R');
    r.edge_bends[e] = s;
  }
  return r;
}

FlowAssignment encode_rep(const PlaneGraph& g, const FlowNetwork& net, const OrthoRep& r) {
  require(net.mode == NetworkMode::Modified, Errc::BadInput,
          "encode targets the modified network");
  RepReport rep = validate_rep(g, r);
  require(rep.ok(), Errc::InvalidRep, rep.message);

  FlowAssignment fa;
  fa.flow.assign(net.arcs.size(), 0);
  for (size_t i = 0; i < net.arcs.size(); ++i) {
    const auto& a = net.arcs[i];
    if (a.kind == ArcKind::Angle) {
      int qt = r.corner_qt[a.provenance];
      bool face_to_boundary = net.nodes[a.from].kind == NodeKind::FaceNode;
      if (qt == 1 && face_to_boundary) fa.flow[i] = 1;
      if (qt == 3 && !face_to_boundary) fa.flow[i] = 1;
    } else {
      int e = a.provenance;
      if (net.nodes[a.from].ref == net.nodes[a.to].ref) {
        // bridge: both sides are one face; park the bends on the first of
        // the two self-loop arcs (conservation is unaffected)
        fa.flow[i] = static_cast<int>(i) < a.twin
                         ? static_cast<long long>(r.edge_bends[e].size())
                         : 0;
        continue;
      }
      int from_face = net.nodes[a.from].ref;
      int d = g.dart_face(dart_id(e, 0)) == from_face ? dart_id(e, 0) : dart_id(e, 1);
      char mine = dart_side(d) == 0 ? 'L' : 'R';
      long long count = 0;
      for (char c : r.edge_bends[e])
        if (c == mine) ++count;
      fa.flow[i] = count;
    }
  }
  fa.total_cost_x2 = net.cost_offset_x2 + arc_cost_sum_x2(net, fa);
  return fa;
}

SegmentStats segment_stats(const PlaneGraph& g, const OrthoRep& r) {
  RepReport rep = validate_rep(g, r);
  require(rep.ok(), Errc::InvalidRep, rep.message);

  SegmentStats st;
  for (int v = 0; v < g.num_vertices(); ++v) {
    int d = g.degree(v);
    if (d == 4) ++st.v4;
    if (d == 3) ++st.v3;
    if (d == 1) ++st.v1;
    if (d == 2) {
      int c0 = -1;
      for (int dart : g.rotation(v)) {
        c0 = dart_reverse(dart);
        break;
      }
      if (r.corner_qt[c0] != 2) ++st.vertex_bends;
    }
  }
  st.edge_bends = r.total_bends();
  int twice = st.v1 + st.v3 + 2 * st.vertex_bends + 2 * st.edge_bends;
  require(twice % 2 == 0, Errc::InvalidRep, "segment endpoint count is odd");
  st.segments = twice / 2;
  return st;
}

std::vector<int> dart_directions(const PlaneGraph& g, const OrthoRep& r) {
  RepReport rep = validate_rep(g, r);
  require(rep.ok(), Errc::InvalidRep, rep.message);

  const int dn = g.num_darts();
  std::vector<int> dir(dn, -1);
  if (dn == 0) return dir;

  std::vector<int> stack;
  auto assign = [&](int d, int value) {
    value &= 3;
    if (dir[d] < 0) {
      dir[d] = value;
      stack.push_back(d);
      return;
    }
    require(dir[d] == value, Errc::InvalidRep, "inconsistent dart directions");
  };

  assign(0, kEast);
  while (!stack.empty()) {
    int d = stack.back();
    stack.pop_back();
    int arrival = (dir[d] + r.bend_turn(d)) & 3;
    assign(dart_reverse(d), arrival + 2);
    // corner with in-dart d
    int out = g.next_dart(d);
    assign(out, out_dir_of_corner(arrival, r.corner_qt[d]));
  }
  for (int d = 0; d < dn; ++d)
    require(dir[d] >= 0, Errc::InvalidRep, "disconnected dart relation");
  return dir;
}

std::string rep_to_text(const PlaneGraph& g, const OrthoRep& r) {
  std::ostringstream os;
  for (int c = 0; c < g.num_corners(); ++c)
    os << "corner " << g.dart_head(c) << " " << g.dart_face(c) << " " << r.corner_qt[c] << "\n";
  for (int e = 0; e < g.num_edges(); ++e)
    os << "bend " << e << " " << (r.edge_bends[e].empty() ? "-" : r.edge_bends[e]) << "\n";
  return os.str();
}

}  // namespace orthograph
