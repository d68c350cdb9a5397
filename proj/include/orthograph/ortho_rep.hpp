#pragma once

#include <string>
#include <vector>

#include "orthograph/flow_net.hpp"
#include "orthograph/plane_graph.hpp"

namespace orthograph {

// The dimensionless shape of an orthogonal drawing: one angle per corner in
// quarter turns (1..4, where 4 only occurs at degree-1 vertices), and per
// edge a bend string over {L, R} read along dart(e, 0). The reverse dart sees
// the reversed complement.
struct OrthoRep {
  std::vector<int> corner_qt;           // indexed by corner id (= in-dart id)
  std::vector<std::string> edge_bends;  // indexed by edge id

  std::string bends_of_dart(int d) const {
    if (dart_side(d) == 0) return edge_bends[dart_edge(d)];
    std::string s = edge_bends[dart_edge(d)];
    std::string r;
    for (auto it = s.rbegin(); it != s.rend(); ++it) r.push_back(*it == 'L' ? 'R' : 'L');
    return r;
  }
  // Signed turn sum of a dart's bends (+1 per L, -1 per R).
  int bend_turn(int d) const {
    int t = 0;
    for (char c : edge_bends[dart_edge(d)]) t += c == 'L' ? 1 : -1;
    return dart_side(d) == 0 ? t : -t;
  }
  int total_bends() const {
    int b = 0;
    for (const auto& s : edge_bends) b += static_cast<int>(s.size());
    return b;
  }
};

struct RepReport {
  enum class Kind { Ok, P1, P2, Malformed };
  Kind kind = Kind::Ok;
  int vertex = -1;  // P1: offending vertex
  int face = -1;    // P2: offending face
  int value = 0;    // P1: quarter-turn sum; P2: computed imbalance
  std::string message;
  bool ok() const { return kind == Kind::Ok; }
};

// Lemma-style validity conditions: P1 (angles around each vertex sum to 2pi)
// and P2 (face imbalance of +4 inner / -4 outer, bend corners included).
RepReport validate_rep(const PlaneGraph& g, const OrthoRep& r);

// Interpret a canonical min-cost flow on a modified or classic network.
OrthoRep decode_flow(const PlaneGraph& g, const FlowNetwork& net, const FlowAssignment& fa);

// Lemma-2 reverse direction: express a valid representation as a flow on the
// modified network (bridge bends map to dual self-loops and carry no shape).
FlowAssignment encode_rep(const PlaneGraph& g, const FlowNetwork& net, const OrthoRep& r);

struct SegmentStats {
  int v4 = 0, v3 = 0, v1 = 0;
  int vertex_bends = 0;  // degree-2 vertices with a (pi/2, 3pi/2) angle pair
  int edge_bends = 0;
  int segments = 0;      // (v1 + v3 + 2 vertex_bends + 2 edge_bends) / 2
  int k() const { return 2 * v4 + v3; }
};

SegmentStats segment_stats(const PlaneGraph& g, const OrthoRep& r);

// Direction of travel of every dart leaving its tail (dart 0 anchored East),
// propagated through corners and reversals; throws InvalidRep when the
// representation is inconsistent.
std::vector<int> dart_directions(const PlaneGraph& g, const OrthoRep& r);

// Structured text form (golden-file tests).
std::string rep_to_text(const PlaneGraph& g, const OrthoRep& r);

}  // namespace orthograph
