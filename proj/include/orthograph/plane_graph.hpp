#pragma once

#include <utility>
#include <vector>

#include "orthograph/error.hpp"

namespace orthograph {

// A dart is a directed edge: dart(e, 0) runs u->v for edge e = (u, v),
// dart(e, 1) runs v->u. Dart id = 2*e + side.
inline int dart_id(int edge, int side) { return 2 * edge + side; }
inline int dart_edge(int d) { return d >> 1; }
inline int dart_side(int d) { return d & 1; }
inline int dart_reverse(int d) { return d ^ 1; }

struct Corner {
  int vertex;    // the vertex the corner sits at
  int in_dart;   // dart arriving at the vertex (also the corner's id)
  int out_dart;  // next dart of the face walk, leaving the vertex
  int face;
  int pos;  // position of in_dart in the face walk
};

struct Face {
  int id = -1;
  std::vector<int> darts;  // boundary walk; face lies left of every dart
  bool is_outer = false;
  int degree() const { return static_cast<int>(darts.size()); }
};

// An embedded planar graph with maximum degree 4: rotation system (clockwise
// edge order per vertex), traced faces and a designated outer face.
// Immutable after construction.
class PlaneGraph {
 public:
  // `rotation[v]` lists incident edge ids in clockwise order. If
  // `outer_face_hint` is negative the face of maximum degree is chosen and
  // `outer_defaulted()` reports it.
  static PlaneGraph build(int num_vertices, std::vector<std::pair<int, int>> edges,
                          std::vector<std::vector<int>> rotation, int outer_face_hint = -1,
                          bool allow_multi_edges = false);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_faces() const { return static_cast<int>(faces_.size()); }
  int num_darts() const { return 2 * num_edges(); }
  int num_corners() const { return num_darts(); }

  const std::pair<int, int>& edge(int e) const { return edges_[e]; }
  int degree(int v) const { return static_cast<int>(rotation_darts_[v].size()); }
  int dart_tail(int d) const { return dart_side(d) == 0 ? edges_[dart_edge(d)].first : edges_[dart_edge(d)].second; }
  int dart_head(int d) const { return dart_tail(dart_reverse(d)); }

  // Clockwise rotation at v, as darts leaving v.
  const std::vector<int>& rotation(int v) const { return rotation_darts_[v]; }
  // Face-walk successor of a dart.
  int next_dart(int d) const { return next_dart_[d]; }
  int dart_face(int d) const { return dart_face_[d]; }
  int dart_pos(int d) const { return dart_pos_[d]; }

  const Face& face(int f) const { return faces_[f]; }
  const std::vector<Face>& faces() const { return faces_; }
  int outer_face() const { return outer_face_; }
  bool outer_defaulted() const { return outer_defaulted_; }

  // The corner whose incoming dart is d (corner id == in-dart id).
  Corner corner(int in_dart) const {
    return Corner{dart_head(in_dart), in_dart, next_dart_[in_dart], dart_face_[in_dart],
                  dart_pos_[in_dart]};
  }

  bool is_connected() const { return connected_; }

  // Original (user-facing) labels; identity unless set by the parser.
  std::vector<int> vertex_labels;
  std::vector<int> edge_labels;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> rotation_darts_;
  std::vector<int> next_dart_;
  std::vector<int> dart_face_;
  std::vector<int> dart_pos_;
  std::vector<Face> faces_;
  int outer_face_ = -1;
  bool outer_defaulted_ = false;
  bool connected_ = true;
};

// Rooted tree part removed by the closure peeling; `vertices` are ids of the
// original graph, `root` is the connection vertex (kept in the closure).
struct TreePart {
  int root;
  std::vector<int> vertices;               // removed vertices, root excluded
  std::vector<std::pair<int, int>> edges;  // original edges, includes root attachment
};

struct ClosureDecomposition {
  PlaneGraph closure;
  std::vector<int> closure_vertices;    // original id per closure vertex index
  std::vector<int> closure_edges;       // original edge id per closure edge index
  std::vector<int> connection_vertices; // original ids
  std::vector<TreePart> tree_parts;
};

// Repeatedly delete degree-1 vertices (the 2-core, or a single vertex for
// trees) and record the removed tree parts with their connection vertices.
ClosureDecomposition closure(const PlaneGraph& g);

// Convenience: rotations derived from integer coordinates (clockwise order);
// used by fixtures and the spine drawer.
PlaneGraph plane_graph_from_points(const std::vector<std::pair<long long, long long>>& points,
                                   std::vector<std::pair<int, int>> edges,
                                   int outer_face_hint = -1);

}  // namespace orthograph
