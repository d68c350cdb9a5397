#pragma once

#include <string>
#include <vector>

#include "orthograph/geometry.hpp"
#include "orthograph/ortho_rep.hpp"
#include "orthograph/plane_graph.hpp"

namespace orthograph {

struct AlignedPair {
  int face = -1;
  int v1 = -1, v2 = -1;  // original vertex ids
  bool horizontal = true;
};

// A validated shape over a possibly augmented graph, plus the provenance
// needed to strip dummies from the final drawing.
struct ShapeInput {
  PlaneGraph g;
  OrthoRep rep;
  std::vector<int> vertex_orig;  // original vertex id or -1 for dummies
  std::vector<int> edge_orig;    // original edge id or -1 for dummy edges
  int orig_n = 0;
  int orig_m = 0;
  std::vector<std::pair<int, int>> orig_edges;  // endpoints in the original graph
  std::vector<AlignedPair> aligned;

  static ShapeInput plain(PlaneGraph g, OrthoRep rep);
};

// The all-rectangles refinement: bends normalized into dummy vertices, the
// drawing enclosed in a dummy rectangle, every reflex corner resolved by a
// projected dummy edge. Inner faces end up with exactly four pi/2 corners
// and no reflex ones.
struct RefinedRep {
  PlaneGraph g;
  OrthoRep rep;  // bend-free
  std::vector<int> vertex_orig;
  std::vector<int> edge_orig;
  int orig_n = 0;
  int orig_m = 0;
  std::vector<std::pair<int, int>> orig_edges;
  std::vector<AlignedPair> aligned;
};

RefinedRep refine_to_rectangles(const ShapeInput& in);

// Integer coordinates by independent longest-path layering of the horizontal
// and vertical channel constraint graphs; dummies are stripped and collinear
// subdivision points erased.
Drawing assign_coordinates(const RefinedRep& rr);

// refine_to_rectangles followed by assign_coordinates.
Drawing compact(const ShapeInput& in);

}  // namespace orthograph
