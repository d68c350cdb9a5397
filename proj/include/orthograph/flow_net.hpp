#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "orthograph/plane_graph.hpp"

namespace orthograph {

// Arc costs are stored doubled so the segment-minimizing angle cost of one
// half is exact integer arithmetic.
struct CostParams {
  long long angle_cost_x2 = 1;
  long long dual_cost_x2 = 2;
  static CostParams mso() { return {1, 2}; }
  static CostParams bend_min() { return {0, 2}; }
};

enum class ArcKind { Angle, Dual };
enum class NodeKind { Boundary, FaceNode, Aux };
enum class NetworkMode { Modified, Classic, Manual };

struct FlowArc {
  int from = -1, to = -1;
  long long capacity = 0;
  long long lower = 0;  // implicit lower bound, handled by the solver
  long long cost_x2 = 0;
  ArcKind kind = ArcKind::Dual;
  int provenance = -1;  // Angle: corner id; Dual: edge id
  int twin = -1;        // opposite arc of the same angle/dual pair
};

struct FlowNode {
  NodeKind kind = NodeKind::Aux;
  int ref = -1;  // graph vertex or face id
  long long supply = 0;  // positive = source
};

struct FlowNetwork {
  std::vector<FlowNode> nodes;
  std::vector<FlowArc> arcs;
  NetworkMode mode = NetworkMode::Manual;
  // Fixed cost charged on top of the arc flows; the modified builder uses it
  // for the angle units at degree-3 vertices that no feasible flow carries.
  long long cost_offset_x2 = 0;

  int add_node(NodeKind kind, int ref, long long supply) {
    nodes.push_back({kind, ref, supply});
    return static_cast<int>(nodes.size()) - 1;
  }
  int add_arc(FlowArc a) {
    arcs.push_back(a);
    return static_cast<int>(arcs.size()) - 1;
  }
  long long total_positive_supply() const {
    long long s = 0;
    for (const auto& nd : nodes)
      if (nd.supply > 0) s += nd.supply;
    return s;
  }
};

struct FlowAssignment {
  std::vector<long long> flow;  // per arc, includes the implicit lower bound
  long long total_cost_x2 = 0;
};

// Modified network: inner face-nodes produce 4, the outer face-node consumes
// 4, a boundary node consumes 2deg(v)-4; bidirected unit-capacity angle arcs,
// uncapacitated bidirected dual arcs.
FlowNetwork build_modified_network(const PlaneGraph& g, CostParams costs = CostParams::mso());

// Classic bend-minimization network: boundary nodes produce 4, inner faces
// consume 2deg(f)-4, the outer face consumes 2deg(f)+4; angle arcs run
// boundary->face only with a lower bound of 1, dual arcs cost one bend.
FlowNetwork build_classic_network(const PlaneGraph& g);

// Exact min-cost flow by successive shortest augmenting paths with node
// potentials; deterministic (lowest arc id wins ties). Opposite-arc flows are
// cancelled before returning. Throws Infeasible when the supplies cannot be
// routed.
FlowAssignment min_cost_flow(const FlowNetwork& net);

// Diagnostics used by tests.
bool check_conservation(const FlowNetwork& net, const FlowAssignment& fa);
long long arc_cost_sum_x2(const FlowNetwork& net, const FlowAssignment& fa);
// One Bellman-Ford pass over the residual network; true when a negative
// reduced-cost cycle remains (the assignment would not be optimal).
bool has_negative_residual_cycle(const FlowNetwork& net, const FlowAssignment& fa);

// DOT-like text dump of nodes/arcs with flows (debugging aid).
std::string dump_network(const FlowNetwork& net, const FlowAssignment* fa = nullptr);

}  // namespace orthograph
