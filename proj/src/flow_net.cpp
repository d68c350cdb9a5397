#include "orthograph/flow_net.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <sstream>

namespace orthograph {

namespace {

constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

void check_degrees(const PlaneGraph& g) {
  for (int v = 0; v < g.num_vertices(); ++v) {
    require(g.degree(v) >= 2, Errc::DegreeOneVertex,
            "vertex " + std::to_string(v) + " has degree < 2; take the closure first");
  }
}

}  // namespace

FlowNetwork build_modified_network(const PlaneGraph& g, CostParams costs) {
  check_degrees(g);
  require(costs.angle_cost_x2 >= 0 && costs.dual_cost_x2 >= 0, Errc::BadInput,
          "costs must be non-negative");

  FlowNetwork net;
  net.mode = NetworkMode::Modified;
  for (int v = 0; v < g.num_vertices(); ++v)
    net.add_node(NodeKind::Boundary, v, -(2LL * g.degree(v) - 4));
  for (int f = 0; f < g.num_faces(); ++f)
    net.add_node(NodeKind::FaceNode, f, f == g.outer_face() ? -4 : 4);

  auto face_node = [&](int f) { return g.num_vertices() + f; };
  long long dual_cap = net.total_positive_supply();

  // Angle arcs first so equal-cost ties resolve toward angle routes.
  for (int c = 0; c < g.num_corners(); ++c) {
    Corner corner = g.corner(c);
    int b = corner.vertex;
    int fn = face_node(corner.face);
    int a1 = net.add_arc({fn, b, 1, 0, costs.angle_cost_x2, ArcKind::Angle, c, -1});
    int a2 = net.add_arc({b, fn, 1, 0, costs.angle_cost_x2, ArcKind::Angle, c, -1});
    net.arcs[a1].twin = a2;
    net.arcs[a2].twin = a1;
  }
  for (int e = 0; e < g.num_edges(); ++e) {
    int fa = g.dart_face(dart_id(e, 0));
    int fb = g.dart_face(dart_id(e, 1));
    int a1 = net.add_arc({face_node(fa), face_node(fb), dual_cap, 0, costs.dual_cost_x2,
                          ArcKind::Dual, e, -1});
    int a2 = net.add_arc({face_node(fb), face_node(fa), dual_cap, 0, costs.dual_cost_x2,
                          ArcKind::Dual, e, -1});
    net.arcs[a1].twin = a2;
    net.arcs[a2].twin = a1;
  }

  // The cost expression behind the segment identity charges every angle of a
  // degree-3 vertex, including the straight one no flow ever carries.
  long long v3 = 0;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (g.degree(v) == 3) ++v3;
  net.cost_offset_x2 = v3 * costs.angle_cost_x2;
  return net;
}

FlowNetwork build_classic_network(const PlaneGraph& g) {
  check_degrees(g);

  FlowNetwork net;
  net.mode = NetworkMode::Classic;
  for (int v = 0; v < g.num_vertices(); ++v) net.add_node(NodeKind::Boundary, v, 4);
  for (int f = 0; f < g.num_faces(); ++f) {
    long long deg = g.face(f).degree();
    long long supply = f == g.outer_face() ? -(2 * deg + 4) : -(2 * deg - 4);
    net.add_node(NodeKind::FaceNode, f, supply);
  }
  auto face_node = [&](int f) { return g.num_vertices() + f; };
  long long dual_cap = net.total_positive_supply();

  for (int c = 0; c < g.num_corners(); ++c) {
    Corner corner = g.corner(c);
    net.add_arc({corner.vertex, face_node(corner.face), 4, 1, 0, ArcKind::Angle, c, -1});
  }
  for (int e = 0; e < g.num_edges(); ++e) {
    int fa = g.dart_face(dart_id(e, 0));
    int fb = g.dart_face(dart_id(e, 1));
    int a1 = net.add_arc({face_node(fa), face_node(fb), dual_cap, 0, 2, ArcKind::Dual, e, -1});
    int a2 = net.add_arc({face_node(fb), face_node(fa), dual_cap, 0, 2, ArcKind::Dual, e, -1});
    net.arcs[a1].twin = a2;
    net.arcs[a2].twin = a1;
  }
  return net;
}

namespace {

// Residual solver: arc 2i is the forward copy of network arc i (capacity
// minus lower bound), arc 2i+1 the reverse.
struct Solver {
  int n;
  std::vector<int> head, tail;
  std::vector<long long> cap, cost;
  std::vector<std::vector<int>> adj;

  explicit Solver(int nodes) : n(nodes) {}

  int add(int u, int v, long long c, long long w) {
    int id = static_cast<int>(head.size());
    tail.push_back(u);
    head.push_back(v);
    cap.push_back(c);
    cost.push_back(w);
    tail.push_back(v);
    head.push_back(u);
    cap.push_back(0);
    cost.push_back(-w);
    return id;
  }

  void build_adjacency() {
    adj.assign(n, {});
    for (int id = 0; id < static_cast<int>(head.size()); ++id) adj[tail[id]].push_back(id);
  }
};

}  // namespace

FlowAssignment min_cost_flow(const FlowNetwork& net) {
  const int n = static_cast<int>(net.nodes.size());
  const int m = static_cast<int>(net.arcs.size());

  std::vector<long long> excess(n, 0);
  for (int v = 0; v < n; ++v) excess[v] = net.nodes[v].supply;
  for (const auto& a : net.arcs) {
    require(a.cost_x2 >= 0, Errc::BadInput, "arc costs must be non-negative");
    require(a.lower <= a.capacity, Errc::BadInput, "arc lower bound exceeds capacity");
    if (a.lower > 0) {
      excess[a.from] -= a.lower;
      excess[a.to] += a.lower;
    }
  }
  long long total_supply = 0;
  for (int v = 0; v < n; ++v)
    if (excess[v] > 0) total_supply += excess[v];
  {
    long long s = 0;
    for (const auto& nd : net.nodes) s += nd.supply;
    require(s == 0, Errc::BadInput, "total supply must be zero");
  }

  Solver sol(n + 2);
  const int src = n, dst = n + 1;
  for (int i = 0; i < m; ++i) {
    const auto& a = net.arcs[i];
    sol.add(a.from, a.to, a.capacity - a.lower, a.cost_x2);
  }
  for (int v = 0; v < n; ++v) {
    if (excess[v] > 0) sol.add(src, v, excess[v], 0);
    if (excess[v] < 0) sol.add(v, dst, -excess[v], 0);
  }
  sol.build_adjacency();

  // Successive shortest paths with potentials; Dijkstra relaxes arcs in
  // insertion order with strict improvement, so the lowest arc ids win ties.
  std::vector<long long> pot(n + 2, 0), dist(n + 2);
  std::vector<int> parent_arc(n + 2);
  std::vector<char> done(n + 2);
  long long pushed = 0;

  while (pushed < total_supply) {
    std::fill(dist.begin(), dist.end(), kInf);
    std::fill(done.begin(), done.end(), 0);
    std::fill(parent_arc.begin(), parent_arc.end(), -1);
    dist[src] = 0;
    using Item = std::pair<long long, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    pq.push({0, src});
    while (!pq.empty()) {
      auto [d, u] = pq.top();
      pq.pop();
      if (done[u]) continue;
      done[u] = 1;
      for (int id : sol.adj[u]) {
        if (sol.cap[id] <= 0) continue;
        int v = sol.head[id];
        if (v == u) continue;
        long long nd = d + sol.cost[id] + pot[u] - pot[v];
        if (nd < dist[v]) {
          dist[v] = nd;
          parent_arc[v] = id;
          pq.push({nd, v});
        }
      }
    }
    require(dist[dst] < kInf, Errc::Infeasible, "no feasible flow routes the remaining supply");
    for (int v = 0; v < n + 2; ++v) pot[v] += std::min(dist[v], dist[dst]);

    long long bottleneck = total_supply - pushed;
    for (int v = dst; v != src;) {
      int id = parent_arc[v];
      bottleneck = std::min(bottleneck, sol.cap[id]);
      v = sol.head[id ^ 1];
    }
    for (int v = dst; v != src;) {
      int id = parent_arc[v];
      sol.cap[id] -= bottleneck;
      sol.cap[id ^ 1] += bottleneck;
      v = sol.head[id ^ 1];
    }
    pushed += bottleneck;
  }

  FlowAssignment fa;
  fa.flow.assign(m, 0);
  for (int i = 0; i < m; ++i)
    fa.flow[i] = net.arcs[i].lower + sol.cap[2 * i + 1];

  // Cancel circulating flow on opposite arc pairs so the decode is unique.
  for (int i = 0; i < m; ++i) {
    int j = net.arcs[i].twin;
    if (j < 0 || j <= i) continue;
    long long c = std::min(fa.flow[i] - net.arcs[i].lower, fa.flow[j] - net.arcs[j].lower);
    if (c > 0) {
      fa.flow[i] -= c;
      fa.flow[j] -= c;
    }
  }

  fa.total_cost_x2 = net.cost_offset_x2;
  for (int i = 0; i < m; ++i) fa.total_cost_x2 += fa.flow[i] * net.arcs[i].cost_x2;
  return fa;
}

bool check_conservation(const FlowNetwork& net, const FlowAssignment& fa) {
  std::vector<long long> bal(net.nodes.size(), 0);
  for (size_t i = 0; i < net.arcs.size(); ++i) {
    const auto& a = net.arcs[i];
    if (fa.flow[i] < a.lower || fa.flow[i] > a.capacity) return false;
    bal[a.from] -= fa.flow[i];
    bal[a.to] += fa.flow[i];
  }
  for (size_t v = 0; v < net.nodes.size(); ++v)
    if (bal[v] != -net.nodes[v].supply) return false;
  return true;
}

long long arc_cost_sum_x2(const FlowNetwork& net, const FlowAssignment& fa) {
  long long s = 0;
  for (size_t i = 0; i < net.arcs.size(); ++i) s += fa.flow[i] * net.arcs[i].cost_x2;
  return s;
}

bool has_negative_residual_cycle(const FlowNetwork& net, const FlowAssignment& fa) {
  const int n = static_cast<int>(net.nodes.size());
  struct R {
    int from, to;
    long long cost;
  };
  std::vector<R> res;
  for (size_t i = 0; i < net.arcs.size(); ++i) {
    const auto& a = net.arcs[i];
    if (fa.flow[i] < a.capacity) res.push_back({a.from, a.to, a.cost_x2});
    if (fa.flow[i] > a.lower) res.push_back({a.to, a.from, -a.cost_x2});
  }
  std::vector<long long> d(n, 0);
  for (int pass = 0; pass < n; ++pass) {
    bool changed = false;
    for (const auto& r : res) {
      if (d[r.from] + r.cost < d[r.to]) {
        d[r.to] = d[r.from] + r.cost;
        changed = true;
      }
    }
    if (!changed) return false;
  }
  return true;
}

std::string dump_network(const FlowNetwork& net, const FlowAssignment* fa) {
  std::ostringstream os;
  os << "network nodes=" << net.nodes.size() << " arcs=" << net.arcs.size() << "\n";
  for (size_t v = 0; v < net.nodes.size(); ++v) {
    const auto& nd = net.nodes[v];
    os << "node " << v << " "
       << (nd.kind == NodeKind::Boundary ? "vertex" : nd.kind == NodeKind::FaceNode ? "face" : "aux")
       << " " << nd.ref << " supply " << nd.supply << "\n";
  }
  for (size_t i = 0; i < net.arcs.size(); ++i) {
    const auto& a = net.arcs[i];
    os << "arc " << i << " " << a.from << " -> " << a.to
       << " cap " << a.capacity << " lower " << a.lower << " cost_x2 " << a.cost_x2 << " "
       << (a.kind == ArcKind::Angle ? "angle" : "dual") << " ref " << a.provenance;
    if (fa) os << " flow " << fa->flow[i];
    os << "\n";
  }
  return os.str();
}

}  // namespace orthograph
