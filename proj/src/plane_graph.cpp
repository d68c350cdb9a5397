#include "orthograph/plane_graph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "orthograph/geometry.hpp"

namespace orthograph {

PlaneGraph PlaneGraph::build(int num_vertices, std::vector<std::pair<int, int>> edges,
                             std::vector<std::vector<int>> rotation, int outer_face_hint,
                             bool allow_multi_edges) {
  require(num_vertices >= 1, Errc::BadInput, "graph needs at least one vertex");
  require(static_cast<int>(rotation.size()) == num_vertices, Errc::BadInput,
          "rotation list size must match vertex count");
  const int m = static_cast<int>(edges.size());
  for (int e = 0; e < m; ++e) {
    auto [u, v] = edges[e];
    require(u >= 0 && u < num_vertices && v >= 0 && v < num_vertices, Errc::BadInput,
            "edge endpoint out of range");
    require(u != v, Errc::BadInput, "self-loops are not supported");
  }
  if (!allow_multi_edges) {
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
      auto key = std::minmax(u, v);
      require(seen.insert({key.first, key.second}).second, Errc::BadInput,
              "parallel edges are not allowed in user input");
    }
  }

  PlaneGraph g;
  g.n_ = num_vertices;
  g.edges_ = std::move(edges);
  g.vertex_labels.resize(num_vertices);
  std::iota(g.vertex_labels.begin(), g.vertex_labels.end(), 0);
  g.edge_labels.resize(m);
  std::iota(g.edge_labels.begin(), g.edge_labels.end(), 0);

  // Convert edge-id rotations to dart rotations and validate coverage.
  g.rotation_darts_.assign(num_vertices, {});
  std::vector<int> uses(m, 0);
  for (int v = 0; v < num_vertices; ++v) {
    require(rotation[v].size() <= 4, Errc::DegreeExceeded,
            "vertex " + std::to_string(v) + " has degree > 4");
    for (int e : rotation[v]) {
      require(e >= 0 && e < m, Errc::DanglingRotationEntry,
              "rotation of vertex " + std::to_string(v) + " references unknown edge");
      int d;
      if (g.edges_[e].first == v)
        d = dart_id(e, 0);
      else if (g.edges_[e].second == v)
        d = dart_id(e, 1);
      else
        fail(Errc::DanglingRotationEntry, "rotation of vertex " + std::to_string(v) +
                                              " lists edge " + std::to_string(e) +
                                              " not incident to it");
      g.rotation_darts_[v].push_back(d);
      ++uses[e];
    }
  }
  for (int e = 0; e < m; ++e)
    require(uses[e] == 2, Errc::DanglingRotationEntry,
            "edge " + std::to_string(e) + " must appear in exactly two rotations");

  // Connectivity (face tracing only makes sense on one component).
  if (num_vertices > 1) {
    std::vector<char> vis(num_vertices, 0);
    std::vector<int> stack = {0};
    vis[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int d : g.rotation_darts_[v]) {
        int w = g.dart_head(d);
        if (!vis[w]) {
          vis[w] = 1;
          ++count;
          stack.push_back(w);
        }
      }
    }
    require(count == num_vertices, Errc::DisconnectedInput, "embedding must be connected");
  }
  g.connected_ = true;

  // Face tracing. The successor of dart d is the dart leaving head(d) whose
  // edge is the clockwise next of edge(d) in the rotation there; faces come
  // out with their interior on the left of each dart.
  const int dn = 2 * m;
  std::vector<int> pos_at_head(dn, -1);
  for (int v = 0; v < num_vertices; ++v)
    for (int i = 0; i < static_cast<int>(g.rotation_darts_[v].size()); ++i)
      pos_at_head[dart_reverse(g.rotation_darts_[v][i])] = i;

  g.next_dart_.assign(dn, -1);
  for (int d = 0; d < dn; ++d) {
    int v = g.dart_head(d);
    int i = pos_at_head[d];
    const auto& rot = g.rotation_darts_[v];
    g.next_dart_[d] = rot[(i + 1) % rot.size()];
  }

  g.dart_face_.assign(dn, -1);
  g.dart_pos_.assign(dn, -1);
  for (int d0 = 0; d0 < dn; ++d0) {
    if (g.dart_face_[d0] >= 0) continue;
    Face f;
    f.id = static_cast<int>(g.faces_.size());
    int d = d0;
    do {
      g.dart_face_[d] = f.id;
      g.dart_pos_[d] = static_cast<int>(f.darts.size());
      f.darts.push_back(d);
      d = g.next_dart_[d];
    } while (d != d0);
    g.faces_.push_back(std::move(f));
  }
  if (m == 0) {
    // Single-vertex graph: one (outer) face with an empty boundary.
    Face f;
    f.id = 0;
    g.faces_.push_back(std::move(f));
  }

  int euler = num_vertices - m + static_cast<int>(g.faces_.size());
  require(euler == 2, Errc::NonPlanarEmbedding,
          "rotation system is not a planar embedding (V-E+F = " + std::to_string(euler) + ")");

  if (outer_face_hint >= 0) {
    require(outer_face_hint < static_cast<int>(g.faces_.size()), Errc::BadInput,
            "outer face index out of range");
    g.outer_face_ = outer_face_hint;
  } else {
    int best = 0;
    for (int f = 1; f < static_cast<int>(g.faces_.size()); ++f)
      if (g.faces_[f].degree() > g.faces_[best].degree()) best = f;
    g.outer_face_ = best;
    g.outer_defaulted_ = true;
  }
  g.faces_[g.outer_face_].is_outer = true;
  return g;
}

ClosureDecomposition closure(const PlaneGraph& g) {
  require(g.is_connected(), Errc::DisconnectedInput, "closure requires a connected graph");
  const int n = g.num_vertices();
  const int m = g.num_edges();

  std::vector<int> deg(n, 0);
  for (int e = 0; e < m; ++e) {
    ++deg[g.edge(e).first];
    ++deg[g.edge(e).second];
  }
  std::vector<char> removed(n, 0);
  std::vector<int> queue;
  for (int v = 0; v < n; ++v)
    if (deg[v] == 1) queue.push_back(v);
  std::sort(queue.begin(), queue.end());
  int alive = n;
  while (!queue.empty() && alive > 1) {
    int v = queue.front();
    queue.erase(queue.begin());
    if (removed[v] || deg[v] != 1) continue;
    removed[v] = 1;
    --alive;
    for (int d : g.rotation(v)) {
      int w = g.dart_head(d);
      if (removed[w]) continue;
      if (--deg[w] == 1 && alive > 1) {
        queue.insert(std::lower_bound(queue.begin(), queue.end(), w), w);
      }
    }
  }

  ClosureDecomposition out;
  std::vector<int> to_closure(n, -1);
  for (int v = 0; v < n; ++v)
    if (!removed[v]) {
      to_closure[v] = static_cast<int>(out.closure_vertices.size());
      out.closure_vertices.push_back(v);
    }

  std::vector<std::pair<int, int>> cedges;
  std::vector<std::vector<int>> crot(out.closure_vertices.size());
  std::vector<int> edge_map(m, -1);
  for (int e = 0; e < m; ++e) {
    auto [u, v] = g.edge(e);
    if (!removed[u] && !removed[v]) {
      edge_map[e] = static_cast<int>(cedges.size());
      cedges.emplace_back(to_closure[u], to_closure[v]);
      out.closure_edges.push_back(e);
    }
  }
  for (int v = 0; v < n; ++v) {
    if (removed[v]) continue;
    for (int d : g.rotation(v)) {
      int e = edge_map[dart_edge(d)];
      if (e >= 0) crot[to_closure[v]].push_back(e);
    }
  }

  // Outer face of the closure: peeling only shortens walks (tree edges are
  // bridges), so the face owning the surviving outer darts is well defined.
  int outer_hint = -1;
  out.closure = PlaneGraph::build(static_cast<int>(out.closure_vertices.size()), cedges, crot,
                                  -1, true);
  if (out.closure.num_edges() > 0) {
    for (int d : g.face(g.outer_face()).darts) {
      int e = edge_map[dart_edge(d)];
      if (e >= 0) {
        outer_hint = out.closure.dart_face(dart_id(e, dart_side(d)));
        break;
      }
    }
    if (outer_hint >= 0 && outer_hint != out.closure.outer_face()) {
      out.closure = PlaneGraph::build(static_cast<int>(out.closure_vertices.size()), cedges,
                                      crot, outer_hint, true);
    }
  }
  for (int i = 0; i < static_cast<int>(out.closure_vertices.size()); ++i)
    out.closure.vertex_labels[i] = out.closure_vertices[i];

  // Group removed vertices into components; each attaches to exactly one
  // connection vertex by exactly one edge.
  std::vector<int> comp(n, -1);
  for (int v0 = 0; v0 < n; ++v0) {
    if (!removed[v0] || comp[v0] >= 0) continue;
    TreePart part;
    part.root = -1;
    int id = static_cast<int>(out.tree_parts.size());
    std::vector<int> stack = {v0};
    comp[v0] = id;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      part.vertices.push_back(v);
      for (int d : g.rotation(v)) {
        int w = g.dart_head(d);
        if (removed[w]) {
          if (comp[w] < 0) {
            comp[w] = id;
            stack.push_back(w);
          }
        } else {
          part.root = w;
        }
      }
    }
    std::sort(part.vertices.begin(), part.vertices.end());
    out.tree_parts.push_back(std::move(part));
  }
  for (int e = 0; e < m; ++e) {
    auto [u, v] = g.edge(e);
    int c = removed[u] ? comp[u] : (removed[v] ? comp[v] : -1);
    if (c >= 0) out.tree_parts[c].edges.emplace_back(u, v);
  }
  std::set<int> conn;
  for (auto& p : out.tree_parts) {
    require(p.root >= 0, Errc::DisconnectedInput, "tree part without attachment");
    conn.insert(p.root);
  }
  out.connection_vertices.assign(conn.begin(), conn.end());
  return out;
}

PlaneGraph plane_graph_from_points(const std::vector<std::pair<long long, long long>>& points,
                                   std::vector<std::pair<int, int>> edges, int outer_face_hint) {
  const int n = static_cast<int>(points.size());
  std::vector<std::vector<int>> rot(n);
  std::vector<std::vector<std::pair<double, int>>> ang(n);
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    auto [u, v] = edges[e];
    double a = std::atan2(double(points[v].second - points[u].second),
                          double(points[v].first - points[u].first));
    double b = std::atan2(double(points[u].second - points[v].second),
                          double(points[u].first - points[v].first));
    ang[u].push_back({a, e});
    ang[v].push_back({b, e});
  }
  for (int v = 0; v < n; ++v) {
    // clockwise = descending angle
    std::sort(ang[v].begin(), ang[v].end(),
              [](const auto& x, const auto& y) { return x.first > y.first; });
    for (auto& [a, e] : ang[v]) rot[v].push_back(e);
  }
  return PlaneGraph::build(n, std::move(edges), std::move(rot), outer_face_hint);
}

}  // namespace orthograph
