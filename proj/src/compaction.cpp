#include "orthograph/compaction.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace orthograph {

ShapeInput ShapeInput::plain(PlaneGraph g, OrthoRep rep) {
  ShapeInput in;
  in.orig_n = g.num_vertices();
  in.orig_m = g.num_edges();
  in.vertex_orig.resize(in.orig_n);
  std::iota(in.vertex_orig.begin(), in.vertex_orig.end(), 0);
  in.edge_orig.resize(in.orig_m);
  std::iota(in.edge_orig.begin(), in.edge_orig.end(), 0);
  for (int e = 0; e < in.orig_m; ++e) in.orig_edges.push_back(g.edge(e));
  in.g = std::move(g);
  in.rep = std::move(rep);
  return in;
}

namespace {

// Mutable bend-free shape graph: clockwise dart rotations plus a travel
// direction per dart. Faces are traced on demand so edits never leave stale
// walks behind.
struct Work {
  struct Vert {
    std::vector<int> darts;  // out-darts, clockwise
    int orig = -1;
  };
  struct Edge {
    int u, v;
    int orig = -1;
  };
  std::vector<Vert> verts;
  std::vector<Edge> edges;
  std::vector<int> dir;  // per dart

  int tail(int d) const {
    return dart_side(d) == 0 ? edges[dart_edge(d)].u : edges[dart_edge(d)].v;
  }
  int head(int d) const { return tail(dart_reverse(d)); }

  int add_vertex(int orig) {
    verts.push_back({{}, orig});
    return static_cast<int>(verts.size()) - 1;
  }

  int add_edge_raw(int u, int v, int orig, int dir_from_u) {
    int e = static_cast<int>(edges.size());
    edges.push_back({u, v, orig});
    dir.push_back(dir_from_u & 3);
    dir.push_back((dir_from_u + 2) & 3);
    return e;
  }

  int pos_of_dart(int v, int d) const {
    const auto& list = verts[v].darts;
    for (int i = 0; i < static_cast<int>(list.size()); ++i)
      if (list[i] == d) return i;
    fail(Errc::InvalidRep, "dart missing from rotation");
  }

  int next_dart(int d) const {
    int v = head(d);
    int i = pos_of_dart(v, dart_reverse(d));
    const auto& list = verts[v].darts;
    return list[(i + 1) % list.size()];
  }

  std::vector<int> trace_face(int seed) const {
    std::vector<int> walk;
    int d = seed;
    do {
      walk.push_back(d);
      d = next_dart(d);
    } while (d != seed);
    return walk;
  }

  int qt_at(int in_dart, int out_dart) const {
    return corner_quarter_turns(dir[in_dart], dir[out_dart]);
  }

  int walk_turn_sum(const std::vector<int>& walk) const {
    int s = 0;
    for (size_t i = 0; i < walk.size(); ++i)
      s += turn_of_quarter_turns(qt_at(walk[i], walk[(i + 1) % walk.size()]));
    return s;
  }

  // Split edge e by a fresh degree-2 vertex; e keeps its tail half. Returns
  // the new vertex.
  int split_edge(int e) {
    int b = edges[e].v;
    int w = add_vertex(-1);
    int e2 = add_edge_raw(w, b, edges[e].orig, dir[dart_id(e, 0)]);
    int pos = pos_of_dart(b, dart_id(e, 1));
    verts[b].darts[pos] = dart_id(e2, 1);
    edges[e].v = w;
    verts[w].darts = {dart_id(e2, 0), dart_id(e, 1)};
    return w;
  }

  void sort_rotation_cw(int v) {
    auto& list = verts[v].darts;
    std::sort(list.begin(), list.end(), [&](int a, int b) { return dir[a] > dir[b]; });
  }
};

Work make_work(const ShapeInput& in, const std::vector<int>& dirs) {
  const PlaneGraph& g = in.g;
  Work w;
  for (int v = 0; v < g.num_vertices(); ++v) w.add_vertex(in.vertex_orig[v]);

  // Edges in original order so dart 0 keeps its direction anchor; bends
  // become degree-2 dummy vertices.
  std::vector<int> dart_at_u(g.num_edges()), dart_at_v(g.num_edges());
  for (int e = 0; e < g.num_edges(); ++e) {
    auto [u, v] = g.edge(e);
    const std::string& bends = in.rep.edge_bends[e];
    int cur = u;
    int d = dirs[dart_id(e, 0)];
    int prev_edge = -1;
    for (size_t i = 0; i <= bends.size(); ++i) {
      int nxt = (i == bends.size()) ? v : w.add_vertex(-1);
      int we = w.add_edge_raw(cur, nxt, in.edge_orig[e], d);
      if (prev_edge >= 0) w.verts[cur].darts = {dart_id(we, 0), dart_id(prev_edge, 1)};
      if (i == 0) dart_at_u[e] = dart_id(we, 0);
      if (i == bends.size()) dart_at_v[e] = dart_id(we, 1);
      if (i < bends.size()) d = (d + (bends[i] == 'L' ? 1 : -1)) & 3;
      prev_edge = we;
      cur = nxt;
    }
  }
  for (int v = 0; v < g.num_vertices(); ++v)
    for (int gd : g.rotation(v))
      w.verts[v].darts.push_back(dart_side(gd) == 0 ? dart_at_u[dart_edge(gd)]
                                                    : dart_at_v[dart_edge(gd)]);
  return w;
}

// From the corner at walk[corner_index] (angle >= 3pi/2), the cut ray
// continues the incoming dart. Scanning forward, the wall it meets is the
// first dart reached with cumulative turn qt-1; return its walk index.
int scan_cut_target(const Work& w, const std::vector<int>& walk, int corner_index) {
  const int k = static_cast<int>(walk.size());
  int in_dart = walk[corner_index];
  int out_dart = walk[(corner_index + 1) % k];
  int qt = w.qt_at(in_dart, out_dart);
  int target = qt - 1;
  int rot = 0;
  for (int step = 2; step < k; ++step) {
    int j = (corner_index + step) % k;
    int jprev = (corner_index + step - 1) % k;
    rot += turn_of_quarter_turns(w.qt_at(walk[jprev], walk[j]));
    if (rot == target) {
      require(w.dir[walk[j]] == rotate_ccw(w.dir[in_dart], 1), Errc::InvalidRep,
              "cut target direction mismatch");
      return j;
    }
  }
  fail(Errc::InvalidRep, "no projection target found; representation is inconsistent");
}

struct Refiner {
  Work w;
  std::vector<int> pending;  // seed darts of faces still to process

  void refine_face(int seed) {
    std::vector<int> walk = w.trace_face(seed);
    const int k = static_cast<int>(walk.size());
    int reflex = -1;
    for (int i = 0; i < k; ++i) {
      if (w.qt_at(walk[i], walk[(i + 1) % k]) >= 3) {
        reflex = i;
        break;
      }
    }
    if (reflex < 0) return;  // rectangular

    int j = scan_cut_target(w, walk, reflex);
    int u = w.head(walk[reflex]);
    int ray_dir = w.dir[walk[reflex]];

    int wv = w.split_edge(dart_edge(walk[j]));
    int cut = w.add_edge_raw(u, wv, -1, ray_dir);
    int p = w.pos_of_dart(u, dart_reverse(walk[reflex]));
    w.verts[u].darts.insert(w.verts[u].darts.begin() + p + 1, dart_id(cut, 0));
    w.verts[wv].darts.push_back(dart_id(cut, 1));
    w.sort_rotation_cw(wv);

    pending.push_back(dart_id(cut, 0));
    pending.push_back(dart_id(cut, 1));
  }

  void run(std::vector<int> seeds) {
    pending = std::move(seeds);
    int guard = 0;
    while (!pending.empty()) {
      require(++guard < (1 << 22), Errc::InconsistentConstraints,
              "refinement did not terminate");
      int seed = pending.back();
      pending.pop_back();
      refine_face(seed);
    }
  }
};

}  // namespace

RefinedRep refine_to_rectangles(const ShapeInput& in) {
  RepReport vr = validate_rep(in.g, in.rep);
  require(vr.ok(), Errc::InvalidRep, vr.message);
  require(in.g.is_connected(), Errc::DisconnectedInput, "refinement needs a connected graph");
  require(in.g.num_edges() > 0, Errc::BadInput, "nothing to refine");

  std::vector<int> dirs = dart_directions(in.g, in.rep);
  Work w = make_work(in, dirs);

  // Trace the normalized shape; the outer walk is the one with turn sum -4.
  std::vector<char> seen(2 * w.edges.size(), 0);
  std::vector<std::vector<int>> walks;
  int outer_walk = -1;
  for (int d = 0; d < static_cast<int>(2 * w.edges.size()); ++d) {
    if (seen[d]) continue;
    auto walk = w.trace_face(d);
    for (int x : walk) seen[x] = 1;
    int sum = w.walk_turn_sum(walk);
    if (sum == -4) {
      require(outer_walk < 0, Errc::InvalidRep, "two faces with outer turn sum");
      outer_walk = static_cast<int>(walks.size());
    } else {
      require(sum == 4, Errc::InvalidRep, "face with invalid turn sum");
    }
    walks.push_back(std::move(walk));
  }
  require(outer_walk >= 0, Errc::InvalidRep, "no outer face found");

  // Enclose in a dummy frame: from an outer corner of angle >= 3pi/2, drop a
  // connector that continues the incoming segment onto a fresh vertex m in
  // the middle of the facing frame side. The ring between the drawing and
  // the frame becomes an ordinary simply connected inner face.
  const auto& ow = walks[outer_walk];
  int corner_idx = -1;
  for (int i = 0; i < static_cast<int>(ow.size()); ++i) {
    if (w.qt_at(ow[i], ow[(i + 1) % ow.size()]) >= 3) {
      corner_idx = i;
      break;
    }
  }
  require(corner_idx >= 0, Errc::InvalidRep, "outer walk has no corner to attach the frame");

  int u = w.head(ow[corner_idx]);
  int delta = w.dir[ow[corner_idx]];  // connector direction
  int m = w.add_vertex(-1);
  int cA = w.add_vertex(-1);  // frame corner on the ccw side of m
  int cB = w.add_vertex(-1);  // frame corner on the cw side of m
  int cC = w.add_vertex(-1);  // behind cA
  int cD = w.add_vertex(-1);  // behind cB
  int eMA = w.add_edge_raw(m, cA, -1, rotate_ccw(delta, 1));
  int eMB = w.add_edge_raw(m, cB, -1, rotate_ccw(delta, -1));
  int eAC = w.add_edge_raw(cA, cC, -1, rotate_ccw(delta, 2));
  int eBD = w.add_edge_raw(cB, cD, -1, rotate_ccw(delta, 2));
  int eCD = w.add_edge_raw(cC, cD, -1, rotate_ccw(delta, -1));
  int cut = w.add_edge_raw(u, m, -1, delta);
  {
    int p = w.pos_of_dart(u, dart_reverse(ow[corner_idx]));
    w.verts[u].darts.insert(w.verts[u].darts.begin() + p + 1, dart_id(cut, 0));
  }
  for (int rv : {m, cA, cB, cC, cD}) {
    if (rv == m) w.verts[m].darts = {dart_id(cut, 1), dart_id(eMA, 0), dart_id(eMB, 0)};
    if (rv == cA) w.verts[cA].darts = {dart_id(eMA, 1), dart_id(eAC, 0)};
    if (rv == cB) w.verts[cB].darts = {dart_id(eMB, 1), dart_id(eBD, 0)};
    if (rv == cC) w.verts[cC].darts = {dart_id(eAC, 1), dart_id(eCD, 0)};
    if (rv == cD) w.verts[cD].darts = {dart_id(eBD, 1), dart_id(eCD, 1)};
    w.sort_rotation_cw(rv);
  }

  Refiner ref;
  ref.w = std::move(w);
  {
    auto ring = ref.w.trace_face(dart_id(cut, 0));
    require(ref.w.walk_turn_sum(ring) == 4, Errc::InvalidRep, "ring face has wrong turn sum");
  }
  std::vector<int> seeds;
  for (int i = 0; i < static_cast<int>(walks.size()); ++i)
    if (i != outer_walk) seeds.push_back(walks[i][0]);
  seeds.push_back(dart_id(cut, 0));
  ref.run(std::move(seeds));
  Work& rw = ref.w;

  // Emit as an immutable plane graph + bend-free representation.
  RefinedRep out;
  out.orig_n = in.orig_n;
  out.orig_m = in.orig_m;
  out.orig_edges = in.orig_edges;
  out.aligned = in.aligned;
  std::vector<std::pair<int, int>> pedges;
  pedges.reserve(rw.edges.size());
  for (const auto& e : rw.edges) pedges.emplace_back(e.u, e.v);
  std::vector<std::vector<int>> rot(rw.verts.size());
  for (size_t v = 0; v < rw.verts.size(); ++v)
    for (int d : rw.verts[v].darts) rot[v].push_back(dart_edge(d));

  PlaneGraph g0 = PlaneGraph::build(static_cast<int>(rw.verts.size()), pedges, rot, -1, true);
  OrthoRep rep0;
  rep0.corner_qt.assign(g0.num_corners(), 2);
  for (int c = 0; c < g0.num_corners(); ++c) rep0.corner_qt[c] = rw.qt_at(c, g0.next_dart(c));
  rep0.edge_bends.assign(g0.num_edges(), "");
  int outer = -1;
  for (int f = 0; f < g0.num_faces(); ++f) {
    int s = 0;
    for (int d : g0.face(f).darts) s += turn_of_quarter_turns(rep0.corner_qt[d]);
    if (s == -4) outer = f;
  }
  require(outer >= 0, Errc::InvalidRep, "refined graph lost its outer face");
  out.g = PlaneGraph::build(static_cast<int>(rw.verts.size()), pedges, rot, outer, true);
  out.rep = std::move(rep0);
  for (const auto& v : rw.verts) out.vertex_orig.push_back(v.orig);
  for (const auto& e : rw.edges) out.edge_orig.push_back(e.orig);

  RepReport check = validate_rep(out.g, out.rep);
  require(check.ok(), Errc::InvalidRep, "refined representation invalid: " + check.message);
  for (int f = 0; f < out.g.num_faces(); ++f) {
    if (f == out.g.outer_face()) continue;
    int convex = 0;
    for (int d : out.g.face(f).darts) {
      require(out.rep.corner_qt[d] <= 2, Errc::InvalidRep, "reflex corner survived refinement");
      if (out.rep.corner_qt[d] == 1) ++convex;
    }
    require(convex == 4, Errc::InvalidRep, "refined face is not a rectangle");
  }
  return out;
}

Drawing assign_coordinates(const RefinedRep& rr) {
  const PlaneGraph& g = rr.g;
  std::vector<int> dirs = dart_directions(g, rr.rep);

  const int n = g.num_vertices();
  // Channel groups: vertices joined by a vertical edge share x; by a
  // horizontal edge, y.
  std::vector<int> xg(n), yg(n);
  std::iota(xg.begin(), xg.end(), 0);
  std::iota(yg.begin(), yg.end(), 0);
  std::function<int(std::vector<int>&, int)> find = [&](std::vector<int>& p, int v) -> int {
    while (p[v] != v) {
      p[v] = p[p[v]];
      v = p[v];
    }
    return v;
  };
  for (int e = 0; e < g.num_edges(); ++e) {
    auto [u, v] = g.edge(e);
    int d = dirs[dart_id(e, 0)];
    if (d == kNorth || d == kSouth)
      xg[find(xg, u)] = find(xg, v);
    else
      yg[find(yg, u)] = find(yg, v);
  }

  auto layer = [&](std::vector<int>& grp, bool horizontal) {
    std::vector<int> indeg(n, 0);
    std::vector<std::vector<int>> adj(n);
    for (int e = 0; e < g.num_edges(); ++e) {
      auto [u, v] = g.edge(e);
      int d = dirs[dart_id(e, 0)];
      bool is_h = (d == kEast || d == kWest);
      if (is_h != horizontal) continue;
      int a = find(grp, u), b = find(grp, v);
      if (d == kWest || d == kSouth) std::swap(a, b);
      adj[a].push_back(b);
      ++indeg[b];
    }
    std::vector<long long> coord(n, 0);
    std::vector<int> order;
    for (int v = 0; v < n; ++v)
      if (find(grp, v) == v && indeg[v] == 0) order.push_back(v);
    size_t qi = 0;
    int processed = 0;
    int groups = 0;
    for (int v = 0; v < n; ++v)
      if (find(grp, v) == v) ++groups;
    while (qi < order.size()) {
      int a = order[qi++];
      ++processed;
      for (int b : adj[a]) {
        coord[b] = std::max(coord[b], coord[a] + 1);
        if (--indeg[b] == 0) order.push_back(b);
      }
    }
    require(processed == groups, Errc::InconsistentConstraints,
            "cycle in the channel constraint graph");
    return coord;
  };
  std::vector<long long> xs = layer(xg, true);
  std::vector<long long> ys = layer(yg, false);

  std::vector<Point> pos(n);
  for (int v = 0; v < n; ++v) pos[v] = {xs[find(xg, v)], ys[find(yg, v)]};

  for (int e = 0; e < g.num_edges(); ++e) {
    auto [u, v] = g.edge(e);
    int d = dirs[dart_id(e, 0)];
    long long dx = pos[v].x - pos[u].x, dy = pos[v].y - pos[u].y;
    bool ok = (dir_dx(d) == 0 ? dx == 0 : dx * dir_dx(d) > 0) &&
              (dir_dy(d) == 0 ? dy == 0 : dy * dir_dy(d) > 0);
    require(ok, Errc::InconsistentConstraints, "edge not realized along its direction");
  }

  // Strip dummies: rebuild each original edge from its pieces.
  Drawing dr;
  dr.vertex_pos.assign(rr.orig_n, Point{0, 0});
  std::vector<int> work_of_orig(rr.orig_n, -1);
  for (int v = 0; v < n; ++v)
    if (rr.vertex_orig[v] >= 0) {
      dr.vertex_pos[rr.vertex_orig[v]] = pos[v];
      work_of_orig[rr.vertex_orig[v]] = v;
    }

  std::vector<std::vector<int>> pieces(rr.orig_m);
  for (int e = 0; e < g.num_edges(); ++e)
    if (rr.edge_orig[e] >= 0) pieces[rr.edge_orig[e]].push_back(e);

  dr.edge_polyline.assign(rr.orig_m, {});
  for (int oe = 0; oe < rr.orig_m; ++oe) {
    std::map<int, std::vector<int>> at;
    for (int e : pieces[oe]) {
      at[g.edge(e).first].push_back(e);
      at[g.edge(e).second].push_back(e);
    }
    int start = work_of_orig[rr.orig_edges[oe].first];
    require(start >= 0 && at.count(start), Errc::InconsistentConstraints, "broken edge chain");
    std::vector<Point> poly;
    int cur = start;
    int prev_edge = -1;
    poly.push_back(pos[cur]);
    for (size_t step = 0; step < pieces[oe].size(); ++step) {
      int next_e = -1;
      for (int e : at[cur])
        if (e != prev_edge) next_e = e;
      require(next_e >= 0, Errc::InconsistentConstraints, "broken edge chain");
      int nxt = g.edge(next_e).first == cur ? g.edge(next_e).second : g.edge(next_e).first;
      poly.push_back(pos[nxt]);
      prev_edge = next_e;
      cur = nxt;
    }
    // Erase collinear interior points (refinement dummies); keep real bends.
    std::vector<Point> clean;
    for (size_t i = 0; i < poly.size(); ++i) {
      if (i > 0 && i + 1 < poly.size()) {
        const Point& a = clean.back();
        const Point& b = poly[i];
        const Point& c = poly[i + 1];
        if ((a.x == b.x && b.x == c.x) || (a.y == b.y && b.y == c.y)) continue;
      }
      clean.push_back(poly[i]);
    }
    dr.edge_polyline[oe] = std::move(clean);
  }
  dr.normalize();
  return dr;
}

Drawing compact(const ShapeInput& in) { return assign_coordinates(refine_to_rectangles(in)); }

}  // namespace orthograph
