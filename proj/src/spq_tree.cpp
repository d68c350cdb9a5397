#include "orthograph/spq_tree.hpp"

#include <algorithm>
#include <list>
#include <set>

namespace orthograph {

int SPQTree::p_star() const {
  int count = 0;
  for (const auto& nd : nodes) {
    if (nd.type != SpqType::P) continue;
    int s_children = 0;
    for (int c : nd.children)
      if (nodes[c].type == SpqType::S) ++s_children;
    if (s_children >= 2) ++count;
  }
  return count;
}

bool SPQTree::root_three_s() const {
  const auto& r = nodes[root];
  if (r.type != SpqType::P || r.children.size() != 3) return false;
  for (int c : r.children)
    if (nodes[c].type != SpqType::S) return false;
  return true;
}

std::vector<std::pair<int, int>> SPQTree::expand() const {
  std::vector<std::pair<int, int>> out;
  std::vector<int> stack = {root};
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    const auto& nd = nodes[i];
    if (nd.type == SpqType::Q)
      out.push_back(graph_edges[nd.edge]);
    else
      for (int c : nd.children) stack.push_back(c);
  }
  return out;
}

namespace {

struct Builder {
  std::vector<SpqNode> nodes;

  int make_q(int edge, int s, int t) {
    nodes.push_back(SpqNode{SpqType::Q, s, t, {}, edge});
    return static_cast<int>(nodes.size()) - 1;
  }

  // Flip a subtree so its terminals read (t, s).
  void flip(int i) {
    auto& nd = nodes[i];
    std::swap(nd.s, nd.t);
    std::reverse(nd.children.begin(), nd.children.end());
    for (int c : nd.children) flip(c);
  }

  int orient(int i, int s, int t) {
    if (nodes[i].s == s && nodes[i].t == t) return i;
    flip(i);
    return i;
  }

  int series(int a, int b, int s, int mid, int t) {
    a = orient(a, s, mid);
    b = orient(b, mid, t);
    SpqNode nd{SpqType::S, s, t, {}, -1};
    for (int part : {a, b}) {
      if (nodes[part].type == SpqType::S) {
        for (int c : nodes[part].children) nd.children.push_back(c);
      } else {
        nd.children.push_back(part);
      }
    }
    nodes.push_back(std::move(nd));
    return static_cast<int>(nodes.size()) - 1;
  }

  int parallel(int a, int b, int s, int t) {
    a = orient(a, s, t);
    b = orient(b, s, t);
    SpqNode nd{SpqType::P, s, t, {}, -1};
    for (int part : {a, b}) {
      if (nodes[part].type == SpqType::P) {
        for (int c : nodes[part].children) nd.children.push_back(c);
      } else {
        nd.children.push_back(part);
      }
    }
    nodes.push_back(std::move(nd));
    return static_cast<int>(nodes.size()) - 1;
  }
};

// Smallest edge id below a subtree, used for a deterministic child order of
// P-nodes (S-node order is fixed by the series structure).
int min_edge(const std::vector<SpqNode>& nodes, int i) {
  const auto& nd = nodes[i];
  if (nd.type == SpqType::Q) return nd.edge;
  int best = 1 << 30;
  for (int c : nodes[i].children) best = std::min(best, min_edge(nodes, c));
  return best;
}

}  // namespace

SPQTree build_spq_tree(int n, std::vector<std::pair<int, int>> edges, int s, int t) {
  require(n >= 2 && s != t && s >= 0 && s < n && t >= 0 && t < n, Errc::BadInput,
          "terminals must be two distinct vertices");
  {
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
      require(u != v && u >= 0 && v >= 0 && u < n && v < n, Errc::BadInput, "bad edge");
      auto key = std::minmax(u, v);
      require(seen.insert({key.first, key.second}).second, Errc::BadInput,
              "input graph must be simple");
    }
  }

  Builder b;
  // Live multigraph of composite edges.
  struct Live {
    int u, v;
    int tree;
  };
  std::list<Live> live;
  for (int e = 0; e < static_cast<int>(edges.size()); ++e)
    live.push_back({edges[e].first, edges[e].second, b.make_q(e, edges[e].first, edges[e].second)});

  std::vector<int> deg(n, 0);
  for (auto& l : live) {
    ++deg[l.u];
    ++deg[l.v];
  }
  for (int v = 0; v < n; ++v)
    require(deg[v] > 0 || v == s || v == t, Errc::NotSeriesParallel,
            "isolated vertex " + std::to_string(v));

  bool progress = true;
  while (live.size() > 1 && progress) {
    progress = false;
    // Parallel reduction.
    for (auto it = live.begin(); it != live.end() && !progress; ++it) {
      for (auto jt = std::next(it); jt != live.end(); ++jt) {
        bool same = (it->u == jt->u && it->v == jt->v) || (it->u == jt->v && it->v == jt->u);
        if (!same) continue;
        it->tree = b.parallel(it->tree, jt->tree, it->u, it->v);
        deg[jt->u]--;
        deg[jt->v]--;
        live.erase(jt);
        progress = true;
        break;
      }
    }
    if (progress) continue;
    // Series reduction at a degree-2 inner vertex.
    for (int v = 0; v < n && !progress; ++v) {
      if (v == s || v == t || deg[v] != 2) continue;
      std::list<Live>::iterator first = live.end(), second = live.end();
      for (auto it = live.begin(); it != live.end(); ++it) {
        if (it->u == v || it->v == v) {
          if (first == live.end())
            first = it;
          else {
            second = it;
            break;
          }
        }
      }
      if (second == live.end()) continue;
      int a = first->u == v ? first->v : first->u;
      int c = second->u == v ? second->v : second->u;
      int tree = b.series(first->tree, second->tree, a, v, c);
      deg[v] = 0;
      first->u = a;
      first->v = c;
      first->tree = tree;
      live.erase(second);
      progress = true;
    }
  }

  require(live.size() == 1, Errc::NotSeriesParallel, "graph does not reduce to a single edge");
  auto& last = live.front();
  bool matches = (last.u == s && last.v == t) || (last.u == t && last.v == s);
  require(matches, Errc::NotSeriesParallel, "reduction did not end at the designated terminals");

  SPQTree out;
  out.graph_n = n;
  out.graph_edges = std::move(edges);
  out.nodes = std::move(b.nodes);
  out.root = last.tree;
  {
    Builder fixup;
    fixup.nodes = std::move(out.nodes);
    fixup.orient(out.root, s, t);
    out.nodes = std::move(fixup.nodes);
  }
  // Canonical P-child order: S-nodes before a Q-node sibling, then by the
  // smallest contained edge id.
  for (auto& nd : out.nodes) {
    if (nd.type != SpqType::P) continue;
    std::stable_sort(nd.children.begin(), nd.children.end(), [&](int x, int y) {
      bool xq = out.nodes[x].type == SpqType::Q;
      bool yq = out.nodes[y].type == SpqType::Q;
      if (xq != yq) return !xq;
      return min_edge(out.nodes, x) < min_edge(out.nodes, y);
    });
  }
  return out;
}

Lemma4Report check_lemma4(const SPQTree& t) {
  Lemma4Report rep;
  auto violate = [&](int node, const std::string& clause) {
    if (!rep.pass) return;
    rep.pass = false;
    rep.node = node;
    rep.clause = clause;
  };
  for (int i = 0; i < static_cast<int>(t.nodes.size()) && rep.pass; ++i) {
    const auto& nd = t.nodes[i];
    if (nd.type == SpqType::S) {
      const auto& ch = nd.children;
      if (ch.size() < 2) violate(i, "an S-node must have at least two children");
      for (int c : ch)
        if (t.nodes[c].type == SpqType::S)
          violate(i, "every child of an S-node is a P- or Q-node");
      if (rep.pass && (t.nodes[ch.front()].type != SpqType::Q ||
                       t.nodes[ch.back()].type != SpqType::Q))
        violate(i, "the first and last child of an S-node must be Q-nodes");
      for (size_t k = 0; k + 1 < ch.size() && rep.pass; ++k) {
        if (t.nodes[ch[k]].type == SpqType::P && t.nodes[ch[k + 1]].type == SpqType::P)
          violate(i, "a P-node child of an S-node needs Q-node neighbours on both sides");
      }
    } else if (nd.type == SpqType::P) {
      bool is_root = (i == t.root);
      if (!is_root && nd.children.size() != 2)
        violate(i, "each non-root P-node has exactly two children");
      if (is_root && nd.children.size() > 3)
        violate(i, "a root P-node has at most three children");
      int q = 0;
      for (int c : nd.children) {
        if (t.nodes[c].type == SpqType::Q) ++q;
        if (t.nodes[c].type == SpqType::P) violate(i, "a P-node cannot have a P-node child");
      }
      if (q > 1) violate(i, "at most one of the children of a P-node is a Q-node");
    }
  }
  return rep;
}

}  // namespace orthograph
