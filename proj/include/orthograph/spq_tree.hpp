#pragma once

#include <string>
#include <utility>
#include <vector>

#include "orthograph/error.hpp"

namespace orthograph {

enum class SpqType { S, P, Q };

struct SpqNode {
  SpqType type;
  int s = -1, t = -1;          // terminals, ordered
  std::vector<int> children;   // ordered; series order for S-nodes
  int edge = -1;               // Q-nodes: the graph edge represented
};

// Rooted decomposition tree of a two-terminal series-parallel graph.
struct SPQTree {
  std::vector<SpqNode> nodes;
  int root = -1;
  int graph_n = 0;
  std::vector<std::pair<int, int>> graph_edges;

  const SpqNode& node(int i) const { return nodes[i]; }
  int s() const { return nodes[root].s; }
  int t() const { return nodes[root].t; }
  // Number of P-nodes with at least two S-node children.
  int p_star() const;
  // Root is a P-node with three S-node children.
  bool root_three_s() const;
  // Reproduce the represented edge multiset (expansion check).
  std::vector<std::pair<int, int>> expand() const;
};

// Recognize the series-parallel structure of a simple graph between the two
// designated terminals by iterated series/parallel reduction; the resulting
// tree is maximally merged (no S child of S, no P child of P).
SPQTree build_spq_tree(int n, std::vector<std::pair<int, int>> edges, int s, int t);

struct Lemma4Report {
  bool pass = true;
  std::string clause;  // first violated clause, empty when pass
  int node = -1;       // offending node id
};

// Structural sanity gate for SPQ-trees of max-degree-3 graphs before the
// upward drawing step.
Lemma4Report check_lemma4(const SPQTree& t);

}  // namespace orthograph
