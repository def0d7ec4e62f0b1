#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conex/graph.hpp"

namespace conex {

/// A connected acyclic graph; the invariant is checked at construction.
class Tree {
 public:
  explicit Tree(Graph g);
  const Graph& graph() const { return g_; }
  int order() const { return g_.order(); }

 private:
  Graph g_;
};

/// Tree with at most one vertex of degree >= 3 (the center); legs are the
/// center-to-leaf path lengths in edges, sorted ascending.
struct SpiderShape {
  int center = 0;
  std::vector<int> legs;
};

/// Vertices lying in a maximum-size component of T-e for every edge e.
/// Always 1 or 2 vertices; if 2, they are adjacent.
std::vector<int> barycenter(const Tree& t);

/// B(k,d): path on d+1 vertices with one leaf blown up into an independent
/// set of size k-d. Path vertices are 0..d-1, blown-up leaves d..k-1, all
/// adjacent to d-1. Requires k >= d+1 >= 2 and, when k > d+1, d >= 2.
Tree broom(int k, int d);

std::optional<SpiderShape> as_spider(const Tree& t);

/// Complete binary tree with 2^(2r)-1 vertices in heap layout
/// (children of i are 2i+1 and 2i+2). Requires 1 <= r <= 10.
Tree binary_tree(int r);

/// Length in edges of a longest path whose internal vertices all have
/// degree exactly 2. Requires order >= 2.
int max_bare_path(const Tree& t);

/// Exactly one representative per isomorphism class of trees on k vertices,
/// in a deterministic order. Requires 1 <= k <= 14.
std::vector<Tree> enumerate_trees(int k);

/// Rooted-tree certificate of the free tree (root chosen at the center),
/// equal iff isomorphic. Used by the enumerator for deduplication.
std::string tree_certificate(const Graph& g);

/// Number of edges of a longest path (diameter).
int tree_diameter(const Tree& t);

/// Vertices on the u side of g - {u,v}. For trees this is the component of u
/// after deleting the edge.
Bitset edge_side(const Graph& g, int u, int v);

}  // namespace conex
