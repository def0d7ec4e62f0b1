#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conex/bitset.hpp"

namespace conex {

/// Simple undirected graph on dense vertex labels 0..n-1.
///
/// Edge membership is O(1) via bit-set adjacency rows; values are immutable
/// after construction, so they can be shared freely across workers.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int order() const { return n_; }
  long long edge_count() const { return m_; }

  bool has_edge(int u, int v) const { return adj_[u].test(v); }
  int degree(int v) const { return adj_[v].count(); }
  int max_degree() const;
  const Bitset& row(int v) const { return adj_[v]; }

  std::vector<int> neighbors(int v) const;
  /// Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edge_list() const;
  /// Degrees sorted descending.
  std::vector<int> degree_sequence() const;

  /// True iff every vertex is reachable from vertex 0. Errors on n = 0.
  bool is_connected() const;

  /// Maximal 2-connected blocks (bridges as 2-vertex blocks), each a sorted
  /// vertex list, ordered by (size descending, lexicographic). Requires a
  /// connected graph.
  std::vector<std::vector<int>> blocks() const;

  /// 2-coloring (classA, classB) if bipartite, where per component the
  /// lowest-index vertex lands in class A; nullopt otherwise.
  std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition() const;

  static Graph complete(int n);
  static Graph empty_graph(int n);
  static Graph path(int n);
  static Graph cycle(int n);
  /// Star K_{1,n-1} with hub 0.
  static Graph star(int n);

  /// Labeled equality (same order, same edge set).
  friend bool operator==(const Graph& a, const Graph& b);

 private:
  void add_edge(int u, int v);

  int n_ = 0;
  long long m_ = 0;
  std::vector<Bitset> adj_;

  friend Graph disjoint_union(const Graph& a, const Graph& b);
  friend Graph join(const Graph& a, const Graph& b);
};

/// Disjoint union; vertices of b are relabeled to a.order()..a.order()+b.order()-1.
Graph disjoint_union(const Graph& a, const Graph& b);

/// Join: disjoint union plus all edges between the two sides (same relabeling).
Graph join(const Graph& a, const Graph& b);

/// Vertex sets of connected components, each sorted, ordered by least vertex.
std::vector<std::vector<int>> components(const Graph& g);

}  // namespace conex
