#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

#include "conex/canonical.hpp"
#include "conex/graph.hpp"

namespace conex {

inline constexpr int kEnumDefaultCap = 9;
inline constexpr int kEnumForceCap = 10;

/// Enumeration order above the cap (exit code 2 at the CLI).
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Lightweight graph for the enumeration hot path (n <= 10).
struct SmallGraph {
  int n = 0;
  std::array<uint16_t, 12> row{};

  bool test(int u, int v) const { return row[u] >> v & 1; }
  void add(int u, int v) {
    row[u] |= static_cast<uint16_t>(1u << v);
    row[v] |= static_cast<uint16_t>(1u << u);
  }
  int edges() const;
  bool connected() const;
};

Graph to_graph(const SmallGraph& g);

/// Streams exactly one representative per isomorphism class of graphs on n
/// vertices, by canonical augmentation: a child is accepted iff the added
/// vertex lies in the automorphism orbit of the canonical deletion vertex.
/// Subtrees whose root satisfies `prune` are skipped entirely (sound for
/// subgraph-hereditary prune predicates only). Deterministic DFS order.
void for_each_graph(int n, bool connected_only,
                    const std::function<void(const SmallGraph&, const CanonResult&)>& visit,
                    const std::function<bool(const SmallGraph&)>& prune = nullptr,
                    bool force = false);

long long count_graphs(int n, bool connected_only, bool force = false);

/// Canonically relabeled graph6 string of a small graph.
std::string small_canonical_g6(const SmallGraph& g, const CanonResult& c);

namespace detail {
/// Accepted graphs at a fixed level plus their canon data, for sharded runs.
struct Seed {
  SmallGraph g;
  CanonResult canon;
};
std::vector<Seed> enumeration_seeds(int level, const std::function<bool(const SmallGraph&)>& prune);
void extend_from(const Seed& seed, int n_target,
                 const std::function<void(const SmallGraph&, const CanonResult&)>& visit,
                 const std::function<bool(const SmallGraph&)>& prune);
}  // namespace detail

}  // namespace conex
