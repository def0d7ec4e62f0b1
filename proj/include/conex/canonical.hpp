#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "conex/graph.hpp"

namespace conex {

inline constexpr int kCanonMaxN = 16;

/// Upper-triangle adjacency bits as a 120-bit string, most significant first,
/// so numeric comparison equals lexicographic comparison of the bit string.
struct Code128 {
  uint64_t hi = 0, lo = 0;
  friend auto operator<=>(const Code128&, const Code128&) = default;
};

using Perm16 = std::array<uint8_t, kCanonMaxN>;

struct CanonResult {
  int n = 0;
  Perm16 order{};  // canonical position -> input vertex
  Perm16 orbit{};  // input vertex -> least vertex in its automorphism orbit
  Code128 code{};
  std::vector<Perm16> generators;  // automorphism generators (vertex -> vertex)
};

/// Canonical labeling by partition refinement plus backtracking over target
/// cells. rows[v] is the adjacency bit mask of vertex v; n <= 16.
///
/// The canonical form is the lexicographically largest upper-triangle
/// adjacency string over all orderings consistent with the refinement tree;
/// equal codes across inputs hold iff the graphs are isomorphic. Discovered
/// automorphisms prune the search and yield the orbit partition.
CanonResult canon16(const uint16_t* rows, int n);

/// Convenience wrappers for graphs with order() <= 16.
CanonResult canon16(const Graph& g);
Code128 canon_code(const Graph& g);
/// graph6 of the canonically relabeled graph.
std::string canonical_graph6(const Graph& g);

}  // namespace conex
