#pragma once

#include "conex/graph.hpp"

namespace conex {

/// Exact length (vertex count) of a longest cycle; 0 for forests.
/// Computed per 2-connected block. Intended for small hosts or hosts with
/// small blocks.
int circumference(const Graph& g);

/// True iff the graph has a cycle of length >= k. Requires k >= 3.
/// Short-circuits; cheaper than full circumference on free hosts.
bool has_cycle_at_least(const Graph& g, int k);

/// True iff the graph has a cycle of length exactly k. Requires k >= 3.
bool has_cycle_exact(const Graph& g, int k);

/// Exact vertex count of a longest simple path. Requires order >= 1.
int longest_path(const Graph& g);

}  // namespace conex
