#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "conex/graph.hpp"
#include "conex/tree.hpp"

namespace conex {

/// Injective map pattern vertex -> host vertex carrying every pattern edge
/// onto a host edge.
struct EmbeddingMap {
  std::vector<int> map;
};

bool embedding_valid(const Graph& host, const Tree& pattern, const EmbeddingMap& m);

enum class SearchOutcome { found, absent, budget_exceeded };

struct EmbedOptions {
  /// Node budget; 0 means unbudgeted exhaustive search.
  uint64_t max_nodes = 0;
};

struct EmbedResult {
  SearchOutcome outcome = SearchOutcome::absent;
  std::optional<EmbeddingMap> witness;
  uint64_t nodes = 0;
};

/// Complete backtracking search for the pattern tree in the host graph.
///
/// The pattern is rooted at its least barycenter and explored in DFS order;
/// host candidates are tried by descending degree (ties by index), pruned by
/// degree, by remaining free-neighbor capacity, and by skipping candidates
/// that are exchangeable twins of an already-failed one. Absence is
/// exhaustive when no budget is set, and the returned witness is the first
/// one in the fixed search order regardless of pruning.
EmbedResult find_tree_embedding(const Graph& host, const Tree& pattern,
                                const EmbedOptions& opts = {});

bool is_tree_free(const Graph& host, const Tree& pattern);

}  // namespace conex
