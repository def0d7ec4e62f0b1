#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "conex/enumerate.hpp"
#include "conex/graph.hpp"
#include "conex/tree.hpp"

namespace conex {

/// Forbidden-pattern descriptor: a tree (graph6), "path:K", "cycle-ge:K"
/// (any cycle of length >= K) or "cycle:K" (a cycle of length exactly K).
class Forbid {
 public:
  enum class Kind { tree_pattern, path, cycle_ge, cycle_exact };

  static Forbid parse(const std::string& spec);
  static Forbid tree(const Tree& t);
  static Forbid path(int k);
  static Forbid cycle_ge(int k);
  static Forbid cycle_exact(int k);

  Kind kind() const { return kind_; }
  int k() const { return k_; }
  const std::string& descriptor() const { return descriptor_; }

  bool contains(const Graph& host) const;

 private:
  Kind kind_ = Kind::path;
  int k_ = 0;
  std::shared_ptr<const Tree> tree_;  // for tree_pattern / path kinds
  std::string descriptor_;
};

/// Result of a brute-force extremal computation.
struct ExtremalRecord {
  int n = 0;
  std::string forbid;
  bool connected_only = false;
  long long max_edges = -1;  // -1: no qualifying host exists
  std::vector<std::string> witnesses;  // canonical graph6, lexicographic
};

/// Exact maximum edge count over all (connected, if flagged) n-vertex graphs
/// not containing the pattern, with every extremal witness up to isomorphism.
/// Deterministic for any worker count. Respects the enumeration cap.
ExtremalRecord extremal_number(int n, const Forbid& forbid, bool connected_only,
                               int workers = 1, bool force = false);

std::string to_json_string(const ExtremalRecord& r);

}  // namespace conex
