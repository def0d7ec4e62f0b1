#include "conex/canonical.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "conex/graph6.hpp"

namespace conex {

namespace {

using Cells = std::vector<std::vector<uint8_t>>;

uint16_t cell_mask(const std::vector<uint8_t>& cell) {
  uint16_t m = 0;
  for (uint8_t v : cell) m |= static_cast<uint16_t>(1u << v);
  return m;
}

struct Search {
  const uint16_t* rows;
  int n;

  bool have_leaf = false;
  Code128 best{};
  Perm16 best_order{};
  std::vector<Perm16> gens;
  Perm16 uf{};  // union-find over vertices, min element as root

  int find(int x) {
    while (uf[x] != x) {
      uf[x] = uf[uf[x]];
      x = uf[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    uf[b] = static_cast<uint8_t>(a);
  }

  // Equitable refinement: split cells by neighbor counts into other cells
  // until stable. Sub-cells are ordered by ascending count, which is an
  // isomorphism invariant.
  void refine(Cells& cells) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t t = 0; t < cells.size() && !changed; ++t) {
        uint16_t tmask = cell_mask(cells[t]);
        for (size_t c = 0; c < cells.size(); ++c) {
          if (cells[c].size() <= 1) continue;
          int first_count = std::popcount(static_cast<unsigned>(rows[cells[c][0]] & tmask));
          bool uniform = true;
          for (uint8_t v : cells[c])
            if (std::popcount(static_cast<unsigned>(rows[v] & tmask)) != first_count) {
              uniform = false;
              break;
            }
          if (uniform) continue;
          // bucket by count, ascending
          std::array<std::vector<uint8_t>, kCanonMaxN + 1> buckets;
          for (uint8_t v : cells[c])
            buckets[std::popcount(static_cast<unsigned>(rows[v] & tmask))].push_back(v);
          Cells split;
          for (auto& b : buckets)
            if (!b.empty()) split.push_back(std::move(b));
          cells.erase(cells.begin() + static_cast<long>(c));
          cells.insert(cells.begin() + static_cast<long>(c),
                       std::make_move_iterator(split.begin()),
                       std::make_move_iterator(split.end()));
          changed = true;
          break;
        }
      }
    }
  }

  Code128 leaf_code(const Perm16& order) const {
    Code128 c{};
    int t = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j, ++t)
        if (rows[order[i]] >> order[j] & 1) {
          if (t < 64)
            c.hi |= uint64_t{1} << (63 - t);
          else
            c.lo |= uint64_t{1} << (127 - t);
        }
    return c;
  }

  void handle_leaf(const Cells& cells) {
    Perm16 order{};
    for (size_t i = 0; i < cells.size(); ++i) order[i] = cells[i][0];
    Code128 code = leaf_code(order);
    if (!have_leaf || code > best) {
      best = code;
      best_order = order;
      have_leaf = true;
      return;
    }
    if (code != best) return;
    Perm16 g{};
    bool identity = true;
    for (int i = 0; i < n; ++i) {
      g[best_order[i]] = order[i];
      if (best_order[i] != order[i]) identity = false;
    }
    if (identity) return;
    gens.push_back(g);
    for (int v = 0; v < n; ++v) unite(v, g[v]);
  }

  // Orbits of the subgroup generated by recorded automorphisms fixing every
  // vertex of `base` pointwise. Used to skip branch targets equivalent to an
  // earlier-tried one.
  Perm16 stabilizer_roots(const std::vector<uint8_t>& base) {
    Perm16 r{};
    for (int v = 0; v < n; ++v) r[v] = static_cast<uint8_t>(v);
    auto root = [&](int x) {
      while (r[x] != x) {
        r[x] = r[r[x]];
        x = r[x];
      }
      return x;
    };
    for (const Perm16& g : gens) {
      bool fixes = true;
      for (uint8_t b : base)
        if (g[b] != b) {
          fixes = false;
          break;
        }
      if (!fixes) continue;
      for (int v = 0; v < n; ++v) {
        int a = root(v), b = root(g[v]);
        if (a != b) r[std::max(a, b)] = static_cast<uint8_t>(std::min(a, b));
      }
    }
    for (int v = 0; v < n; ++v) r[v] = static_cast<uint8_t>(root(v));
    return r;
  }

  void run(Cells cells, std::vector<uint8_t>& base) {
    refine(cells);
    size_t target = cells.size();
    for (size_t i = 0; i < cells.size(); ++i)
      if (cells[i].size() > 1) {
        target = i;
        break;
      }
    if (target == cells.size()) {
      handle_leaf(cells);
      return;
    }
    std::vector<uint8_t> cand = cells[target];
    std::vector<uint8_t> tried;
    for (uint8_t u : cand) {
      Perm16 roots = stabilizer_roots(base);
      bool skip = false;
      for (uint8_t w : tried)
        if (roots[w] == roots[u]) {
          skip = true;
          break;
        }
      tried.push_back(u);
      if (skip) continue;
      Cells child;
      child.reserve(cells.size() + 1);
      for (size_t i = 0; i < cells.size(); ++i) {
        if (i != target) {
          child.push_back(cells[i]);
          continue;
        }
        child.push_back({u});
        std::vector<uint8_t> rest;
        for (uint8_t v : cells[i])
          if (v != u) rest.push_back(v);
        child.push_back(std::move(rest));
      }
      base.push_back(u);
      run(std::move(child), base);
      base.pop_back();
    }
  }
};

}  // namespace

CanonResult canon16(const uint16_t* rows, int n) {
  if (n < 0 || n > kCanonMaxN) throw std::invalid_argument("canon16: order out of range");
  CanonResult res;
  res.n = n;
  if (n == 0) return res;

  Search s;
  s.rows = rows;
  s.n = n;
  for (int v = 0; v < n; ++v) s.uf[v] = static_cast<uint8_t>(v);

  Cells cells(1);
  for (int v = 0; v < n; ++v) cells[0].push_back(static_cast<uint8_t>(v));
  std::vector<uint8_t> base;
  s.run(std::move(cells), base);

  res.order = s.best_order;
  res.code = s.best;
  res.generators = std::move(s.gens);
  for (int v = 0; v < n; ++v) res.orbit[v] = static_cast<uint8_t>(s.find(v));
  return res;
}

namespace {
std::array<uint16_t, kCanonMaxN> to_rows(const Graph& g) {
  if (g.order() > kCanonMaxN) throw std::invalid_argument("canon16: order out of range");
  std::array<uint16_t, kCanonMaxN> rows{};
  for (auto [u, v] : g.edge_list()) {
    rows[u] |= static_cast<uint16_t>(1u << v);
    rows[v] |= static_cast<uint16_t>(1u << u);
  }
  return rows;
}
}  // namespace

CanonResult canon16(const Graph& g) {
  auto rows = to_rows(g);
  return canon16(rows.data(), g.order());
}

Code128 canon_code(const Graph& g) { return canon16(g).code; }

std::string canonical_graph6(const Graph& g) {
  CanonResult c = canon16(g);
  // position of each original vertex in the canonical order
  std::array<int, kCanonMaxN> pos{};
  for (int i = 0; i < c.n; ++i) pos[c.order[i]] = i;
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edge_list()) edges.emplace_back(pos[u], pos[v]);
  return graph6_encode(Graph(g.order(), edges));
}

}  // namespace conex
