#include "conex/embedding.hpp"

#include <algorithm>
#include <stdexcept>

namespace conex {

bool embedding_valid(const Graph& host, const Tree& pattern, const EmbeddingMap& m) {
  int k = pattern.order();
  if (static_cast<int>(m.map.size()) != k) return false;
  std::vector<char> used(host.order(), 0);
  for (int v : m.map) {
    if (v < 0 || v >= host.order() || used[v]) return false;
    used[v] = 1;
  }
  for (auto [u, v] : pattern.graph().edge_list())
    if (!host.has_edge(m.map[u], m.map[v])) return false;
  return true;
}

namespace {

struct PatternOrder {
  std::vector<int> verts;    // pattern vertices in placement order
  std::vector<int> parent;   // index into verts of the parent slot, -1 for root
  std::vector<int> children; // child count per slot
  std::vector<int> degree;   // pattern degree per slot
};

PatternOrder prepare_pattern(const Tree& pattern) {
  const Graph& g = pattern.graph();
  int k = g.order();
  int root = barycenter(pattern).front();

  // subtree sizes for child ordering
  std::vector<int> size(k, 1), par(k, -1), dfs;
  dfs.push_back(root);
  std::vector<int> order;
  while (!dfs.empty()) {
    int v = dfs.back();
    dfs.pop_back();
    order.push_back(v);
    g.row(v).for_each([&](int u) {
      if (u != par[v]) {
        par[u] = v;
        dfs.push_back(u);
      }
    });
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (par[*it] >= 0) size[par[*it]] += size[*it];

  PatternOrder po;
  std::vector<int> slot_of(k, -1);
  std::vector<int> stack{root};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    int slot = static_cast<int>(po.verts.size());
    slot_of[v] = slot;
    po.verts.push_back(v);
    po.parent.push_back(par[v] < 0 ? -1 : slot_of[par[v]]);
    po.degree.push_back(g.degree(v));
    std::vector<int> kids;
    g.row(v).for_each([&](int u) {
      if (u != par[v]) kids.push_back(u);
    });
    // larger subtrees first in placement order => pushed last
    std::sort(kids.begin(), kids.end(), [&](int a, int b) {
      if (size[a] != size[b]) return size[a] < size[b];
      return a > b;
    });
    po.children.push_back(static_cast<int>(kids.size()));
    for (int u : kids) stack.push_back(u);
  }
  return po;
}

struct Searcher {
  const Graph& host;
  const PatternOrder& po;
  uint64_t budget;
  uint64_t nodes = 0;
  Bitset used;
  std::vector<int> image;                  // slot -> host vertex
  std::vector<std::vector<int>> nbr_by_prio;  // host vertex -> neighbors, priority order

  enum class Step { found, exhausted, budget };

  Step place(int slot) {
    if (slot == static_cast<int>(po.verts.size())) return Step::found;
    int parent_image = po.parent[slot] < 0 ? -1 : image[po.parent[slot]];
    const std::vector<int>& cands =
        parent_image < 0 ? nbr_by_prio.back() : nbr_by_prio[parent_image];
    std::vector<int> failed;
    for (int h : cands) {
      if (used.test(h)) continue;
      ++nodes;
      if (budget && nodes > budget) return Step::budget;
      if (host.degree(h) < po.degree[slot]) continue;
      if (host.row(h).count_and_not(used) < po.children[slot]) continue;
      bool twin_of_failed = false;
      for (int f : failed)
        if (Bitset::twin_rows(host.row(f), host.row(h), f, h)) {
          twin_of_failed = true;
          break;
        }
      if (twin_of_failed) {
        failed.push_back(h);  // valid evidence for later candidates
        continue;
      }
      used.set(h);
      image[slot] = h;
      Step r = place(slot + 1);
      if (r != Step::exhausted) return r;
      used.reset(h);
      failed.push_back(h);
    }
    return Step::exhausted;
  }
};

}  // namespace

EmbedResult find_tree_embedding(const Graph& host, const Tree& pattern,
                                const EmbedOptions& opts) {
  EmbedResult res;
  int k = pattern.order();
  int n = host.order();
  if (k > n) return res;
  if (pattern.graph().max_degree() > host.max_degree()) return res;

  PatternOrder po = prepare_pattern(pattern);

  // host priority: descending degree, then index
  std::vector<int> prio(n);
  for (int v = 0; v < n; ++v) prio[v] = v;
  std::sort(prio.begin(), prio.end(), [&](int a, int b) {
    int da = host.degree(a), db = host.degree(b);
    if (da != db) return da > db;
    return a < b;
  });

  std::vector<int> rank(n);
  for (int i = 0; i < n; ++i) rank[prio[i]] = i;

  Searcher s{host, po, opts.max_nodes, 0, Bitset(n), std::vector<int>(k, -1), {}};
  s.nbr_by_prio.resize(static_cast<size_t>(n) + 1);
  for (int u = 0; u < n; ++u) {
    std::vector<int>& lst = s.nbr_by_prio[u];
    lst = host.neighbors(u);
    std::sort(lst.begin(), lst.end(), [&](int a, int b) { return rank[a] < rank[b]; });
  }
  s.nbr_by_prio[n] = prio;  // root candidates live at index n

  auto outcome = s.place(0);
  res.nodes = s.nodes;
  switch (outcome) {
    case Searcher::Step::found: {
      EmbeddingMap m;
      m.map.assign(k, -1);
      for (size_t slot = 0; slot < po.verts.size(); ++slot)
        m.map[po.verts[slot]] = s.image[slot];
      if (!embedding_valid(host, pattern, m))
        throw std::logic_error("embedding search produced an invalid witness");
      res.outcome = SearchOutcome::found;
      res.witness = std::move(m);
      break;
    }
    case Searcher::Step::exhausted:
      res.outcome = SearchOutcome::absent;
      break;
    case Searcher::Step::budget:
      res.outcome = SearchOutcome::budget_exceeded;
      break;
  }
  return res;
}

bool is_tree_free(const Graph& host, const Tree& pattern) {
  return find_tree_embedding(host, pattern).outcome == SearchOutcome::absent;
}

}  // namespace conex
