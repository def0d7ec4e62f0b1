#include "conex/tree.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace conex {

Tree::Tree(Graph g) : g_(std::move(g)) {
  if (g_.order() < 1) throw std::invalid_argument("tree must have at least one vertex");
  if (g_.edge_count() != g_.order() - 1 || !g_.is_connected())
    throw std::invalid_argument("graph is not a tree");
}

Bitset edge_side(const Graph& g, int u, int v) {
  Bitset side(g.order());
  side.set(u);
  std::vector<int> stack{u};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    g.row(x).for_each([&](int y) {
      if ((x == u && y == v) || (x == v && y == u)) return;
      if (!side.test(y)) {
        side.set(y);
        stack.push_back(y);
      }
    });
  }
  return side;
}

std::vector<int> barycenter(const Tree& t) {
  const Graph& g = t.graph();
  int n = g.order();
  Bitset ok(n);
  for (int v = 0; v < n; ++v) ok.set(v);
  for (auto [u, v] : g.edge_list()) {
    Bitset side = edge_side(g, u, v);
    int s = side.count();
    if (2 * s > n) {
      ok &= side;  // only the u-side is maximum
    } else if (2 * s < n) {
      ok.subtract(side);
    }
    // equal halves: both components are maximum, no vertex is excluded
  }
  std::vector<int> out;
  ok.for_each([&](int v) { out.push_back(v); });
  return out;
}

Tree broom(int k, int d) {
  if (d < 1 || k < d + 1) throw std::invalid_argument("broom requires k >= d+1 >= 2");
  if (k > d + 1 && d < 2)
    throw std::invalid_argument("broom with k > d+1 requires d >= 2");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < d; ++v) edges.emplace_back(v, v + 1);
  for (int v = d; v < k; ++v) edges.emplace_back(d - 1, v);
  return Tree(Graph(k, edges));
}

std::optional<SpiderShape> as_spider(const Tree& t) {
  const Graph& g = t.graph();
  int n = g.order();
  std::vector<int> big;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) >= 3) big.push_back(v);
  if (big.size() > 1) return std::nullopt;

  SpiderShape s;
  if (!big.empty()) {
    s.center = big[0];
  } else if (n == 1) {
    s.center = 0;
    return s;
  } else {
    // a path: lowest-index endpoint is the center
    s.center = -1;
    for (int v = 0; v < n; ++v)
      if (g.degree(v) <= 1) {
        s.center = v;
        break;
      }
  }
  std::vector<int> nbrs = g.neighbors(s.center);
  for (int first : nbrs) {
    int prev = s.center, cur = first, len = 1;
    while (g.degree(cur) == 2) {
      int next = -1;
      g.row(cur).for_each([&](int y) {
        if (y != prev) next = y;
      });
      prev = cur;
      cur = next;
      ++len;
    }
    s.legs.push_back(len);
  }
  std::sort(s.legs.begin(), s.legs.end());
  return s;
}

Tree binary_tree(int r) {
  if (r < 1 || r > 10) throw std::invalid_argument("binary_tree requires 1 <= r <= 10");
  int n = (1 << (2 * r)) - 1;
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; 2 * v + 1 < n; ++v) {
    edges.emplace_back(v, 2 * v + 1);
    if (2 * v + 2 < n) edges.emplace_back(v, 2 * v + 2);
  }
  return Tree(Graph(n, edges));
}

int max_bare_path(const Tree& t) {
  const Graph& g = t.graph();
  int n = g.order();
  if (n < 2) throw std::invalid_argument("max_bare_path requires order >= 2");
  // Every bare path lies inside a maximal chain between two vertices of
  // degree != 2; walk each chain once from each end.
  int best = 0;
  for (int a = 0; a < n; ++a) {
    if (g.degree(a) == 2) continue;
    for (int first : g.neighbors(a)) {
      int prev = a, cur = first, len = 1;
      while (g.degree(cur) == 2) {
        int next = -1;
        g.row(cur).for_each([&](int y) {
          if (y != prev) next = y;
        });
        prev = cur;
        cur = next;
        ++len;
      }
      best = std::max(best, len);
    }
  }
  return best;
}

namespace {

std::string certify_rooted(const Graph& g, int root, int parent) {
  std::vector<std::string> kids;
  g.row(root).for_each([&](int c) {
    if (c != parent) kids.push_back(certify_rooted(g, c, root));
  });
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (const auto& k : kids) out += k;
  out += ")";
  return out;
}

std::vector<int> tree_centers(const Graph& g) {
  int n = g.order();
  if (n == 1) return {0};
  std::vector<int> deg(n), order;
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<int> layer;
  std::vector<char> removed(n, 0);
  for (int v = 0; v < n; ++v)
    if (deg[v] <= 1) layer.push_back(v);
  int remaining = n;
  while (remaining > 2) {
    std::vector<int> next;
    for (int v : layer) {
      removed[v] = 1;
      --remaining;
      g.row(v).for_each([&](int u) {
        if (!removed[u] && --deg[u] == 1) next.push_back(u);
      });
    }
    layer = std::move(next);
  }
  std::vector<int> centers;
  for (int v = 0; v < n; ++v)
    if (!removed[v]) centers.push_back(v);
  return centers;
}

}  // namespace

std::string tree_certificate(const Graph& g) {
  std::vector<int> centers = tree_centers(g);
  if (centers.size() == 1) return "1" + certify_rooted(g, centers[0], -1);
  std::string a = certify_rooted(g, centers[0], centers[1]);
  std::string b = certify_rooted(g, centers[1], centers[0]);
  if (b < a) std::swap(a, b);
  return "2" + a + b;
}

std::vector<Tree> enumerate_trees(int k) {
  if (k < 1 || k > 14) throw std::invalid_argument("enumerate_trees supports 1 <= k <= 14");
  std::vector<Graph> level{Graph(1)};
  for (int m = 2; m <= k; ++m) {
    std::vector<Graph> next;
    std::set<std::string> seen;
    for (const Graph& t : level) {
      for (int v = 0; v < m - 1; ++v) {
        auto edges = t.edge_list();
        edges.emplace_back(v, m - 1);
        Graph cand(m, edges);
        if (seen.insert(tree_certificate(cand)).second) next.push_back(std::move(cand));
      }
    }
    level = std::move(next);
  }
  std::vector<Tree> out;
  out.reserve(level.size());
  for (Graph& g : level) out.push_back(Tree(std::move(g)));
  return out;
}

int tree_diameter(const Tree& t) {
  const Graph& g = t.graph();
  int n = g.order();
  auto farthest = [&](int s) {
    std::vector<int> dist(n, -1);
    std::vector<int> queue{s};
    dist[s] = 0;
    for (size_t i = 0; i < queue.size(); ++i) {
      int v = queue[i];
      g.row(v).for_each([&](int u) {
        if (dist[u] < 0) {
          dist[u] = dist[v] + 1;
          queue.push_back(u);
        }
      });
    }
    int best = s;
    for (int v = 0; v < n; ++v)
      if (dist[v] > dist[best]) best = v;
    return std::make_pair(best, dist[best]);
  };
  auto [a, d0] = farthest(0);
  auto [b, d] = farthest(a);
  (void)b;
  (void)d0;
  return d;
}

}  // namespace conex
