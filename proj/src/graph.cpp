#include "conex/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace conex {

namespace {
constexpr int kMaxOrder = 1'000'000;

void check_order(int n) {
  if (n < 0) throw std::invalid_argument("graph order must be nonnegative");
  if (n > kMaxOrder) throw std::invalid_argument("graph order exceeds 10^6");
}
}  // namespace

Graph::Graph(int n) : n_(n) {
  check_order(n);
  adj_.assign(n_, Bitset(n_));
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw std::invalid_argument("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("loops are not allowed");
  if (adj_[u].test(v)) return;  // edge sets collapse duplicates
  adj_[u].set(v);
  adj_[v].set(u);
  ++m_;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  adj_[v].for_each([&](int u) { out.push_back(u); });
  return out;
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<size_t>(m_));
  for (int u = 0; u < n_; ++u)
    for (int v = adj_[u].find_next(u); v >= 0; v = adj_[u].find_next(v))
      out.emplace_back(u, v);
  return out;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> d(n_);
  for (int v = 0; v < n_; ++v) d[v] = degree(v);
  std::sort(d.rbegin(), d.rend());
  return d;
}

bool Graph::is_connected() const {
  if (n_ == 0) throw std::invalid_argument("is_connected: empty graph");
  Bitset seen(n_);
  std::vector<int> stack{0};
  seen.set(0);
  int cnt = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    adj_[v].for_each([&](int u) {
      if (!seen.test(u)) {
        seen.set(u);
        ++cnt;
        stack.push_back(u);
      }
    });
  }
  return cnt == n_;
}

std::vector<std::vector<int>> Graph::blocks() const {
  if (n_ == 0) throw std::invalid_argument("blocks: empty graph");
  if (!is_connected()) throw std::invalid_argument("blocks: graph must be connected");

  std::vector<int> disc(n_, 0), low(n_, 0);
  std::vector<std::pair<int, int>> estack;
  std::vector<std::vector<int>> out;
  struct Frame {
    int v, parent, cursor;
  };
  std::vector<Frame> st;
  int timer = 0;

  st.push_back({0, -1, -1});
  disc[0] = low[0] = ++timer;
  while (!st.empty()) {
    Frame& f = st.back();
    int w = adj_[f.v].find_next(f.cursor);
    if (w < 0) {
      int v = f.v, parent = f.parent;
      st.pop_back();
      if (parent < 0) continue;
      low[parent] = std::min(low[parent], low[v]);
      if (low[v] >= disc[parent]) {
        std::vector<int> verts;
        while (!estack.empty()) {
          auto [x, y] = estack.back();
          estack.pop_back();
          verts.push_back(x);
          verts.push_back(y);
          if (x == parent && y == v) break;
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        out.push_back(std::move(verts));
      }
      continue;
    }
    f.cursor = w;
    if (w == f.parent) continue;
    int v = f.v;
    if (disc[w] == 0) {
      estack.emplace_back(v, w);
      disc[w] = low[w] = ++timer;
      st.push_back({w, v, -1});
    } else if (disc[w] < disc[v]) {
      estack.emplace_back(v, w);
      low[v] = std::min(low[v], disc[w]);
    }
  }

  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  return out;
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> Graph::bipartition() const {
  std::vector<int> color(n_, -1);
  std::vector<int> queue;
  for (int s = 0; s < n_; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    queue.assign(1, s);
    while (!queue.empty()) {
      int v = queue.back();
      queue.pop_back();
      bool ok = true;
      adj_[v].for_each([&](int u) {
        if (color[u] < 0) {
          color[u] = 1 - color[v];
          queue.push_back(u);
        } else if (color[u] == color[v]) {
          ok = false;
        }
      });
      if (!ok) return std::nullopt;
    }
  }
  std::pair<std::vector<int>, std::vector<int>> classes;
  for (int v = 0; v < n_; ++v) (color[v] == 0 ? classes.first : classes.second).push_back(v);
  return classes;
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph Graph::empty_graph(int n) { return Graph(n); }

Graph Graph::path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph Graph::cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph Graph::star(int n) {
  if (n < 1) throw std::invalid_argument("star needs n >= 1");
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(0, v);
  return g;
}

bool operator==(const Graph& a, const Graph& b) {
  return a.n_ == b.n_ && a.adj_ == b.adj_;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.n_ + b.n_);
  for (auto [u, v] : a.edge_list()) g.add_edge(u, v);
  for (auto [u, v] : b.edge_list()) g.add_edge(a.n_ + u, a.n_ + v);
  return g;
}

Graph join(const Graph& a, const Graph& b) {
  Graph g = disjoint_union(a, b);
  for (int u = 0; u < a.n_; ++u)
    for (int v = 0; v < b.n_; ++v) g.add_edge(u, a.n_ + v);
  return g;
}

std::vector<std::vector<int>> components(const Graph& g) {
  int n = g.order();
  std::vector<std::vector<int>> out;
  Bitset seen(n);
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (seen.test(s)) continue;
    std::vector<int> comp{s};
    seen.set(s);
    stack.assign(1, s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      g.row(v).for_each([&](int u) {
        if (!seen.test(u)) {
          seen.set(u);
          comp.push_back(u);
          stack.push_back(u);
        }
      });
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace conex
