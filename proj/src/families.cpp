#include "conex/families.hpp"

#include <stdexcept>

#include "conex/tree.hpp"

namespace conex {

namespace {

long long binom2(long long x) { return x < 2 ? 0 : x * (x - 1) / 2; }

void add_clique(std::vector<std::pair<int, int>>& edges, const std::vector<int>& verts) {
  for (size_t i = 0; i < verts.size(); ++i)
    for (size_t j = i + 1; j < verts.size(); ++j) edges.emplace_back(verts[i], verts[j]);
}

}  // namespace

Graph g_family(int n, int k, int s) {
  if (!(n >= k && k >= 2 * s && s >= 1))
    throw std::invalid_argument("g_family requires n >= k >= 2s >= 2");
  return join(disjoint_union(Graph::complete(k - 2 * s), Graph::empty_graph(n - k + s)),
              Graph::complete(s));
}

long long g_family_edges(long long n, long long k, long long s) {
  if (!(n >= k && k >= 2 * s && s >= 1))
    throw std::invalid_argument("g_family requires n >= k >= 2s >= 2");
  return binom2(k - 2 * s) + binom2(s) + s * (n - s);
}

long long a_x(int k, int x) {
  if (k < 2) throw std::invalid_argument("a_x requires k >= 2");
  if (x == (k - 2) / 2) return x;
  if (2 * x > k && x < k) return (2LL * x * x) / k - 2;
  throw std::invalid_argument("a_x: x matches neither branch");
}

Graph s_family(int n, int x, int a) {
  if (!(a >= x && x >= 2)) throw std::invalid_argument("s_family requires a >= x >= 2");
  if (n < a + 1) throw std::invalid_argument("s_family requires n >= a+1");
  int m = (n - 1) / a;
  int leftover = (n - 1) - a * m;
  int w = n - 1;
  std::vector<std::pair<int, int>> edges;
  for (int c = 0; c < m; ++c) {
    int base = c * a;
    std::vector<int> clique;
    for (int i = 0; i < x; ++i) clique.push_back(base + i);
    add_clique(edges, clique);
    for (int i = x; i < a; ++i) edges.emplace_back(base + i - 1, base + i);
    edges.emplace_back(base + a - 1, w);  // free end of the pendant path
  }
  if (leftover > 0) {
    int base = m * a;
    for (int i = 1; i < leftover; ++i) edges.emplace_back(base + i - 1, base + i);
    edges.emplace_back(base + leftover - 1, w);
  }
  return Graph(n, edges);
}

long long s_family_edges(long long n, long long x, long long a) {
  if (!(a >= x && x >= 2 && n >= a + 1)) throw std::invalid_argument("s_family_edges: bad range");
  long long m = (n - 1) / a;
  long long leftover = (n - 1) - a * m;
  return m * (binom2(x) + (a - x)) + (leftover > 0 ? leftover - 1 : 0) + m +
         (leftover > 0 ? 1 : 0);
}

Graph p_family(int n, int x, int a) {
  if (!(a >= x && x >= 2)) throw std::invalid_argument("p_family requires a >= x >= 2");
  if (n < a + 1) throw std::invalid_argument("p_family requires n >= a+1");
  int m = n / (a + 1);
  int leftover = n - (a + 1) * m;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> spine;  // w_0 (optional), w_1, ..., w_m
  if (leftover > 0) {
    int base = m * (a + 1);
    for (int i = 1; i < leftover; ++i) edges.emplace_back(base + i - 1, base + i);
    spine.push_back(base + leftover - 1);  // w_0
  }
  for (int c = 0; c < m; ++c) {
    int base = c * (a + 1);
    std::vector<int> clique;
    for (int i = 0; i < x; ++i) clique.push_back(base + i);
    add_clique(edges, clique);
    for (int i = x; i <= a; ++i) edges.emplace_back(base + i - 1, base + i);
    spine.push_back(base + a);  // w_{c+1}
  }
  for (size_t i = 1; i < spine.size(); ++i) edges.emplace_back(spine[i - 1], spine[i]);
  return Graph(n, edges);
}

long long p_family_edges(long long n, long long x, long long a) {
  if (!(a >= x && x >= 2 && n >= a + 1)) throw std::invalid_argument("p_family_edges: bad range");
  long long m = n / (a + 1);
  long long leftover = n - (a + 1) * m;
  long long within = m * (binom2(x) + (a - x + 1));
  long long spine = leftover > 0 ? (leftover - 1) + m : m - 1;
  return within + spine;
}

Graph f1(int n, int d) {
  if (!(n >= d && d >= 3)) throw std::invalid_argument("f1 requires n >= d >= 3");
  int p = (n - 1) / (d - 2), q = (n - 1) % (d - 2);
  std::vector<std::pair<int, int>> edges;
  int next = 1;
  for (int b = 0; b < p; ++b) {
    std::vector<int> blk{0};
    for (int i = 0; i < d - 2; ++i) blk.push_back(next++);
    add_clique(edges, blk);
  }
  if (q > 0) {
    std::vector<int> blk{0};
    for (int i = 0; i < q; ++i) blk.push_back(next++);
    add_clique(edges, blk);
  }
  return Graph(n, edges);
}

long long f1_edges(long long n, long long d) {
  if (!(n >= d && d >= 3)) throw std::invalid_argument("f1_edges: bad range");
  long long p = (n - 1) / (d - 2), q = (n - 1) % (d - 2);
  return p * binom2(d - 1) + binom2(q + 1);
}

Graph f2(int n, int d) {
  if (!(n >= d && d >= 4)) throw std::invalid_argument("f2 requires n >= d >= 4");
  int p = (n - 2) / (d - 3), q = (n - 2) % (d - 3);
  std::vector<std::pair<int, int>> edges;
  int next = 1;
  {
    std::vector<int> blk{0};
    for (int i = 0; i < d - 2; ++i) blk.push_back(next++);
    add_clique(edges, blk);
  }
  for (int b = 1; b < p; ++b) {
    std::vector<int> blk{0};
    for (int i = 0; i < d - 3; ++i) blk.push_back(next++);
    add_clique(edges, blk);
  }
  if (q > 0) {
    std::vector<int> blk{0};
    for (int i = 0; i < q; ++i) blk.push_back(next++);
    add_clique(edges, blk);
  }
  return Graph(n, edges);
}

long long f2_edges(long long n, long long d) {
  if (!(n >= d && d >= 4)) throw std::invalid_argument("f2_edges: bad range");
  long long p = (n - 2) / (d - 3), q = (n - 2) % (d - 3);
  return p * binom2(d - 2) + (d - 2) + binom2(q + 1);
}

namespace {
// K_{d-1} on {0} + d-2 fresh vertices, minus a perfect matching on the
// non-cut vertices (paired consecutively).
void add_matched_block(std::vector<std::pair<int, int>>& edges, int& next, int d) {
  std::vector<int> blk{0};
  for (int i = 0; i < d - 2; ++i) blk.push_back(next++);
  for (size_t i = 0; i < blk.size(); ++i)
    for (size_t j = i + 1; j < blk.size(); ++j) {
      if (i >= 1 && j == i + 1 && i % 2 == 1) continue;  // matched pair
      edges.emplace_back(blk[i], blk[j]);
    }
}
}  // namespace

Graph f3(int n, int d) {
  if (d % 2 != 0) throw std::invalid_argument("f3 requires even d");
  if (!(d >= 4 && n >= d - 1)) throw std::invalid_argument("f3 requires d >= 4, n >= d-1");
  int p = (n - 1) / (d - 3), q = (n - 1) % (d - 3);
  std::vector<std::pair<int, int>> edges;
  int next = 1;
  if (p >= q) {
    for (int b = 0; b < p - q; ++b) {
      std::vector<int> blk{0};
      for (int i = 0; i < d - 3; ++i) blk.push_back(next++);
      add_clique(edges, blk);
    }
    for (int b = 0; b < q; ++b) add_matched_block(edges, next, d);
  } else {
    for (int b = 0; b < p; ++b) add_matched_block(edges, next, d);
    std::vector<int> blk{0};
    for (int i = 0; i < q - p; ++i) blk.push_back(next++);
    add_clique(edges, blk);
  }
  return Graph(n, edges);
}

long long f3_edges(long long n, long long d) {
  if (d % 2 != 0) throw std::invalid_argument("f3_edges requires even d");
  if (!(d >= 4 && n >= d - 1)) throw std::invalid_argument("f3_edges: bad range");
  long long p = (n - 1) / (d - 3), q = (n - 1) % (d - 3);
  if (p >= q) return (d - 2) * (n - 1) / 2;
  return p * (d - 2) * (d - 2) / 2 + binom2(q - p + 1);
}

Graph almost_regular(int n, int r) {
  if (!(n > r && r >= 1)) throw std::invalid_argument("almost_regular requires n > r >= 1");
  if (r == 1 && n > 2)
    throw std::invalid_argument("almost_regular: no connected 1-regular graph on n > 2");
  std::vector<std::pair<int, int>> edges;
  for (int off = 1; off <= r / 2; ++off)
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + off) % n);
  if (r % 2 == 1) {
    if (n % 2 == 0) {
      for (int v = 0; v < n / 2; ++v) edges.emplace_back(v, v + n / 2);
    } else {
      // near-antipodal matching; vertex n-1 stays at degree r-1
      int h = (n - 1) / 2;
      for (int v = 0; v + h < n - 1; ++v) edges.emplace_back(v, v + h);
    }
  }
  return Graph(n, edges);
}

long long almost_regular_edges(long long n, long long r) { return r * n / 2; }

Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("complete_bipartite requires a, b >= 1");
  return join(Graph::empty_graph(a), Graph::empty_graph(b));
}

Graph union_cliques(int n, int k) {
  if (k < 2 || n < 1) throw std::invalid_argument("union_cliques requires k >= 2, n >= 1");
  if (n % (k - 1) != 0) throw std::invalid_argument("union_cliques requires (k-1) | n");
  std::vector<std::pair<int, int>> edges;
  for (int base = 0; base < n; base += k - 1) {
    std::vector<int> blk;
    for (int i = 0; i < k - 1; ++i) blk.push_back(base + i);
    add_clique(edges, blk);
  }
  return Graph(n, edges);
}

long long union_cliques_edges(long long n, long long k) {
  if (k < 2 || n % (k - 1) != 0) throw std::invalid_argument("union_cliques_edges: bad range");
  return n * (k - 2) / 2;
}

Graph make_family(const FamilyParams& p) {
  auto need = [&](const std::optional<long long>& v, const char* name) -> int {
    if (!v) throw std::invalid_argument(std::string("missing parameter --") + name);
    return static_cast<int>(*v);
  };
  const std::string& f = p.family;
  if (f == "g") return g_family(need(p.n, "n"), need(p.k, "k"), need(p.s, "s"));
  if (f == "s" || f == "p") {
    int x = need(p.x, "x");
    int a = p.a ? static_cast<int>(*p.a) : static_cast<int>(a_x(need(p.k, "k"), x));
    return f == "s" ? s_family(need(p.n, "n"), x, a) : p_family(need(p.n, "n"), x, a);
  }
  if (f == "f1") return f1(need(p.n, "n"), need(p.d, "d"));
  if (f == "f2") return f2(need(p.n, "n"), need(p.d, "d"));
  if (f == "f3") return f3(need(p.n, "n"), need(p.d, "d"));
  if (f == "almost-regular") return almost_regular(need(p.n, "n"), need(p.r, "r"));
  if (f == "complete-bipartite") return complete_bipartite(need(p.a, "a"), need(p.b, "b"));
  if (f == "union-cliques") return union_cliques(need(p.n, "n"), need(p.k, "k"));
  if (f == "broom") return broom(need(p.k, "k"), need(p.d, "d")).graph();
  if (f == "binary-tree") return binary_tree(need(p.r, "r")).graph();
  if (f == "path") return Graph::path(need(p.n, "n"));
  if (f == "complete") return Graph::complete(need(p.n, "n"));
  throw std::invalid_argument("unknown family: " + f);
}

}  // namespace conex
