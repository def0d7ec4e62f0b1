#include "conex/verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "conex/cycles.hpp"
#include "conex/embedding.hpp"
#include "conex/enumerate.hpp"
#include "conex/families.hpp"
#include "conex/formulas.hpp"
#include "conex/graph6.hpp"
#include "conex/oracle.hpp"
#include "conex/tree.hpp"

namespace conex {

using json = nlohmann::ordered_json;

void SuiteReport::fail(const std::string& note, const std::string& cx) {
  pass = false;
  notes.push_back(note);
  if (!counterexample && !cx.empty()) counterexample = cx;
}

json SuiteReport::to_json() const {
  json j;
  j["suite"] = suite;
  j["params"] = params;
  j["status"] = pass ? "pass" : "fail";
  if (counterexample) j["counterexample"] = *counterexample;
  j["table"] = table;
  j["notes"] = notes;
  return j;
}

namespace {

long long binom2(long long x) { return x < 2 ? 0 : x * (x - 1) / 2; }

std::vector<Graph> collect_graphs(int n, bool connected_only) {
  std::vector<Graph> out;
  for_each_graph(n, connected_only,
                 [&](const SmallGraph& g, const CanonResult&) { out.push_back(to_graph(g)); });
  return out;
}

}  // namespace

SuiteReport verify_eq1(int max_n) {
  SuiteReport rep;
  rep.suite = "eq1";
  rep.params["max_n"] = max_n;
  for (int n = 4; n <= max_n; ++n) {
    std::vector<Graph> hosts = collect_graphs(n, /*connected_only=*/true);
    for (int k = 4; k <= n; ++k) {
      Tree pk(Graph::path(k));
      long long best = -1;
      std::string witness;
      for (const Graph& g : hosts) {
        if (g.edge_count() <= best) continue;
        if (is_tree_free(g, pk)) {
          best = g.edge_count();
          witness = graph6_encode(g);
        }
      }
      long long formula = kopylov_ex_c_path(n, k);
      json row;
      row["n"] = n;
      row["k"] = k;
      row["oracle"] = best;
      row["formula"] = formula;
      rep.table.push_back(row);
      if (best != formula)
        rep.fail("ex_c(" + std::to_string(n) + ",P_" + std::to_string(k) + ") oracle " +
                     std::to_string(best) + " != formula " + std::to_string(formula),
                 witness);
    }
  }
  return rep;
}

SuiteReport verify_thm2_2(int max_n) {
  SuiteReport rep;
  rep.suite = "thm2.2";
  rep.params["max_n"] = max_n;
  for (int n = 3; n <= max_n; ++n) {
    std::vector<Graph> hosts = collect_graphs(n, /*connected_only=*/false);
    std::vector<int> circ(hosts.size());
    for (size_t i = 0; i < hosts.size(); ++i) circ[i] = circumference(hosts[i]);
    for (int k = 3; k <= n; ++k) {
      long long best = -1;
      std::string witness;
      for (size_t i = 0; i < hosts.size(); ++i) {
        if (circ[i] >= k || hosts[i].edge_count() <= best) continue;
        best = hosts[i].edge_count();
        witness = graph6_encode(hosts[i]);
      }
      long long formula = woodall_ex_long_cycle(n, k);
      long long constructed = f1(n, k).edge_count();
      json row;
      row["n"] = n;
      row["k"] = k;
      row["oracle"] = best;
      row["formula"] = formula;
      row["f1_edges"] = constructed;
      rep.table.push_back(row);
      if (best != formula)
        rep.fail("ex(" + std::to_string(n) + ",C>=" + std::to_string(k) + ") oracle " +
                     std::to_string(best) + " != formula " + std::to_string(formula),
                 witness);
      if (constructed != formula)
        rep.fail("f1(" + std::to_string(n) + "," + std::to_string(k) +
                 ") does not attain the formula");
    }
  }
  return rep;
}

SuiteReport verify_thm2_3_lb(int max_n, int circ_max_n) {
  SuiteReport rep;
  rep.suite = "thm2.3-lb";
  rep.params["max_n"] = max_n;
  rep.params["circumference_max_n"] = circ_max_n;
  for (int k = 5; k <= max_n; ++k) {
    for (int n = k; n <= max_n; ++n) {
      long long bound = two_connected_bound(n, k);
      Graph g2 = g_family(n, k, 2);
      Graph gs = g_family(n, k, (k - 1) / 2);
      long long attained = std::max(g2.edge_count(), gs.edge_count());
      if (bound != attained)
        rep.fail("two_connected_bound(" + std::to_string(n) + "," + std::to_string(k) +
                 ") = " + std::to_string(bound) + " but constructions give " +
                 std::to_string(attained));
      for (const Graph* g : {&g2, &gs}) {
        if (g->blocks().size() != 1)
          rep.fail("g_family host is not 2-connected at n=" + std::to_string(n) +
                       " k=" + std::to_string(k),
                   graph6_encode(*g));
        if (n <= circ_max_n && has_cycle_at_least(*g, k))
          rep.fail("g_family host has a cycle of length >= " + std::to_string(k),
                   graph6_encode(*g));
      }
    }
    json row;
    row["k"] = k;
    row["n_max"] = max_n;
    row["ok"] = rep.pass;
    rep.table.push_back(row);
  }
  return rep;
}

SuiteReport verify_thm1_3_lower(int max_k, int max_n) {
  SuiteReport rep;
  rep.suite = "thm1.3-lower";
  rep.params["max_k"] = max_k;
  rep.params["max_n"] = max_n;
  for (int d = 6; d + 2 <= max_k; ++d) {
    for (int k = d + 2; k <= max_k; ++k) {
      Tree b = broom(k, d);
      long long checked = 0;
      auto expect_free = [&](const Graph& host, const std::string& label) {
        ++checked;
        if (!is_tree_free(host, b))
          rep.fail("B(" + std::to_string(k) + "," + std::to_string(d) + ") embeds into " + label,
                   graph6_encode(host));
      };
      for (int n = d; n <= max_n; ++n)
        expect_free(g_family(n, d, (d - 1) / 2), "g_family(" + std::to_string(n) + ")");
      for (int n = k - d + 1; n <= max_n; ++n)
        expect_free(almost_regular(n, k - d), "almost_regular(" + std::to_string(n) + ")");
      std::vector<std::string> families{"g", "almost-regular"};
      if (2 * d == k + 2 || 2 * d == k + 4) {
        int dd = (k + 2) / 2;
        for (int n = dd; n <= max_n; ++n)
          expect_free(f1(n, dd), "f1(" + std::to_string(n) + "," + std::to_string(dd) + ")");
        families.push_back("f1");
      }
      if (2 * d == k + 3) {
        for (int n = d; n <= max_n; ++n)
          expect_free(f2(n, d), "f2(" + std::to_string(n) + ")");
        families.push_back("f2");
        if (d % 2 == 0) {
          for (int n = d - 1; n <= max_n; ++n)
            expect_free(f3(n, d), "f3(" + std::to_string(n) + ")");
          families.push_back("f3");
        }
      }
      json row;
      row["k"] = k;
      row["d"] = d;
      row["families"] = families;
      row["hosts_checked"] = checked;
      rep.table.push_back(row);
    }
  }
  return rep;
}

SuiteReport verify_thm1_2(int max_k, int max_n) {
  SuiteReport rep;
  rep.suite = "thm1.2";
  rep.params["max_k"] = max_k;
  rep.params["max_n"] = max_n;
  for (int k = 2; k <= max_k; ++k) {
    int x = (k - 2) / 2;
    if (x < 2) {
      json row;
      row["k"] = k;
      row["applicable"] = false;
      rep.table.push_back(row);
      continue;
    }
    long long a = a_x(k, x);
    std::vector<Tree> trees = enumerate_trees(k);
    std::vector<const Tree*> deg2, deg4;
    for (const Tree& t : trees) {
      bool has2 = false, has4 = false;
      for (int v : barycenter(t)) {
        int dv = t.graph().degree(v);
        if (dv == 2) has2 = true;
        if (dv >= 4) has4 = true;
      }
      if (has2) deg2.push_back(&t);
      if (has4) deg4.push_back(&t);
    }
    long long checked = 0;
    for (int n = k; n <= max_n; ++n) {
      Graph s_host = s_family(n, x, static_cast<int>(a));
      Graph p_host = p_family(n, x, static_cast<int>(a));
      for (const Tree* t : deg2) {
        ++checked;
        if (!is_tree_free(s_host, *t))
          rep.fail("degree-2 barycenter tree embeds into s_family(n=" + std::to_string(n) +
                       ", k=" + std::to_string(k) + ")",
                   graph6_encode(t->graph()));
      }
      for (const Tree* t : deg4) {
        ++checked;
        if (!is_tree_free(p_host, *t))
          rep.fail("degree->=4 barycenter tree embeds into p_family(n=" + std::to_string(n) +
                       ", k=" + std::to_string(k) + ")",
                   graph6_encode(t->graph()));
      }
    }
    json row;
    row["k"] = k;
    row["applicable"] = true;
    row["trees"] = trees.size();
    row["deg2_trees"] = deg2.size();
    row["deg4_trees"] = deg4.size();
    row["checks"] = checked;
    rep.table.push_back(row);
  }
  return rep;
}

namespace {

// Largest total size of two vertex-disjoint spider subtrees whose center
// degree (within the subtree) is at most 3. Subset DP over bit masks.
int max_disjoint_spider_pair(const Graph& g) {
  int k = g.order();
  std::vector<uint16_t> adj(k, 0);
  for (auto [u, v] : g.edge_list()) {
    adj[u] |= static_cast<uint16_t>(1u << v);
    adj[v] |= static_cast<uint16_t>(1u << u);
  }
  int full = (1 << k) - 1;
  auto is_spider = [&](int mask) {
    // connected?
    int start = std::countr_zero(static_cast<unsigned>(mask));
    int seen = 1 << start, frontier = seen;
    while (frontier) {
      int next = 0;
      for (int v = 0; v < k; ++v)
        if (frontier >> v & 1) next |= adj[v] & mask;
      frontier = next & ~seen;
      seen |= next;
    }
    if (seen != mask) return false;
    int big = 0;
    for (int v = 0; v < k; ++v) {
      if (!(mask >> v & 1)) continue;
      int deg = std::popcount(static_cast<unsigned>(adj[v] & mask));
      if (deg > 3) return false;
      if (deg == 3 && ++big > 1) return false;
    }
    return true;
  };
  std::vector<int> best(full + 1, 0);  // max spider size among submasks
  std::vector<int> spiders;
  for (int mask = 1; mask <= full; ++mask)
    if (is_spider(mask)) {
      best[mask] = std::popcount(static_cast<unsigned>(mask));
      spiders.push_back(mask);
    }
  for (int b = 0; b < k; ++b)
    for (int mask = 0; mask <= full; ++mask)
      if (mask >> b & 1) best[mask] = std::max(best[mask], best[mask ^ (1 << b)]);
  int out = 0;
  for (int m : spiders) {
    int other = best[full ^ m];
    if (other > 0) out = std::max(out, std::popcount(static_cast<unsigned>(m)) + other);
  }
  return out;
}

}  // namespace

SuiteReport verify_claim3_1(int max_k, int max_n, const std::vector<int>& c_values) {
  SuiteReport rep;
  rep.suite = "claim3.1";
  rep.params["max_k"] = max_k;
  rep.params["max_n"] = max_n;
  rep.params["c"] = c_values;
  for (int k = 2; k <= max_k; ++k) {
    std::vector<Tree> trees = enumerate_trees(k);
    long long hyp_hits = 0, bip_checks = 0, host_checks = 0;
    for (const Tree& t : trees) {
      int pair = max_disjoint_spider_pair(t.graph());
      auto classes = t.graph().bipartition();
      int min_class = static_cast<int>(
          std::min(classes->first.size(), classes->second.size()));
      for (int c : c_values) {
        if (2 * pair < k - c) continue;  // hypothesis fails
        ++hyp_hits;
        ++bip_checks;
        if (4 * min_class < (k - c) - 16)
          rep.fail("bipartition class too small for k=" + std::to_string(k) +
                       " c=" + std::to_string(c),
                   graph6_encode(t.graph()));
        long long a = (k - c) / 4 - 5;
        if (a < 1) continue;
        for (int n = k; n <= max_n; ++n) {
          if (n - a < 1) continue;
          ++host_checks;
          if (!is_tree_free(complete_bipartite(static_cast<int>(a), static_cast<int>(n - a)), t))
            rep.fail("tree embeds into K_{a,n-a} with a=" + std::to_string(a) +
                         " n=" + std::to_string(n),
                     graph6_encode(t.graph()));
        }
      }
    }
    json row;
    row["k"] = k;
    row["trees"] = trees.size();
    row["hypothesis_hits"] = hyp_hits;
    row["bipartition_checks"] = bip_checks;
    row["host_checks"] = host_checks;
    rep.table.push_back(row);
  }
  return rep;
}

SuiteReport verify_prop2_1(int max_k) {
  SuiteReport rep;
  rep.suite = "prop2.1";
  rep.params["max_k"] = max_k;
  for (int k = 1; k <= max_k; ++k) {
    std::vector<Tree> trees = enumerate_trees(k);
    long long singles = 0, pairs = 0;
    for (const Tree& t : trees) {
      std::vector<int> b = barycenter(t);
      if (b.size() == 1) {
        ++singles;
      } else if (b.size() == 2 && t.graph().has_edge(b[0], b[1])) {
        ++pairs;
      } else {
        rep.fail("barycenter set malformed at k=" + std::to_string(k),
                 graph6_encode(t.graph()));
        continue;
      }
      // every barycenter sits in a component of size >= ceil(k/2) of T-e
      for (int v : b)
        for (auto [p, q] : t.graph().edge_list()) {
          Bitset side = edge_side(t.graph(), p, q);
          int sz = side.test(v) ? side.count() : k - side.count();
          if (2 * sz < k)
            rep.fail("barycenter in a small component at k=" + std::to_string(k),
                     graph6_encode(t.graph()));
        }
    }
    json row;
    row["k"] = k;
    row["trees"] = trees.size();
    row["single_barycenter"] = singles;
    row["adjacent_pair"] = pairs;
    rep.table.push_back(row);
  }
  return rep;
}

SuiteReport verify_prop5_1(int max_n) {
  SuiteReport rep;
  rep.suite = "prop5.1";
  rep.params["max_n"] = max_n;
  long long prev = -1;
  for (int n = 3; n <= max_n; ++n) {
    ExtremalRecord r = extremal_number(n, Forbid::cycle_exact(3), /*connected_only=*/true);
    json row;
    row["n"] = n;
    row["ex_c_triangle"] = r.max_edges;
    rep.table.push_back(row);
    if (n > 3 && r.max_edges <= prev)
      rep.fail("ex_c(n, C_3) not strictly increasing at n=" + std::to_string(n));
    prev = r.max_edges;
  }
  return rep;
}

SuiteReport verify_edge_identities() {
  SuiteReport rep;
  rep.suite = "edge-identities";

  auto block_sizes = [](const Graph& g) {
    std::vector<long long> out;
    for (const auto& b : g.blocks()) out.push_back(static_cast<long long>(b.size()));
    std::sort(out.rbegin(), out.rend());
    return out;
  };

  long long f_checked = 0;
  for (int d = 4; d <= 10; ++d) {
    for (int n = d + 1; n <= 60; ++n) {
      {
        Graph g = f1(n, d);
        long long p = (n - 1) / (d - 2), q = (n - 1) % (d - 2);
        long long e1 = p * binom2(d - 1) + binom2(q + 1);
        long long twice2 = (d - 1) * (static_cast<long long>(n) - 1) - q * (d - 2 - q);
        if (g.edge_count() != e1 || 2 * e1 != twice2)
          rep.fail("f1 edge identity fails at n=" + std::to_string(n) + " d=" + std::to_string(d),
                   graph6_encode(g));
        std::vector<long long> want(p, d - 1);
        if (q > 0) want.push_back(q + 1);
        std::sort(want.rbegin(), want.rend());
        if (block_sizes(g) != want)
          rep.fail("f1 block sizes differ at n=" + std::to_string(n) + " d=" + std::to_string(d));
        ++f_checked;
      }
      {
        Graph g = f2(n, d);
        long long p = (n - 2) / (d - 3), q = (n - 2) % (d - 3);
        long long e1 = p * binom2(d - 2) + (d - 2) + binom2(q + 1);
        long long twice2 = (d - 2) * static_cast<long long>(n) - q * (d - 3 - q);
        if (g.edge_count() != e1 || 2 * e1 != twice2)
          rep.fail("f2 edge identity fails at n=" + std::to_string(n) + " d=" + std::to_string(d),
                   graph6_encode(g));
        std::vector<long long> want{d - 1};
        for (long long i = 1; i < p; ++i) want.push_back(d - 2);
        if (q > 0) want.push_back(q + 1);
        std::sort(want.rbegin(), want.rend());
        if (block_sizes(g) != want)
          rep.fail("f2 block sizes differ at n=" + std::to_string(n) + " d=" + std::to_string(d));
        ++f_checked;
      }
      if (d % 2 == 0) {
        Graph g = f3(n, d);
        long long p = (n - 1) / (d - 3), q = (n - 1) % (d - 3);
        long long e1, twice2 = (d - 2) * (static_cast<long long>(n) - 1) -
                               (p >= q ? 0 : (q - p) * (d - 3 - (q - p)));
        std::vector<long long> want;
        if (p >= q) {
          e1 = (d - 2) * (static_cast<long long>(n) - 1) / 2;
          for (long long i = 0; i < p - q; ++i) want.push_back(d - 2);
          for (long long i = 0; i < q; ++i) want.push_back(d - 1);
        } else {
          e1 = p * (d - 2) * (d - 2) / 2 + binom2(q - p + 1);
          for (long long i = 0; i < p; ++i) want.push_back(d - 1);
          want.push_back(q - p + 1);
        }
        std::sort(want.rbegin(), want.rend());
        if (g.edge_count() != e1 || 2 * e1 != twice2)
          rep.fail("f3 edge identity fails at n=" + std::to_string(n) + " d=" + std::to_string(d),
                   graph6_encode(g));
        if (block_sizes(g) != want)
          rep.fail("f3 block sizes differ at n=" + std::to_string(n) + " d=" + std::to_string(d));
        ++f_checked;
      }
    }
  }
  {
    json row;
    row["family"] = "f1/f2/f3";
    row["cases"] = f_checked;
    rep.table.push_back(row);
  }

  long long g_checked = 0;
  for (int k = 2; k <= 24; ++k)
    for (int s = 1; 2 * s <= k; ++s)
      for (int n = k; n <= 200; ++n) {
        if (g_family(n, k, s).edge_count() != g_family_edges(n, k, s))
          rep.fail("g_family edge count differs at n=" + std::to_string(n) +
                   " k=" + std::to_string(k) + " s=" + std::to_string(s));
        ++g_checked;
      }
  // the floor(d-1)/2 specialization stated for the broom bound
  for (int d = 4; d <= 10; ++d)
    for (int n = d + 1; n <= 40; ++n) {
      long long want =
          ((d - 1) / 2) * (n - (d + 2) / 2) + binom2((d + 2) / 2);
      if (g_family_edges(n, d, (d - 1) / 2) != want)
        rep.fail("g_family floor((d-1)/2) form differs at n=" + std::to_string(n) +
                 " d=" + std::to_string(d));
    }
  {
    json row;
    row["family"] = "g";
    row["cases"] = g_checked;
    rep.table.push_back(row);
  }

  long long sp_checked = 0;
  for (int k = 6; k <= 24; ++k) {
    std::vector<int> xs{(k - 2) / 2};
    for (int x = k / 2 + 1; x < k; ++x) xs.push_back(x);
    for (int x : xs) {
      long long a = a_x(k, x);
      if (a < x || x < 2) continue;
      for (int n = static_cast<int>(a) + 1; n <= 200; ++n) {
        if (s_family(n, x, static_cast<int>(a)).edge_count() != s_family_edges(n, x, a))
          rep.fail("s_family edge count differs at n=" + std::to_string(n) +
                   " k=" + std::to_string(k) + " x=" + std::to_string(x));
        if (p_family(n, x, static_cast<int>(a)).edge_count() != p_family_edges(n, x, a))
          rep.fail("p_family edge count differs at n=" + std::to_string(n) +
                   " k=" + std::to_string(k) + " x=" + std::to_string(x));
        sp_checked += 2;
      }
    }
  }
  {
    json row;
    row["family"] = "s/p";
    row["cases"] = sp_checked;
    rep.table.push_back(row);
  }

  long long ar_checked = 0;
  for (int r = 2; r <= 10; ++r)
    for (int n = r + 1; n <= 60; ++n) {
      Graph g = almost_regular(n, r);
      if (g.edge_count() != almost_regular_edges(n, r) || !g.is_connected())
        rep.fail("almost_regular broken at n=" + std::to_string(n) + " r=" + std::to_string(r));
      std::vector<int> degs = g.degree_sequence();
      bool odd = (static_cast<long long>(r) * n) % 2 == 1;
      for (size_t i = 0; i < degs.size(); ++i) {
        int want = (odd && i + 1 == degs.size()) ? r - 1 : r;
        if (degs[i] != want) {
          rep.fail("almost_regular degree sequence off at n=" + std::to_string(n) +
                   " r=" + std::to_string(r));
          break;
        }
      }
      ++ar_checked;
    }
  {
    json row;
    row["family"] = "almost-regular";
    row["cases"] = ar_checked;
    rep.table.push_back(row);
  }
  return rep;
}

SuiteReport verify_gamma(const std::vector<int>& ks) {
  SuiteReport rep;
  rep.suite = "gamma";
  rep.params["k"] = ks;
  for (int k : ks) {
    long long n = 100LL * k;
    int x = static_cast<int>(std::floor(k / std::sqrt(2.0)));
    long long a = a_x(k, x);
    long long e_s = s_family_edges(n, x, a);
    double quarter = static_cast<double>(k) * n / 4.0;
    double ratio_s = e_s / quarter;
    double eps = 10.0 / std::sqrt(static_cast<double>(k));
    json row;
    row["k"] = k;
    row["n"] = n;
    row["x"] = x;
    row["s_family_edges"] = e_s;
    row["ratio_to_quarter"] = ratio_s;
    row["required"] = "[1-10/sqrt(k), 1]";
    rep.table.push_back(row);
    if (!(ratio_s >= 1.0 - eps && ratio_s <= 1.0))
      rep.fail("s_family ratio " + std::to_string(ratio_s) + " outside [1-10/sqrt(k), 1] at k=" +
               std::to_string(k));

    long long d = (k + 1) / 2;  // ceil(k/2)
    BroomExc b = broom_ex_c(n, k, d);
    double half = static_cast<double>(n) * (k - 2) / 2.0;
    double ratio_b = b.edges / half;
    json row2;
    row2["k"] = k;
    row2["d"] = d;
    row2["broom_ex_c"] = b.edges;
    row2["ratio_to_half"] = ratio_b;
    row2["required"] = "[0.5, 0.5+10/sqrt(k)]";
    rep.table.push_back(row2);
    if (!(ratio_b >= 0.5 && ratio_b <= 0.5 + eps))
      rep.fail("broom ratio " + std::to_string(ratio_b) + " outside [0.5, 0.5+10/sqrt(k)] at k=" +
               std::to_string(k));
  }
  return rep;
}

SuiteReport verify_enum_counts(int max_n, int workers) {
  SuiteReport rep;
  rep.suite = "enum-counts";
  rep.params["max_n"] = max_n;
  rep.params["workers"] = workers;
  static const long long kAll[] = {1, 2, 4, 11, 34, 156, 1044, 12346, 274668};
  static const long long kConnected[] = {1, 1, 2, 6, 21, 112, 853, 11117, 261080};
  for (int n = 1; n <= max_n; ++n) {
    long long all = count_graphs(n, false);
    long long conn = count_graphs(n, true);
    json row;
    row["n"] = n;
    row["graphs"] = all;
    row["connected"] = conn;
    rep.table.push_back(row);
    if (all != kAll[n - 1] || conn != kConnected[n - 1])
      rep.fail("enumeration counts differ from the known sequences at n=" + std::to_string(n));
  }
  // worker-count determinism
  for (const char* spec : {"path:5", "cycle-ge:4"}) {
    Forbid f = Forbid::parse(spec);
    bool connected = std::string(spec) == "path:5";
    ExtremalRecord serial = extremal_number(7, f, connected, 1);
    ExtremalRecord sharded = extremal_number(7, f, connected, workers);
    if (to_json_string(serial) != to_json_string(sharded))
      rep.fail(std::string("sharded record differs from serial for ") + spec);
    json row;
    row["record"] = serial.forbid;
    row["max_edges"] = serial.max_edges;
    row["witnesses"] = serial.witnesses.size();
    rep.table.push_back(row);
  }
  return rep;
}

}  // namespace conex
