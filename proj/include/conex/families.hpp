#pragma once

#include <optional>
#include <string>

#include "conex/graph.hpp"

namespace conex {

/// G_{n,k,s} = (K_{k-2s} u complement(K_{n-k+s})) + K_s.
/// Vertices: 0..k-2s-1 the clique, then the independent set, then the K_s.
/// Requires n >= k >= 2s >= 2.
Graph g_family(int n, int k, int s);
long long g_family_edges(long long n, long long k, long long s);

/// a_x = x when x = floor((k-2)/2); floor(2x^2/k) - 2 when k/2 < x < k.
/// The branches are disjoint; x outside both is an error.
long long a_x(int k, int x);

/// S-type host: floor((n-1)/a) components of a vertices each (K_x plus a
/// pendant path of a-x extra vertices), a leftover path on the remaining
/// n-1 - a*floor((n-1)/a) vertices, and a hub w (vertex n-1) adjacent to the
/// free end of every pendant path and to one endpoint of the leftover path.
/// Requires a >= x >= 2 and n >= a+1.
Graph s_family(int n, int x, int a);
long long s_family_edges(long long n, long long x, long long a);

/// P-type host: floor(n/(a+1)) components of a+1 vertices each (K_x plus a
/// pendant path of a-x+1 extra vertices ending at w_i), a leftover path whose
/// terminal leaf is w_0 (omitted when empty), and spine edges making
/// w_0 w_1 ... a path. Requires a >= x >= 2 and n >= a+1.
Graph p_family(int n, int x, int a);
long long p_family_edges(long long n, long long x, long long a);

/// Block constructions sharing one cut vertex (vertex 0).
/// f1: all blocks K_{d-1} plus at most one clique K_{q1+1}, n-1 = (d-2)p1+q1.
///     Requires n >= d >= 3.
/// f2: one block K_{d-1}, the rest K_{d-2} plus at most one clique K_{q2+1},
///     n-2 = (d-3)p2+q2. Requires n >= d >= 4.
/// f3 (even d only): blocks K_{d-2} and/or K_{d-1} minus a perfect matching
///     of the block minus the cut vertex, n-1 = (d-3)p3+q3.
///     Requires d even, d >= 4, n >= d-1.
Graph f1(int n, int d);
Graph f2(int n, int d);
Graph f3(int n, int d);
long long f1_edges(long long n, long long d);
long long f2_edges(long long n, long long d);
long long f3_edges(long long n, long long d);

/// Connected graph with every degree r, except one vertex of degree r-1 when
/// r*n is odd. Circulant offsets 1..floor(r/2), plus a (near-)antipodal
/// matching for odd r. Requires n > r >= 1 (r = 1 only with n = 2).
Graph almost_regular(int n, int r);
long long almost_regular_edges(long long n, long long r);

Graph complete_bipartite(int a, int b);

/// Disjoint union of K_{k-1}; requires (k-1) | n.
Graph union_cliques(int n, int k);
long long union_cliques_edges(long long n, long long k);

/// CLI-facing parameter bundle for the `construct` subcommand.
struct FamilyParams {
  std::string family;  // g|s|p|f1|f2|f3|almost-regular|complete-bipartite|
                       // union-cliques|broom|binary-tree|path|complete
  std::optional<long long> n, k, d, s, x, r, a, b;
};

/// Dispatch on FamilyParams; throws std::invalid_argument for missing or
/// out-of-range parameters.
Graph make_family(const FamilyParams& p);

}  // namespace conex
