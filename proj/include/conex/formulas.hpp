#pragma once

namespace conex {

/// Maximum edges of a connected n-vertex graph with no path on k vertices:
/// max{ C(k-2,2) + (n-k+2), floor((k-2)/2)(n - ceil(k/2)) + C(ceil(k/2),2) }.
/// Requires n >= k >= 4.
long long kopylov_ex_c_path(long long n, long long k);

/// Maximum edges of an n-vertex graph with no cycle of length >= k:
/// p*C(k-1,2) + C(q+1,2) where n = p(k-2)+q+1, 0 <= q < k-2.
/// Both closed forms are evaluated and checked against each other.
/// Requires n >= k >= 3.
long long woodall_ex_long_cycle(long long n, long long k);

/// Edge bound for 2-connected n-vertex graphs with no cycle of length >= k:
/// max{ C(k-2,2) + 2(n-k+2), floor((k-1)/2)(n - ceil((k+1)/2)) + C(ceil((k+1)/2),2) }.
/// Requires n >= k >= 5.
long long two_connected_bound(long long n, long long k);

struct BroomExc {
  long long edges = 0;
  /// Set when the 2d = k+3 case with odd d falls back to the defined families
  /// only (the F3 graph requires even d).
  bool f3_undefined = false;
};

/// Piecewise formula for the maximum edges of a connected n-vertex graph with
/// no broom B(k,d), evaluated through the construction edge counts.
/// Requires k >= d+2, d >= 6, n >= k.
BroomExc broom_ex_c(long long n, long long k, long long d);

}  // namespace conex
