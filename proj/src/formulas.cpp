#include "conex/formulas.hpp"

#include <algorithm>
#include <stdexcept>

#include "conex/families.hpp"

namespace conex {

namespace {
long long binom2(long long x) { return x < 2 ? 0 : x * (x - 1) / 2; }
}

long long kopylov_ex_c_path(long long n, long long k) {
  if (!(n >= k && k >= 4)) throw std::invalid_argument("kopylov_ex_c_path requires n >= k >= 4");
  long long a = binom2(k - 2) + (n - (k - 2));
  long long b = ((k - 2) / 2) * (n - (k + 1) / 2) + binom2((k + 1) / 2);
  return std::max(a, b);
}

long long woodall_ex_long_cycle(long long n, long long k) {
  if (!(n >= k && k >= 3)) throw std::invalid_argument("woodall_ex_long_cycle requires n >= k >= 3");
  long long p = (n - 1) / (k - 2), q = (n - 1) % (k - 2);
  long long value = p * binom2(k - 1) + binom2(q + 1);
  if (2 * value != (k - 1) * (n - 1) - q * (k - 2 - q))
    throw std::logic_error("woodall closed forms disagree");
  return value;
}

long long two_connected_bound(long long n, long long k) {
  if (!(n >= k && k >= 5)) throw std::invalid_argument("two_connected_bound requires n >= k >= 5");
  long long a = binom2(k - 2) + 2 * (n - (k - 2));
  long long b = ((k - 1) / 2) * (n - (k + 2) / 2) + binom2((k + 2) / 2);
  return std::max(a, b);
}

BroomExc broom_ex_c(long long n, long long k, long long d) {
  if (k < d + 2 || d < 6) throw std::invalid_argument("broom_ex_c requires k >= d+2 and d >= 6");
  if (n < k) throw std::invalid_argument("broom_ex_c requires n >= k");
  BroomExc out;
  if (2 * d <= k + 1) {
    out.edges = (k - d) * n / 2;
    return out;
  }
  long long g = g_family_edges(n, d, (d - 1) / 2);
  if (2 * d >= k + 5) {
    out.edges = g;
    return out;
  }
  if (2 * d == k + 2 || 2 * d == k + 4) {
    out.edges = std::max(g, f1_edges(n, (k + 2) / 2));
    return out;
  }
  // 2d = k+3
  out.edges = std::max(g, f2_edges(n, d));
  if (d % 2 == 0)
    out.edges = std::max(out.edges, f3_edges(n, d));
  else
    out.f3_undefined = true;
  return out;
}

}  // namespace conex
