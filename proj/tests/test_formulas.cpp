#include <doctest.h>

#include "conex/families.hpp"
#include "conex/formulas.hpp"

using namespace conex;

TEST_CASE("kopylov_ex_c_path") {
  CHECK(kopylov_ex_c_path(10, 10) == 30);
  CHECK(kopylov_ex_c_path(7, 5) == 7);
  CHECK(kopylov_ex_c_path(20, 6) == 37);
  CHECK_THROWS_AS(kopylov_ex_c_path(9, 10), std::invalid_argument);
  CHECK_THROWS_AS(kopylov_ex_c_path(5, 3), std::invalid_argument);
}

TEST_CASE("woodall_ex_long_cycle") {
  CHECK(woodall_ex_long_cycle(7, 4) == 9);
  CHECK(woodall_ex_long_cycle(5, 5) == 7);
  CHECK_THROWS_AS(woodall_ex_long_cycle(4, 5), std::invalid_argument);
}

TEST_CASE("f1 attains the long-cycle bound") {
  for (int k = 3; k <= 29; ++k)
    for (int n = k + 1; n <= 30; ++n)
      CHECK(f1(n, k).edge_count() == woodall_ex_long_cycle(n, k));
}

TEST_CASE("two_connected_bound") {
  CHECK(two_connected_bound(8, 5) == 13);
  CHECK(two_connected_bound(20, 6) == 38);
  CHECK_THROWS_AS(two_connected_bound(4, 5), std::invalid_argument);

  for (int k = 5; k <= 40; ++k)
    for (int n = k; n <= 40; ++n)
      CHECK(two_connected_bound(n, k) ==
            std::max(g_family_edges(n, k, 2), g_family_edges(n, k, (k - 1) / 2)));
}

TEST_CASE("broom_ex_c") {
  CHECK(broom_ex_c(100, 16, 7).edges == 450);  // d <= (k+1)/2 branch
  CHECK(broom_ex_c(20, 10, 8).edges == 55);    // d >= (k+5)/2 branch

  BroomExc mid = broom_ex_c(50, 11, 7);  // 2d = k+3 with odd d
  CHECK(mid.edges == 144);
  CHECK(mid.f3_undefined);

  // 2d = k+3 with even d uses all three families
  BroomExc even_mid = broom_ex_c(50, 9, 6);
  CHECK_FALSE(even_mid.f3_undefined);
  CHECK(even_mid.edges ==
        std::max({g_family_edges(50, 6, 2), f2_edges(50, 6), f3_edges(50, 6)}));

  // 2d = k+2 / k+4 cases route through f1 at (k+2)/2
  CHECK(broom_ex_c(60, 12, 7).edges == std::max(g_family_edges(60, 7, 3), f1_edges(60, 7)));
  CHECK(broom_ex_c(60, 12, 8).edges == std::max(g_family_edges(60, 8, 3), f1_edges(60, 7)));

  CHECK_THROWS_AS(broom_ex_c(100, 8, 7), std::invalid_argument);   // k < d+2
  CHECK_THROWS_AS(broom_ex_c(100, 10, 5), std::invalid_argument);  // d < 6
  CHECK_THROWS_AS(broom_ex_c(10, 16, 7), std::invalid_argument);   // n < k
}
