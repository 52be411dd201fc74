#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "mostar/families.hpp"
#include "mostar/graph.hpp"

using namespace mostar;

TEST_CASE("complete bipartite construction") {
  const Graph g = complete_bipartite(2, 4);
  CHECK(g.order() == 6);
  CHECK(g.edge_count() == 8);
  CHECK(complete_bipartite(0, 3).edge_count() == 0);
  CHECK(complete_bipartite(1, 1).edge_count() == 1);
}

TEST_CASE("complete bipartite closed form matches BFS") {
  CHECK(mo_complete_bipartite(2, 4) == 16);
  CHECK(mo_complete_bipartite(3, 3) == 0);
  CHECK(mo_complete_bipartite(1, 5) == 20);
  for (int a = 0; a <= 8; ++a)
    for (int b = 0; b <= 8; ++b)
      CHECK(mo_complete_bipartite(a, b) == mostar_index(complete_bipartite(a, b)));
}

TEST_CASE("split join construction") {
  const Graph s24 = split_join(2, 6);
  CHECK(s24.order() == 6);
  CHECK(s24.edge_count() == 9);  // 1 clique edge + 8 cross edges

  const Graph star = split_join(1, 4);
  CHECK(star.edge_count() == 3);
  CHECK(degree_sequence(star) == std::vector<int>{3, 1, 1, 1});

  const Graph k4 = split_join(4, 4);
  CHECK(k4.edge_count() == 6);
}

TEST_CASE("split join closed form matches BFS") {
  CHECK(mo_split_join(2, 6) == 24);
  CHECK(mo_split_join(1, 4) == 6);
  CHECK(mo_split_join(5, 5) == 0);
  for (int n = 0; n <= 8; ++n)
    for (int k = 0; k <= n; ++k) CHECK(mo_split_join(k, n) == mostar_index(split_join(k, n)));
}

TEST_CASE("extremal split shapes") {
  const ExtremalSplit full = extremal_split(6, 2, 8);
  CHECK(full.r == 2);
  CHECK(full.s == 0);
  CHECK(full.graph.edges() == split_join(2, 6).edges());

  const ExtremalSplit mid = extremal_split(6, 2, 5);
  CHECK(mid.r == 1);
  CHECK(mid.s == 1);
  CHECK(mid.spec.cross_degrees == std::vector<int>{4, 1});
  CHECK(mid.graph.edge_count() == 6);  // 1 clique + 5 cross

  const ExtremalSplit none = extremal_split(6, 2, 0);
  CHECK(none.graph.edge_count() == 1);  // the K_2 alone

  CHECK_THROWS_AS(extremal_split(6, 2, 9), std::invalid_argument);
}

TEST_CASE("extremal split keeps independent-set degrees regular") {
  for (int n = 2; n <= 9; ++n)
    for (int k = 1; k < n; ++k)
      for (Int m = 0; m <= static_cast<Int>(k) * (n - k); ++m) {
        const ExtremalSplit ex = extremal_split(n, k, m);
        int lo = n, hi = 0;
        for (int v = k; v < n; ++v) {
          lo = std::min(lo, ex.graph.degree(v));
          hi = std::max(hi, ex.graph.degree(v));
        }
        CHECK(hi - lo <= 1);
        // cross-degree sequence is (n-k, ..., n-k, s, 0, ..., 0)
        Int cross = 0;
        for (int v = 0; v < k; ++v) {
          const int cd = ex.graph.degree(v) - (k - 1);
          cross += cd;
          if (v < ex.r)
            CHECK(cd == n - k);
          else if (v == ex.r)
            CHECK(cd == ex.s);
          else
            CHECK(cd == 0);
        }
        CHECK(cross == m);
      }
}

TEST_CASE("split from spec validates") {
  SplitSpec spec;
  spec.n = 6;
  spec.k = 2;
  spec.m = 8;
  spec.cross_degrees = {4, 4};
  CHECK(split_from_spec(spec).edges() == split_join(2, 6).edges());

  spec.m = 5;
  spec.cross_degrees = {5};
  CHECK_THROWS_AS(split_from_spec(spec), std::invalid_argument);

  spec.cross_degrees = {1, 4};
  CHECK_THROWS_AS(split_from_spec(spec), std::invalid_argument);  // not nonincreasing

  spec.cross_degrees = {4, 2};
  CHECK_THROWS_AS(split_from_spec(spec), std::invalid_argument);  // sum != m
}

TEST_CASE("best complete bipartite side") {
  const BestBipartite n6 = best_complete_bipartite(6);
  CHECK(n6.a == 1);
  CHECK(n6.value == 20);

  const BestBipartite n2 = best_complete_bipartite(2);
  CHECK(n2.a == 1);
  CHECK(n2.value == 0);

  // brute force over all a is the definition; check the argmax tracks
  // a1 = (1 - 1/sqrt(3))/2 for larger n
  const double alpha1 = (1.0 - 1.0 / std::sqrt(3.0)) / 2.0;
  for (int n = 12; n <= 300; n += 7) {
    const BestBipartite best = best_complete_bipartite(n);
    const int lo = static_cast<int>(std::floor(alpha1 * n));
    const int hi = static_cast<int>(std::ceil(alpha1 * n));
    CHECK((best.a == lo || best.a == hi));
  }
}
