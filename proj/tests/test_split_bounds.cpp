#include <doctest.h>

#include <map>
#include <vector>

#include "mostar/families.hpp"
#include "mostar/search.hpp"
#include "mostar/split_bounds.hpp"

using namespace mostar;

namespace {

// Independent oracle: the pairwise sum written out literally.
Int naive_pairwise_gap_sum(const std::vector<int>& seq) {
  Int total = 0;
  for (size_t i = 0; i < seq.size(); ++i)
    for (size_t j = i + 1; j < seq.size(); ++j) total += seq[i] - seq[j];
  return total;
}

void enumerate_nonincreasing(int parts, int max_value, std::vector<int>& prefix,
                             const std::function<void(const std::vector<int>&)>& visit) {
  if (parts == 0) {
    visit(prefix);
    return;
  }
  const int cap = prefix.empty() ? max_value : prefix.back();
  for (int d = cap; d >= 0; --d) {
    prefix.push_back(d);
    enumerate_nonincreasing(parts - 1, max_value, prefix, visit);
    prefix.pop_back();
  }
}

}  // namespace

TEST_CASE("cross edge bound") {
  CHECK(cross_edge_bound(6, 2) == 3);
  CHECK(cross_edge_bound(4, 1) == 2);
  CHECK(cross_edge_bound(5, 4) == 0);
  CHECK_THROWS_AS(cross_edge_bound(5, 0), std::invalid_argument);
  CHECK_THROWS_AS(cross_edge_bound(5, 5), std::invalid_argument);
}

TEST_CASE("cross edge bound is tight on the complete join") {
  const Graph s24 = split_join(2, 6);
  for (int v = 2; v < 6; ++v) {
    const EdgeUnbalance ub = edge_unbalance(s24, 0, v);
    CHECK(ub.contribution() == cross_edge_bound(6, s24.degree(v)));
  }
  const Graph star = split_join(1, 4);
  CHECK(edge_unbalance(star, 0, 1).contribution() == cross_edge_bound(4, 1));
}

TEST_CASE("clique pair unbalance equals the degree gap") {
  CHECK(clique_pair_unbalance(split_join(2, 6), 2, 0, 1) == 0);

  const Graph uneven = extremal_split(6, 2, 5).graph;  // degrees 5 and 2
  CHECK(clique_pair_unbalance(uneven, 2, 0, 1) == 3);

  CHECK_THROWS_AS(clique_pair_unbalance(split_join(2, 6), 2, 0, 3), std::invalid_argument);
  CHECK_THROWS_AS(clique_pair_unbalance(complete_bipartite(2, 2), 2, 0, 1), std::invalid_argument);
}

TEST_CASE("weighted pairwise gap sum") {
  CHECK(weighted_absdiff_sum({3, 1, 0}) == 6);
  CHECK(weighted_absdiff_sum({4, 1}) == 3);
  CHECK(weighted_absdiff_sum({7, 7, 7}) == 0);
  CHECK(weighted_absdiff_sum({}) == 0);
  CHECK_THROWS_AS(weighted_absdiff_sum({1, 2}), std::invalid_argument);

  std::vector<int> prefix;
  enumerate_nonincreasing(4, 5, prefix, [](const std::vector<int>& seq) {
    CHECK(weighted_absdiff_sum(seq) == naive_pairwise_gap_sum(seq));
  });
}

TEST_CASE("degree gap bound values") {
  CHECK(degree_gap_bound(6, 2, 8) == 0);
  CHECK(degree_gap_bound(6, 2, 5) == make_rational(15, 4));
  CHECK(degree_gap_bound(9, 3, 0) == 0);
  CHECK_THROWS_AS(degree_gap_bound(6, 0, 0), std::invalid_argument);
}

TEST_CASE("extremal degree gap and its slack identity") {
  const DegreeGapExtremal mid = degree_gap_extremal(6, 2, 5);
  CHECK(mid.r == 1);
  CHECK(mid.s == 1);
  CHECK(mid.value == 3);
  CHECK(mid.slack == make_rational(3, 4));

  const DegreeGapExtremal full = degree_gap_extremal(6, 2, 8);
  CHECK(full.r == 2);
  CHECK(full.s == 0);
  CHECK(full.value == 0);
  CHECK(full.slack == 0);

  for (int n = 3; n <= 9; ++n)
    for (int k = 1; k < n; ++k)
      for (Int m = 0; m <= static_cast<Int>(k) * (n - k); m += n - k)
        CHECK(degree_gap_extremal(n, k, m).slack == 0);  // s = 0 cases
}

TEST_CASE("extremal degree gap maximizes over all degree sequences") {
  for (int k = 1; k <= 5; ++k)
    for (int cap = 1; cap <= 5; ++cap) {
      const int n = k + cap;
      std::map<Int, Int> best_by_sum;
      std::vector<int> prefix;
      enumerate_nonincreasing(k, cap, prefix, [&](const std::vector<int>& seq) {
        Int sum = 0;
        for (int d : seq) sum += d;
        const Int value = naive_pairwise_gap_sum(seq);
        auto [it, fresh] = best_by_sum.try_emplace(sum, value);
        if (!fresh && value > it->second) it->second = value;
      });
      for (const auto& [m, best] : best_by_sum) {
        const DegreeGapExtremal ex = degree_gap_extremal(n, k, m);
        CHECK(ex.value == best);
        CHECK(Rational(best) + ex.slack == degree_gap_bound(n, k, m));
      }
    }
}

TEST_CASE("quadratic split bound values") {
  CHECK(split_quadratic_bound(6, 2, 8) == 24);
  CHECK(split_quadratic_bound(6, 2, 7) == make_rational(49, 2));
  CHECK(split_quadratic_bound(9, 4, 0) == 0);
}

TEST_CASE("piecewise bound cases") {
  const SplitBoundChain low = split_piecewise_bound(6, 1);
  CHECK(low.case_taken == SplitCase::kFullJoin);
  CHECK(low.piecewise_value == 20);

  const SplitBoundChain high = split_piecewise_bound(6, 2);
  CHECK(high.case_taken == SplitCase::kQuadraticPeak);
  CHECK(high.piecewise_value == make_rational(49, 2));
  CHECK(high.cap_value == 32);
  CHECK(high.m_star == 7);
  CHECK(high.m == 7);

  CHECK_THROWS_AS(split_piecewise_bound(6, 0), std::invalid_argument);
  CHECK_THROWS_AS(split_piecewise_bound(6, 6), std::invalid_argument);
}

TEST_CASE("the two piecewise branches stay below 4/27 on a rational grid") {
  // max over alpha in [0,1] of max(a(1-a)^2, (1-a)(1+a)^2/8) is 4/27 at 1/3
  const Rational cap = make_rational(4, 27);
  for (int t = 0; t <= 1000; ++t) {
    const Rational a = make_rational(t, 1000);
    CHECK(a * (1 - a) * (1 - a) <= cap);
    CHECK((1 - a) * (1 + a) * (1 + a) / 8 <= cap);
  }
  const Rational third = make_rational(1, 3);
  CHECK(third * (1 - third) * (1 - third) == cap);
  CHECK((1 - third) * (1 + third) * (1 + third) / 8 == cap);
}

TEST_CASE("quadratic bound is unimodal in m with integer peak at floor/ceil of m*") {
  for (int n = 3; n <= 10; ++n)
    for (int k = 1; k < n; ++k) {
      Rational best(-1);
      Int best_m = 0;
      for (Int m = 0; m <= static_cast<Int>(k) * (n - k); ++m) {
        const Rational value = split_quadratic_bound(n, k, m);
        if (value > best) {
          best = value;
          best_m = m;
        }
      }
      const Rational m_star = make_rational(static_cast<Int>(n - k) * (n + k - 1), 4);
      const Rational cap_m = Rational(static_cast<Int>(k) * (n - k));
      const Rational clamped = m_star <= cap_m ? m_star : cap_m;
      CHECK(Rational(best_m) >= clamped - 1);
      CHECK(Rational(best_m) <= clamped + 1);
    }
}

TEST_CASE("full theorem chain on enumerated split graphs at n=6") {
  for (int k = 0; k <= 6; ++k) {
    enumerate_split(6, k, [&](const Graph& g, const std::vector<std::uint32_t>&) {
      Int cross = 0;
      for (int v = 0; v < k; ++v) cross += g.degree(v) - (k - 1);
      const Int mo = mostar_index(g);
      if (k == 0 || k == 6) {
        CHECK(mo == 0);
        return;
      }
      const SplitBoundChain chain = split_bound_chain(6, k, cross);
      CHECK(Rational(mo) <= chain.g_value);
      CHECK(chain.g_value <= chain.piecewise_value);
      CHECK(chain.piecewise_value <= chain.cap_value);
    });
  }
}

TEST_CASE("per edge decomposition on enumerated split graphs") {
  const int n = 6, k = 3;
  enumerate_split(n, k, [&](const Graph& g, const std::vector<std::uint32_t>&) {
    Int cross_total = 0, clique_total = 0, m = 0;
    for (const auto& [u, v] : g.edges()) {
      if (v < k) {
        clique_total += clique_pair_unbalance(g, k, u, v);
      } else {
        ++m;
        const EdgeUnbalance ub = edge_unbalance(g, u, v);
        CHECK(ub.contribution() <= cross_edge_bound(n, g.degree(v)));
        cross_total += n - g.degree(v) - 1;
      }
    }
    const Int mo = mostar_index(g);
    CHECK(mo <= cross_total + clique_total);
    // Cauchy-Schwarz strengthening of the cross-edge part
    const Rational cs = Rational(m * (n - 1)) - Rational(BigInt(m) * m, BigInt(n - k));
    CHECK(Rational(mo) <= cs + Rational(clique_total));
    // clique degree-gap sum obeys its bound
    CHECK(Rational(clique_total) <= degree_gap_bound(n, k, m));
  });
}
