#pragma once

#include <vector>

#include "mostar/graph.hpp"
#include "mostar/numeric.hpp"

namespace mostar {

enum class SplitCase { kFullJoin, kQuadraticPeak };

// The bound chain for a split graph with clique size k and m cross edges:
// g_value = (n+k-1)m - 2m^2/(n-k), piecewise_value the k-level bound
// (g at m = k(n-k) when 3k <= n-1, g at the real maximizer m* otherwise),
// cap_value = 4n^3/27.
struct SplitBoundChain {
  int n = 0;
  int k = 0;
  Int m = 0;
  Rational g_value;
  Rational piecewise_value;
  Rational cap_value;
  Rational m_star;  // (n-k)(n+k-1)/4
  SplitCase case_taken = SplitCase::kFullJoin;
};

// n - dv - 1 bounds |n_uv - n_vu| for a cross edge whose independent-set
// endpoint has degree dv.
Int cross_edge_bound(int n, int dv);

// |deg u - deg u'| for clique vertices u, u' (clique = {0..k-1}); the
// BFS-computed unbalance equals this exactly, and the function verifies it.
Int clique_pair_unbalance(const Graph& g, int clique_size, int u, int v);

// Sum over i<j of (d_i - d_j) for a nonincreasing sequence, computed as
// sum_i (L+1-2i) d_i.
Int weighted_absdiff_sum(const std::vector<int>& degseq);

// km - m^2/(n-k): upper bound on the clique pairwise degree-gap sum.
Rational degree_gap_bound(int n, int k, Int m);

// Value of the maximizing cross-degree sequence (n-k,...,n-k,s,0,...,0) with
// m = (n-k)r + s, plus the exact slack to degree_gap_bound.
struct DegreeGapExtremal {
  Int value = 0;
  Int r = 0;
  Int s = 0;
  Rational slack;  // = s((n-k)-s)/(n-k)
};
DegreeGapExtremal degree_gap_extremal(int n, int k, Int m);

// (n+k-1)m - 2m^2/(n-k).
Rational split_quadratic_bound(int n, int k, Int m);

SplitBoundChain split_bound_chain(int n, int k, Int m);

// The chain at the admissible integer m with maximal g; piecewise_value and
// case are determined by k alone.
SplitBoundChain split_piecewise_bound(int n, int k);

const char* to_string(SplitCase c);

}  // namespace mostar
