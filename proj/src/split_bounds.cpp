#include "mostar/split_bounds.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace mostar {

namespace {

void require_proper_split(int n, int k) {
  if (k <= 0 || k >= n)
    throw std::invalid_argument("need 0 < k < n, got k=" + std::to_string(k) + ", n=" + std::to_string(n));
}

void require_m_range(int n, int k, Int m) {
  if (m < 0 || m > static_cast<Int>(k) * (n - k))
    throw std::invalid_argument("cross-edge count m=" + std::to_string(m) + " outside [0, k(n-k)]");
}

}  // namespace

Int cross_edge_bound(int n, int dv) {
  if (dv < 1 || dv > n - 1) throw std::invalid_argument("independent endpoint degree out of range");
  return n - dv - 1;
}

Int clique_pair_unbalance(const Graph& g, int clique_size, int u, int v) {
  if (u < 0 || u >= clique_size || v < 0 || v >= clique_size || u == v)
    throw std::invalid_argument("vertices " + std::to_string(u) + "," + std::to_string(v) +
                                " are not a clique pair");
  if (clique_size > g.order()) throw std::invalid_argument("clique larger than the graph");
  for (int a = 0; a < clique_size; ++a)
    for (int b = a + 1; b < clique_size; ++b)
      if (!g.has_edge(a, b))
        throw std::invalid_argument("vertices 0.." + std::to_string(clique_size - 1) +
                                    " do not form a clique");
  const Int gap = std::abs(g.degree(u) - g.degree(v));
  const EdgeUnbalance ub = edge_unbalance(g, u, v);
  if (ub.contribution() != gap)
    throw std::logic_error("clique-pair unbalance differs from the degree gap");
  return gap;
}

Int weighted_absdiff_sum(const std::vector<int>& degseq) {
  const Int len = static_cast<Int>(degseq.size());
  Int total = 0;
  int prev = degseq.empty() ? 0 : degseq.front();
  for (Int i = 1; i <= len; ++i) {
    const int d = degseq[static_cast<size_t>(i - 1)];
    if (d > prev) throw std::invalid_argument("degree sequence must be nonincreasing");
    prev = d;
    total += (len + 1 - 2 * i) * d;
  }
  return total;
}

Rational degree_gap_bound(int n, int k, Int m) {
  require_proper_split(n, k);
  require_m_range(n, k, m);
  return Rational(static_cast<Int>(k) * m) - Rational(BigInt(m) * m, BigInt(n - k));
}

DegreeGapExtremal degree_gap_extremal(int n, int k, Int m) {
  require_proper_split(n, k);
  require_m_range(n, k, m);
  DegreeGapExtremal out;
  out.r = m / (n - k);
  out.s = m % (n - k);
  out.value = (k - out.r) * out.r * (n - k) + (k - 1 - 2 * out.r) * out.s;
  out.slack = Rational(BigInt(out.s) * ((n - k) - out.s), BigInt(n - k));
  if (degree_gap_bound(n, k, m) - Rational(out.value) != out.slack)
    throw std::logic_error("degree-gap slack identity failed");
  return out;
}

Rational split_quadratic_bound(int n, int k, Int m) {
  require_proper_split(n, k);
  require_m_range(n, k, m);
  return Rational(static_cast<Int>(n + k - 1) * m) - Rational(2 * BigInt(m) * m, BigInt(n - k));
}

SplitBoundChain split_bound_chain(int n, int k, Int m) {
  require_proper_split(n, k);
  require_m_range(n, k, m);
  SplitBoundChain chain;
  chain.n = n;
  chain.k = k;
  chain.m = m;
  chain.g_value = split_quadratic_bound(n, k, m);
  chain.m_star = make_rational(static_cast<Int>(n - k) * (n + k - 1), 4);
  // 3k <= n-1 is exactly alpha <= 1/3 - 1/(3n); then every admissible m
  // lies left of m*, so g peaks at the full join m = k(n-k).
  if (3 * k <= n - 1) {
    chain.case_taken = SplitCase::kFullJoin;
    chain.piecewise_value = Rational(static_cast<Int>(k) * (n - k) * (n - k - 1));
  } else {
    chain.case_taken = SplitCase::kQuadraticPeak;
    chain.piecewise_value =
        Rational(BigInt(n - k) * BigInt(n + k - 1) * BigInt(n + k - 1), BigInt(8));
  }
  chain.cap_value = Rational(4 * BigInt(n) * n * n, BigInt(27));
  if (chain.g_value > chain.piecewise_value || chain.piecewise_value > chain.cap_value)
    throw std::logic_error("split bound chain is not monotone");
  return chain;
}

SplitBoundChain split_piecewise_bound(int n, int k) {
  require_proper_split(n, k);
  Int m;
  if (3 * k <= n - 1) {
    m = static_cast<Int>(k) * (n - k);
  } else {
    // integer maximizer of the quadratic: floor(m*) or ceil(m*)
    const Int num = static_cast<Int>(n - k) * (n + k - 1);
    const Int lo = num / 4;
    const Int hi = std::min(lo + (num % 4 == 0 ? 0 : 1), static_cast<Int>(k) * (n - k));
    m = split_quadratic_bound(n, k, hi) > split_quadratic_bound(n, k, lo) ? hi : lo;
  }
  return split_bound_chain(n, k, m);
}

const char* to_string(SplitCase c) {
  return c == SplitCase::kFullJoin ? "full_join" : "quadratic_peak";
}

}  // namespace mostar
