#include "mostar/families.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace mostar {

void SplitSpec::validate() const {
  if (k < 0 || k > n) throw std::invalid_argument("clique size k must satisfy 0 <= k <= n");
  if (static_cast<int>(cross_degrees.size()) != k)
    throw std::invalid_argument("cross_degrees must have one entry per clique vertex");
  Int sum = 0;
  int prev = n;  // any degree is <= n-k <= n
  for (int d : cross_degrees) {
    if (d < 0 || d > n - k)
      throw std::invalid_argument("cross degree " + std::to_string(d) + " exceeds independent-set size " +
                                  std::to_string(n - k));
    if (d > prev) throw std::invalid_argument("cross_degrees must be nonincreasing");
    prev = d;
    sum += d;
  }
  if (sum != m)
    throw std::invalid_argument("cross_degrees sum to " + std::to_string(sum) + ", expected m=" +
                                std::to_string(m));
}

Graph complete_bipartite(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("negative side size");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<size_t>(a) * static_cast<size_t>(b));
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  return from_edge_list(a + b, edges);
}

Int mo_complete_bipartite(Int a, Int b) {
  return a * b * (a >= b ? a - b : b - a);
}

Graph split_join(int k, int n) {
  if (k < 0 || k > n) throw std::invalid_argument("split_join needs 0 <= k <= n");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < k; ++u) {
    for (int v = u + 1; v < k; ++v) edges.emplace_back(u, v);
    for (int v = k; v < n; ++v) edges.emplace_back(u, v);
  }
  return from_edge_list(n, edges);
}

Int mo_split_join(Int k, Int n) {
  return k * (n - k) * (n - k - 1);
}

Graph split_from_spec(const SplitSpec& spec) {
  spec.validate();
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < spec.k; ++u)
    for (int v = u + 1; v < spec.k; ++v) edges.emplace_back(u, v);
  const int independent = spec.n - spec.k;
  int cursor = 0;  // round-robin position inside the independent set
  for (int u = 0; u < spec.k; ++u) {
    for (int t = 0; t < spec.cross_degrees[static_cast<size_t>(u)]; ++t) {
      edges.emplace_back(u, spec.k + cursor);
      cursor = (cursor + 1) % independent;
    }
  }
  return from_edge_list(spec.n, edges);
}

ExtremalSplit extremal_split(int n, int k, Int m) {
  if (k < 0 || k > n) throw std::invalid_argument("extremal_split needs 0 <= k <= n");
  const Int capacity = static_cast<Int>(k) * (n - k);
  if (m < 0 || m > capacity)
    throw std::invalid_argument("m=" + std::to_string(m) + " out of range [0, " +
                                std::to_string(capacity) + "]");
  ExtremalSplit out;
  out.spec.n = n;
  out.spec.k = k;
  out.spec.m = m;
  if (n - k > 0) {
    out.r = static_cast<int>(m / (n - k));
    out.s = static_cast<int>(m % (n - k));
  }
  out.spec.cross_degrees.assign(static_cast<size_t>(k), 0);
  for (int i = 0; i < out.r; ++i) out.spec.cross_degrees[static_cast<size_t>(i)] = n - k;
  if (out.s > 0) out.spec.cross_degrees[static_cast<size_t>(out.r)] = out.s;
  out.graph = split_from_spec(out.spec);
  return out;
}

BestBipartite best_complete_bipartite(int n) {
  if (n < 2) throw std::invalid_argument("best_complete_bipartite needs n >= 2");
  BestBipartite best{1, mo_complete_bipartite(1, n - 1)};
  for (int a = 2; a <= n / 2; ++a) {
    Int value = mo_complete_bipartite(a, n - a);
    if (value > best.value) best = {a, value};
  }
  return best;
}

}  // namespace mostar
