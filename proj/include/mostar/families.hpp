#pragma once

#include <vector>

#include "mostar/graph.hpp"
#include "mostar/numeric.hpp"

namespace mostar {

// Split graph blueprint: a clique on {0..k-1}, an independent set on
// {k..n-1}, and m cross edges distributed per cross_degrees. The builder
// assigns each clique vertex's neighbors round-robin over the independent
// set in id order, continuing where the previous vertex stopped, so the
// independent-set degrees stay as regular as possible.
struct SplitSpec {
  int n = 0;
  int k = 0;
  Int m = 0;
  std::vector<int> cross_degrees;  // nonincreasing, one entry per clique vertex

  void validate() const;
};

struct ExtremalSplit {
  SplitSpec spec;
  Graph graph;
  int r = 0;  // clique vertices adjacent to all of the independent set
  int s = 0;  // cross degree of the one partially-joined clique vertex
};

Graph complete_bipartite(int a, int b);  // side A = {0..a-1}
Int mo_complete_bipartite(Int a, Int b);  // a*b*|a-b|

Graph split_join(int k, int n);  // clique {0..k-1} fully joined to {k..n-1}
Int mo_split_join(Int k, Int n);  // k*(n-k)*(n-k-1)

// The m-edge split graph with cross degrees (n-k, ..., n-k, s, 0, ..., 0),
// r = floor(m/(n-k)) full vertices and s = m - r*(n-k).
ExtremalSplit extremal_split(int n, int k, Int m);

Graph split_from_spec(const SplitSpec& spec);

// argmax over a in {1..n/2} of a*(n-a)*(n-2a), smallest a on ties.
struct BestBipartite {
  int a = 0;
  Int value = 0;
};
BestBipartite best_complete_bipartite(int n);

}  // namespace mostar
