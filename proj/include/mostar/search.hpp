#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mostar/graph.hpp"
#include "mostar/numeric.hpp"
#include "mostar/split_bounds.hpp"

namespace mostar {

struct EnumerateOptions {
  // Prune to sorted row bitmasks. Sound because the Mostar index is
  // invariant under vertex relabeling; each canonical matrix stands for all
  // row permutations of itself.
  bool sort_rows = true;
  // For square biadjacency matrices additionally require the matrix to be
  // lexicographically <= its row-sorted transpose (side swap).
  bool transpose_prune = true;
  bool force = false;  // override the a*b <= 30 capacity guard
};

// Visitor receives the graph and its biadjacency row masks (bit j of row u
// set = edge between side-A vertex u and side-B vertex j).
using BiadjacencyVisitor = std::function<void(const Graph&, const std::vector<std::uint32_t>&)>;

// Visits biadjacency matrices of K_{a,b} subgraphs (side A = {0..a-1});
// returns the number visited.
Int enumerate_bipartite(int a, int b, const BiadjacencyVisitor& visit,
                        const EnumerateOptions& opts = {});

// Same matrices, but the graph is a clique on {0..k-1} plus the cross edges.
Int enumerate_split(int n, int k, const BiadjacencyVisitor& visit,
                    const EnumerateOptions& opts = {});

struct SearchOptions {
  int shards = 1;  // first-row masks are dealt round-robin to this many workers
  bool force = false;
};

struct BipartiteSearchReport {
  int n = 0;
  Int instances = 0;
  Int max_mostar = 0;
  Int max_mostar_connected = 0;
  Graph maximizer;
  int maximizer_side_a = 0;
  std::optional<Rational> relaxation;      // at the maximizer
  std::optional<Rational> certified;       // at the maximizer's (n, min(a, n-a))
  bool cube_bound_ok = false;              // 108*max^2 <= n^6
  std::optional<Rational> gap;             // certified - max
};

struct SplitSearchReport {
  int n = 0;
  Int instances = 0;
  Int max_mostar = 0;
  Int max_mostar_connected = 0;
  Graph maximizer;
  int maximizer_clique = 0;
  Int maximizer_cross_edges = 0;
  std::optional<SplitBoundChain> chain;    // at the maximizer's (k, m)
  std::optional<Rational> gap;             // chain.g_value - max
  Int best_join_value = 0;                 // max over k of mo_split_join(k, n)
  int best_join_k = 0;
};

// Exhaustive max over all side splits a + b = n with a <= b.
BipartiteSearchReport max_mostar_bipartite(int n, const SearchOptions& opts = {});

// Exhaustive max over all clique sizes k in 0..n and all cross patterns.
SplitSearchReport max_mostar_split(int n, const SearchOptions& opts = {});

struct RatioScanRow {
  int n = 0;
  int floor_a = 0;   // floor(n/3)
  Int mo_floor = 0;  // closed-form value at a = floor(n/3)
  int best_a = 0;
  Int mo_best = 0;
  bool flagged = false;  // best strictly beats the n/3 proportion
};

struct RatioScan {
  std::vector<RatioScanRow> rows;
  int smallest_flagged = 0;  // 0 when none
};

// Compares the n/3-proportioned complete bipartite graph against the best
// side split, flagging every order where the conjectured proportion loses.
RatioScan conjecture19_scan(int n_max);

enum class GapFamily { kBestCompleteBipartite, kExtremalSplit };

struct GapRow {
  int n = 0;
  int k = 0;
  Int m = 0;
  std::string label;        // "join" / "peak" / "kab"
  double bound = 0;
  std::string bound_exact;  // "p/q", empty when the bound is irrational
  Int mo = 0;
  double gap = 0;
  std::string gap_exact;
  double gap_over_n2 = 0;
};

struct GapTable {
  std::string family;
  std::vector<GapRow> rows;
  double max_gap_over_n2 = 0;
};

// Builds the family member for each n, computes its Mostar index exactly and
// the matching bound, and records gap and gap/n^2.
GapTable sharpness_gap(GapFamily family, int n_lo, int n_hi);

const char* to_string(GapFamily family);

}  // namespace mostar
