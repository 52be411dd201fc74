#pragma once

#include <iosfwd>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mostar/numeric.hpp"

namespace mostar {

// Distance sentinel for vertices in another component. It compares greater
// than every finite distance and equal to itself, which is exactly the tie
// convention used when counting equidistant vertices.
constexpr int kUnreachable = std::numeric_limits<int>::max();

// Undirected simple graph on vertices 0..n-1. Adjacency lists are kept
// sorted and the edge list (u < v, lexicographic) mirrors them, so per-edge
// iteration is O(m) and all iteration orders are deterministic.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n), adj_(static_cast<size_t>(n)) {}

  int order() const { return n_; }
  Int edge_count() const { return static_cast<Int>(edges_.size()); }
  const std::vector<int>& neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  int degree(int v) const { return static_cast<int>(adj_[static_cast<size_t>(v)].size()); }
  bool has_edge(int u, int v) const;

 private:
  friend Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs);
  int n_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<std::pair<int, int>> edges_;
};

struct DistanceVector {
  int source = 0;
  std::vector<int> dist;  // kUnreachable for other components
};

struct EdgeUnbalance {
  int u = 0, v = 0;
  Int n_uv = 0;         // vertices strictly closer to u (u itself included)
  Int n_vu = 0;         // vertices strictly closer to v
  Int equidistant = 0;  // ties, including unreachable-vs-unreachable
  Int contribution() const { return n_uv >= n_vu ? n_uv - n_vu : n_vu - n_uv; }
};

struct Bipartition {
  std::vector<int> side_a;
  std::vector<int> side_b;
};

// Rejects self-loops and out-of-range ids with a diagnostic naming the pair;
// duplicate edges collapse.
Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs);

DistanceVector bfs_distances(const Graph& g, int src);
std::vector<DistanceVector> all_pairs_distances(const Graph& g);

// Requires uv to be an edge.
EdgeUnbalance edge_unbalance(const Graph& g, int u, int v);

// Sum over edges of |n_uv - n_vu|.
Int mostar_index(const Graph& g);

// Proper 2-coloring, or nullopt if the graph has an odd cycle. Per-component
// greedy with the smallest vertex of each component on side A; isolated
// vertices go to side B. A supplied override is validated and returned as-is.
std::optional<Bipartition> bipartition(const Graph& g);
std::optional<Bipartition> bipartition(const Graph& g, const Bipartition& override_coloring);

bool is_connected(const Graph& g);

std::vector<int> degree_sequence(const Graph& g);  // nonincreasing

// Edge-list text format: first line "n m", then m lines "u v" (0-based ids);
// '#' starts a comment. This is the interchange format of the CLI.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g, const std::string& comment = "");

}  // namespace mostar
