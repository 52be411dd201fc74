#include "mostar/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mostar {

bool Graph::has_edge(int u, int v) const {
  const auto& nb = adj_[static_cast<size_t>(u)];
  return std::binary_search(nb.begin(), nb.end(), v);
}

Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  Graph g(n);
  std::set<std::pair<int, int>> seen;
  for (const auto& [u, v] : pairs) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") out of range for n=" + std::to_string(n));
    if (u == v)
      throw std::invalid_argument("self-loop (" + std::to_string(u) + "," + std::to_string(v) + ")");
    seen.insert(std::minmax(u, v));
  }
  g.edges_.assign(seen.begin(), seen.end());
  for (const auto& [u, v] : g.edges_) {
    g.adj_[static_cast<size_t>(u)].push_back(v);
    g.adj_[static_cast<size_t>(v)].push_back(u);
  }
  for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
  return g;
}

DistanceVector bfs_distances(const Graph& g, int src) {
  if (src < 0 || src >= g.order())
    throw std::invalid_argument("bfs source " + std::to_string(src) + " out of range");
  DistanceVector dv;
  dv.source = src;
  dv.dist.assign(static_cast<size_t>(g.order()), kUnreachable);
  std::deque<int> queue{src};
  dv.dist[static_cast<size_t>(src)] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(v)) {
      if (dv.dist[static_cast<size_t>(w)] == kUnreachable) {
        dv.dist[static_cast<size_t>(w)] = dv.dist[static_cast<size_t>(v)] + 1;
        queue.push_back(w);
      }
    }
  }
  return dv;
}

std::vector<DistanceVector> all_pairs_distances(const Graph& g) {
  std::vector<DistanceVector> all;
  all.reserve(static_cast<size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) all.push_back(bfs_distances(g, v));
  return all;
}

namespace {

EdgeUnbalance unbalance_from_dists(const Graph& g, int u, int v,
                                   const std::vector<int>& du, const std::vector<int>& dv) {
  EdgeUnbalance ub;
  ub.u = u;
  ub.v = v;
  for (int w = 0; w < g.order(); ++w) {
    int a = du[static_cast<size_t>(w)];
    int b = dv[static_cast<size_t>(w)];
    if (a < b)
      ++ub.n_uv;
    else if (b < a)
      ++ub.n_vu;
    else
      ++ub.equidistant;
  }
  return ub;
}

}  // namespace

EdgeUnbalance edge_unbalance(const Graph& g, int u, int v) {
  if (!g.has_edge(u, v))
    throw std::invalid_argument("(" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
  return unbalance_from_dists(g, u, v, bfs_distances(g, u).dist, bfs_distances(g, v).dist);
}

Int mostar_index(const Graph& g) {
  auto dists = all_pairs_distances(g);
  Int total = 0;
  for (const auto& [u, v] : g.edges()) {
    auto ub = unbalance_from_dists(g, u, v, dists[static_cast<size_t>(u)].dist,
                                   dists[static_cast<size_t>(v)].dist);
    total += ub.contribution();
  }
  return total;
}

std::optional<Bipartition> bipartition(const Graph& g) {
  std::vector<int> color(static_cast<size_t>(g.order()), -1);
  for (int root = 0; root < g.order(); ++root) {
    if (color[static_cast<size_t>(root)] != -1) continue;
    if (g.degree(root) == 0) {
      color[static_cast<size_t>(root)] = 1;  // isolated vertices on side B
      continue;
    }
    color[static_cast<size_t>(root)] = 0;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(v)) {
        if (color[static_cast<size_t>(w)] == -1) {
          color[static_cast<size_t>(w)] = 1 - color[static_cast<size_t>(v)];
          queue.push_back(w);
        } else if (color[static_cast<size_t>(w)] == color[static_cast<size_t>(v)]) {
          return std::nullopt;  // odd cycle
        }
      }
    }
  }
  Bipartition parts;
  for (int v = 0; v < g.order(); ++v)
    (color[static_cast<size_t>(v)] == 0 ? parts.side_a : parts.side_b).push_back(v);
  return parts;
}

std::optional<Bipartition> bipartition(const Graph& g, const Bipartition& override_coloring) {
  std::vector<int> color(static_cast<size_t>(g.order()), -1);
  auto assign = [&](const std::vector<int>& side, int c) {
    for (int v : side) {
      if (v < 0 || v >= g.order())
        throw std::invalid_argument("override names vertex " + std::to_string(v) + " out of range");
      if (color[static_cast<size_t>(v)] != -1)
        throw std::invalid_argument("override assigns vertex " + std::to_string(v) + " twice");
      color[static_cast<size_t>(v)] = c;
    }
  };
  assign(override_coloring.side_a, 0);
  assign(override_coloring.side_b, 1);
  for (int v = 0; v < g.order(); ++v)
    if (color[static_cast<size_t>(v)] == -1)
      throw std::invalid_argument("override leaves vertex " + std::to_string(v) + " unassigned");
  for (const auto& [u, v] : g.edges())
    if (color[static_cast<size_t>(u)] == color[static_cast<size_t>(v)])
      throw std::invalid_argument("override is not a proper 2-coloring: edge (" +
                                  std::to_string(u) + "," + std::to_string(v) +
                                  ") inside one side");
  Bipartition parts = override_coloring;
  std::sort(parts.side_a.begin(), parts.side_a.end());
  std::sort(parts.side_b.begin(), parts.side_b.end());
  return parts;
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  auto d = bfs_distances(g, 0).dist;
  return std::find(d.begin(), d.end(), kUnreachable) == d.end();
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> degrees;
  degrees.reserve(static_cast<size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) degrees.push_back(g.degree(v));
  std::sort(degrees.rbegin(), degrees.rend());
  return degrees;
}

namespace {

[[noreturn]] void parse_fail(int line_no, const std::string& what) {
  throw std::runtime_error("edge list parse error at line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  long n = -1, m = -1;
  std::vector<std::pair<int, int>> pairs;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    if (n < 0) {
      if (!(fields >> n >> m)) {
        std::string stray;
        if (std::istringstream(line) >> stray) parse_fail(line_no, "expected header 'n m'");
        n = -1;
        continue;  // blank / comment-only line before the header
      }
      if (n < 0 || m < 0) parse_fail(line_no, "negative counts in header");
      continue;
    }
    long u, v;
    if (!(fields >> u >> v)) {
      std::string stray;
      if (std::istringstream(line) >> stray) parse_fail(line_no, "expected 'u v'");
      continue;
    }
    std::string extra;
    if (fields >> extra) parse_fail(line_no, "trailing token '" + extra + "'");
    pairs.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (n < 0) throw std::runtime_error("edge list parse error: missing header 'n m'");
  if (static_cast<long>(pairs.size()) != m)
    throw std::runtime_error("edge list parse error: header announces " + std::to_string(m) +
                             " edges, found " + std::to_string(pairs.size()));
  return from_edge_list(static_cast<int>(n), pairs);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g, const std::string& comment) {
  if (!comment.empty()) out << "# " << comment << "\n";
  out << g.order() << " " << g.edge_count() << "\n";
  for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
}

}  // namespace mostar
