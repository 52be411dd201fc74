#include "mostar/search.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "mostar/certificate.hpp"
#include "mostar/families.hpp"
#include "mostar/profile_lp.hpp"

namespace mostar {

namespace {

constexpr Int kCellCapacity = 30;  // guard on a*b, 2^30 raw patterns

void check_capacity(Int cells, bool force) {
  if (cells > kCellCapacity && !force)
    throw std::runtime_error("search space has 2^" + std::to_string(cells) +
                             " biadjacency matrices; pass force to enumerate anyway");
}

Graph bipartite_from_rows(int a, int b, const std::vector<std::uint32_t>& rows) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < a; ++u)
    for (int j = 0; j < b; ++j)
      if (rows[static_cast<size_t>(u)] >> j & 1u) edges.emplace_back(u, a + j);
  return from_edge_list(a + b, edges);
}

Graph split_from_rows(int n, int k, const std::vector<std::uint32_t>& rows) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < k; ++v) edges.emplace_back(u, v);
  for (int u = 0; u < k; ++u)
    for (int j = 0; j < n - k; ++j)
      if (rows[static_cast<size_t>(u)] >> j & 1u) edges.emplace_back(u, k + j);
  return from_edge_list(n, edges);
}

bool transpose_ok(int a, int b, const std::vector<std::uint32_t>& rows) {
  if (a != b) return true;
  std::vector<std::uint32_t> cols(static_cast<size_t>(b), 0);
  for (int u = 0; u < a; ++u)
    for (int j = 0; j < b; ++j)
      if (rows[static_cast<size_t>(u)] >> j & 1u) cols[static_cast<size_t>(j)] |= 1u << u;
  std::sort(cols.begin(), cols.end());
  return rows <= cols;
}

// Visits all matrices with nondecreasing rows whose first row is drawn from
// first_rows. The plain enumerations pass every possible first row.
template <typename Visit>
Int enumerate_rows(int a, int b, const std::vector<std::uint32_t>& first_rows, bool sort_rows,
                   bool transpose_prune, Visit&& visit) {
  const std::uint32_t row_values = a > 0 ? 1u << b : 0u;
  Int visited = 0;
  if (a == 0) {
    std::vector<std::uint32_t> empty;
    visit(empty);
    return 1;
  }
  std::vector<std::uint32_t> rows(static_cast<size_t>(a), 0);
  for (std::uint32_t first : first_rows) {
    rows[0] = first;
    int level = 1;
    if (a == 1) {
      if (!transpose_prune || transpose_ok(a, b, rows)) {
        ++visited;
        visit(rows);
      }
      continue;
    }
    rows[1] = sort_rows ? rows[0] : 0;
    while (level >= 1) {
      if (rows[static_cast<size_t>(level)] >= row_values) {
        --level;
        if (level >= 1) ++rows[static_cast<size_t>(level)];
        continue;
      }
      if (level + 1 < a) {
        ++level;
        rows[static_cast<size_t>(level)] = sort_rows ? rows[static_cast<size_t>(level - 1)] : 0;
        continue;
      }
      if (!transpose_prune || transpose_ok(a, b, rows)) {
        ++visited;
        visit(rows);
      }
      ++rows[static_cast<size_t>(level)];
    }
  }
  return visited;
}

std::vector<std::uint32_t> all_first_rows(int b) {
  std::vector<std::uint32_t> rows(static_cast<size_t>(1) << b);
  for (std::uint32_t r = 0; r < rows.size(); ++r) rows[r] = r;
  return rows;
}

}  // namespace

Int enumerate_bipartite(int a, int b, const BiadjacencyVisitor& visit,
                        const EnumerateOptions& opts) {
  if (a < 0 || b < 0 || a > b) throw std::invalid_argument("need 0 <= a <= b");
  check_capacity(static_cast<Int>(a) * b, opts.force);
  return enumerate_rows(a, b, all_first_rows(b), opts.sort_rows,
                        opts.transpose_prune && a == b,
                        [&](const std::vector<std::uint32_t>& rows) {
                          visit(bipartite_from_rows(a, b, rows), rows);
                        });
}

Int enumerate_split(int n, int k, const BiadjacencyVisitor& visit, const EnumerateOptions& opts) {
  if (k < 0 || k > n) throw std::invalid_argument("need 0 <= k <= n");
  check_capacity(static_cast<Int>(k) * (n - k), opts.force);
  return enumerate_rows(k, n - k, all_first_rows(n - k), opts.sort_rows, false,
                        [&](const std::vector<std::uint32_t>& rows) {
                          visit(split_from_rows(n, k, rows), rows);
                        });
}

namespace {

// Per-shard accumulator; merged with the same ordering that a serial scan
// would produce, so reports are deterministic for any shard count.
struct MaxAccumulator {
  Int instances = 0;
  Int max_all = -1;
  Int max_connected = -1;
  std::vector<std::uint32_t> best_rows;

  void offer(Int value, bool connected, const std::vector<std::uint32_t>& rows) {
    ++instances;
    if (connected) max_connected = std::max(max_connected, value);
    if (value > max_all || (value == max_all && rows < best_rows)) {
      max_all = value;
      best_rows = rows;
    }
  }

  void merge(const MaxAccumulator& other) {
    instances += other.instances;
    max_connected = std::max(max_connected, other.max_connected);
    if (other.max_all > max_all || (other.max_all == max_all && other.best_rows < best_rows))
      best_rows = other.best_rows, max_all = other.max_all;
  }
};

// Shards the canonical enumeration by first-row mask and max-reduces.
template <typename GraphBuilder>
MaxAccumulator sharded_max(int a, int b, int shards, bool transpose_prune,
                           GraphBuilder&& build) {
  const auto firsts = all_first_rows(b);
  if (a == 0) {
    MaxAccumulator acc;
    std::vector<std::uint32_t> empty;
    const Graph g = build(empty);
    acc.offer(mostar_index(g), is_connected(g), empty);
    return acc;
  }
  shards = std::max(1, shards);
  std::vector<MaxAccumulator> accs(static_cast<size_t>(shards));
  auto run_shard = [&](int shard) {
    std::vector<std::uint32_t> mine;
    for (size_t i = static_cast<size_t>(shard); i < firsts.size(); i += static_cast<size_t>(shards))
      mine.push_back(firsts[i]);
    enumerate_rows(a, b, mine, true, transpose_prune,
                   [&](const std::vector<std::uint32_t>& rows) {
                     const Graph g = build(rows);
                     accs[static_cast<size_t>(shard)].offer(mostar_index(g), is_connected(g), rows);
                   });
  };
  if (shards == 1) {
    run_shard(0);
    return accs[0];
  }
  std::vector<std::thread> workers;
  for (int s = 0; s < shards; ++s) workers.emplace_back(run_shard, s);
  for (auto& w : workers) w.join();
  MaxAccumulator total = accs[0];
  for (int s = 1; s < shards; ++s) total.merge(accs[static_cast<size_t>(s)]);
  return total;
}

}  // namespace

BipartiteSearchReport max_mostar_bipartite(int n, const SearchOptions& opts) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  if (n > 10 && !opts.force)
    throw std::runtime_error("bipartite search above n=10 needs force");
  BipartiteSearchReport report;
  report.n = n;
  Int best = -1, best_connected = -1;
  int best_a = -1;
  std::vector<std::uint32_t> best_rows;
  for (int a = 0; a <= n / 2; ++a) {
    check_capacity(static_cast<Int>(a) * (n - a), opts.force);
    MaxAccumulator acc = sharded_max(a, n - a, opts.shards, a == n - a,
                                     [&](const std::vector<std::uint32_t>& rows) {
                                       return bipartite_from_rows(a, n - a, rows);
                                     });
    report.instances += acc.instances;
    best_connected = std::max(best_connected, acc.max_connected);
    if (acc.max_all > best) {
      best = acc.max_all;
      best_a = a;
      best_rows = acc.best_rows;
    }
  }
  report.max_mostar = best;
  report.max_mostar_connected = std::max<Int>(best_connected, 0);
  report.maximizer_side_a = best_a;
  report.maximizer = bipartite_from_rows(best_a, n - best_a, best_rows);
  Bipartition parts;
  for (int v = 0; v < best_a; ++v) parts.side_a.push_back(v);
  for (int v = best_a; v < n; ++v) parts.side_b.push_back(v);
  report.relaxation = relaxation_bound(report.maximizer, parts);
  if (best_a >= 1) {
    report.certified = certified_mostar_bound(n, best_a);
    report.gap = *report.certified - Rational(best);
  }
  report.cube_bound_ok = bipartite_bound_holds(report.max_mostar, n);
  return report;
}

SplitSearchReport max_mostar_split(int n, const SearchOptions& opts) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  if (n > 9 && !opts.force) throw std::runtime_error("split search above n=9 needs force");
  SplitSearchReport report;
  report.n = n;
  Int best = -1, best_connected = -1;
  int best_k = -1;
  std::vector<std::uint32_t> best_rows;
  for (int k = 0; k <= n; ++k) {
    check_capacity(static_cast<Int>(k) * (n - k), opts.force);
    MaxAccumulator acc = sharded_max(k, n - k, opts.shards, false,
                                     [&](const std::vector<std::uint32_t>& rows) {
                                       return split_from_rows(n, k, rows);
                                     });
    report.instances += acc.instances;
    best_connected = std::max(best_connected, acc.max_connected);
    if (acc.max_all > best) {
      best = acc.max_all;
      best_k = k;
      best_rows = acc.best_rows;
    }
  }
  report.max_mostar = best;
  report.max_mostar_connected = std::max<Int>(best_connected, 0);
  report.maximizer_clique = best_k;
  report.maximizer = split_from_rows(n, best_k, best_rows);
  Int cross = 0;
  for (std::uint32_t row : best_rows) cross += std::popcount(row);
  report.maximizer_cross_edges = cross;
  if (best_k >= 1 && best_k <= n - 1) {
    report.chain = split_bound_chain(n, best_k, cross);
    report.gap = report.chain->g_value - Rational(best);
  }
  report.best_join_k = 0;
  report.best_join_value = 0;
  for (int k = 0; k <= n; ++k) {
    Int value = mo_split_join(k, n);
    if (value > report.best_join_value) {
      report.best_join_value = value;
      report.best_join_k = k;
    }
  }
  return report;
}

RatioScan conjecture19_scan(int n_max) {
  if (n_max < 3) throw std::invalid_argument("need n_max >= 3");
  RatioScan scan;
  for (int n = 3; n <= n_max; ++n) {
    RatioScanRow row;
    row.n = n;
    row.floor_a = n / 3;
    row.mo_floor = mo_complete_bipartite(row.floor_a, n - row.floor_a);
    const BestBipartite best = best_complete_bipartite(n);
    row.best_a = best.a;
    row.mo_best = best.value;
    row.flagged = row.mo_best > row.mo_floor;
    if (row.flagged && scan.smallest_flagged == 0) scan.smallest_flagged = n;
    scan.rows.push_back(row);
  }
  return scan;
}

namespace {

constexpr double kCubeBoundFactor = 0.09622504486493763;  // sqrt(3)/18

GapRow gap_row_exact(int n, int k, Int m, const std::string& label, const Rational& bound, Int mo) {
  GapRow row;
  row.n = n;
  row.k = k;
  row.m = m;
  row.label = label;
  row.bound = to_double(bound);
  row.bound_exact = rational_to_string(bound);
  row.mo = mo;
  const Rational gap = bound - Rational(mo);
  if (gap < 0) throw std::logic_error("construction exceeds its bound");
  row.gap = to_double(gap);
  row.gap_exact = rational_to_string(gap);
  row.gap_over_n2 = to_double(gap / Rational(static_cast<Int>(n) * n));
  return row;
}

}  // namespace

GapTable sharpness_gap(GapFamily family, int n_lo, int n_hi) {
  if (n_lo < 4 || n_hi < n_lo) throw std::invalid_argument("need 4 <= n_lo <= n_hi");
  GapTable table;
  table.family = to_string(family);
  for (int n = n_lo; n <= n_hi; ++n) {
    if (family == GapFamily::kBestCompleteBipartite) {
      const BestBipartite best = best_complete_bipartite(n);
      GapRow row;
      row.n = n;
      row.k = best.a;
      row.m = static_cast<Int>(best.a) * (n - best.a);
      row.label = "kab";
      row.bound = kCubeBoundFactor * n * n * n;
      row.mo = best.value;
      if (!bipartite_bound_holds(row.mo, n)) throw std::logic_error("construction exceeds its bound");
      row.gap = row.bound - static_cast<double>(row.mo);
      row.gap_over_n2 = row.gap / (static_cast<double>(n) * n);
      table.rows.push_back(row);
    } else {
      // Full-join row at the best small-clique k, peak row at the smallest
      // k in the quadratic regime.
      int k_join = 1;
      for (int k = 2; 3 * k <= n - 1; ++k)
        if (mo_split_join(k, n) > mo_split_join(k_join, n)) k_join = k;
      table.rows.push_back(gap_row_exact(n, k_join, static_cast<Int>(k_join) * (n - k_join), "join",
                                         split_piecewise_bound(n, k_join).piecewise_value,
                                         mo_split_join(k_join, n)));
      const int k_peak = (n - 1) / 3 + 1;
      if (k_peak < n) {
        const SplitBoundChain chain = split_piecewise_bound(n, k_peak);
        const Graph g = extremal_split(n, k_peak, chain.m).graph;
        table.rows.push_back(gap_row_exact(n, k_peak, chain.m, "peak", chain.piecewise_value,
                                           mostar_index(g)));
      }
    }
  }
  for (const auto& row : table.rows) table.max_gap_over_n2 = std::max(table.max_gap_over_n2, row.gap_over_n2);
  return table;
}

const char* to_string(GapFamily family) {
  return family == GapFamily::kBestCompleteBipartite ? "best_complete_bipartite" : "extremal_split";
}

}  // namespace mostar
