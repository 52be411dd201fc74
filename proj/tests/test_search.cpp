#include <doctest.h>

#include <algorithm>
#include <map>
#include <sstream>

#include "mostar/families.hpp"
#include "mostar/reports.hpp"
#include "mostar/search.hpp"

using namespace mostar;

namespace {

Int factorial(int x) { return x <= 1 ? 1 : x * factorial(x - 1); }

// Number of raw matrices represented by one canonical (row-sorted) matrix:
// the distinct permutations of its row multiset.
Int row_arrangements(const std::vector<std::uint32_t>& rows) {
  Int arrangements = factorial(static_cast<int>(rows.size()));
  std::map<std::uint32_t, int> mult;
  for (auto r : rows) ++mult[r];
  for (const auto& [row, count] : mult) arrangements /= factorial(count);
  return arrangements;
}

}  // namespace

TEST_CASE("enumeration counts") {
  EnumerateOptions row_only;
  row_only.transpose_prune = false;

  Int count = enumerate_bipartite(2, 2, [](const Graph&, const auto&) {}, row_only);
  CHECK(count == 10);  // nondecreasing pairs over 4 row values

  CHECK(enumerate_bipartite(1, 1, [](const Graph&, const auto&) {}) == 2);

  // full pruning can only shrink the canonical set
  CHECK(enumerate_bipartite(2, 2, [](const Graph&, const auto&) {}) <= 10);

  EnumerateOptions raw;
  raw.sort_rows = false;
  raw.transpose_prune = false;
  CHECK(enumerate_bipartite(2, 2, [](const Graph&, const auto&) {}, raw) == 16);
  CHECK(enumerate_bipartite(3, 4, [](const Graph&, const auto&) {}, raw) == 4096);

  CHECK_THROWS_AS(enumerate_bipartite(6, 6, [](const Graph&, const auto&) {}), std::runtime_error);
}

TEST_CASE("split enumeration counts") {
  CHECK(enumerate_split(3, 3, [](const Graph& g, const auto&) { CHECK(g.edge_count() == 3); }) == 1);

  EnumerateOptions raw;
  raw.sort_rows = false;
  CHECK(enumerate_split(6, 2, [](const Graph&, const auto&) {}, raw) == 256);
  Int canonical = enumerate_split(6, 2, [](const Graph&, const auto&) {});
  CHECK(canonical == 136);  // C(16 + 1, 2)
}

TEST_CASE("row-sorted pruning is sound: expanded multisets match raw enumeration") {
  for (const auto& [a, b] : std::vector<std::pair<int, int>>{{2, 3}, {2, 4}, {3, 4}, {2, 2}}) {
    std::map<Int, Int> raw_counts;
    EnumerateOptions raw;
    raw.sort_rows = false;
    raw.transpose_prune = false;
    enumerate_bipartite(a, b, [&](const Graph& g, const auto&) { ++raw_counts[mostar_index(g)]; },
                        raw);

    std::map<Int, Int> expanded;
    EnumerateOptions row_only;
    row_only.transpose_prune = false;
    enumerate_bipartite(a, b,
                        [&](const Graph& g, const std::vector<std::uint32_t>& rows) {
                          expanded[mostar_index(g)] += row_arrangements(rows);
                        },
                        row_only);
    CHECK(raw_counts == expanded);

    // transpose pruning keeps the maximum
    Int pruned_max = 0;
    enumerate_bipartite(a, b, [&](const Graph& g, const auto&) {
      pruned_max = std::max(pruned_max, mostar_index(g));
    });
    CHECK(pruned_max == raw_counts.rbegin()->first);
  }
}

TEST_CASE("bipartite maximizer search") {
  const BipartiteSearchReport n4 = max_mostar_bipartite(4);
  CHECK(n4.max_mostar == 6);
  CHECK(n4.maximizer_side_a == 1);
  CHECK(n4.maximizer.edges() == complete_bipartite(1, 3).edges());
  CHECK(mostar_index(n4.maximizer) == n4.max_mostar);
  CHECK(n4.cube_bound_ok);
  REQUIRE(n4.relaxation.has_value());
  REQUIRE(n4.certified.has_value());
  CHECK(Rational(n4.max_mostar) <= *n4.relaxation);
  CHECK(*n4.relaxation <= *n4.certified);

  const BipartiteSearchReport n6 = max_mostar_bipartite(6);
  CHECK(n6.max_mostar >= 20);  // K_{1,5} attains 20
}

TEST_CASE("restricting to balanced sides changes the maximizer") {
  // over sides (2,2) the best value is 4, attained by the path P4
  Int best = -1;
  enumerate_bipartite(2, 2, [&](const Graph& g, const auto&) {
    best = std::max(best, mostar_index(g));
  });
  CHECK(best == 4);
}

TEST_CASE("split maximizer search") {
  const SplitSearchReport n3 = max_mostar_split(3);
  CHECK(n3.max_mostar == 2);
  CHECK(n3.best_join_value == 2);  // S_{1,2}

  const SplitSearchReport n2 = max_mostar_split(2);
  CHECK(n2.max_mostar == 0);

  const SplitSearchReport n6 = max_mostar_split(6);
  CHECK(n6.max_mostar >= 24);
  CHECK(mostar_index(n6.maximizer) == n6.max_mostar);
  REQUIRE(n6.chain.has_value());
  CHECK(Rational(n6.max_mostar) <= n6.chain->g_value);
  CHECK(n6.chain->piecewise_value <= n6.chain->cap_value);
  REQUIRE(n6.gap.has_value());
  CHECK(*n6.gap >= 0);
}

TEST_CASE("search reports are deterministic and shard-invariant") {
  const BipartiteSearchReport one = max_mostar_bipartite(5);
  const BipartiteSearchReport two = max_mostar_bipartite(5);
  CHECK(one.maximizer.edges() == two.maximizer.edges());
  CHECK(one.instances == two.instances);

  SearchOptions sharded;
  sharded.shards = 3;
  const BipartiteSearchReport three = max_mostar_bipartite(5, sharded);
  CHECK(three.max_mostar == one.max_mostar);
  CHECK(three.maximizer.edges() == one.maximizer.edges());
  CHECK(three.instances == one.instances);

  const SplitSearchReport s1 = max_mostar_split(5);
  SearchOptions s4;
  s4.shards = 4;
  const SplitSearchReport s2 = max_mostar_split(5, s4);
  CHECK(s1.max_mostar == s2.max_mostar);
  CHECK(s1.maximizer.edges() == s2.maximizer.edges());
}

TEST_CASE("disconnected maximizers are tracked separately") {
  const BipartiteSearchReport report = max_mostar_bipartite(6);
  CHECK(report.max_mostar_connected <= report.max_mostar);
  CHECK(report.max_mostar_connected >= 20);  // K_{1,5} is connected
}

TEST_CASE("proportion scan flags orders where n/3 loses") {
  const RatioScan scan = conjecture19_scan(30);
  const RatioScanRow& n6 = scan.rows[3];
  CHECK(n6.n == 6);
  CHECK(n6.floor_a == 2);
  CHECK(n6.mo_floor == 16);
  CHECK(n6.best_a == 1);
  CHECK(n6.mo_best == 20);
  CHECK(n6.flagged);

  const RatioScanRow& n3 = scan.rows[0];
  CHECK_FALSE(n3.flagged);

  CHECK(scan.smallest_flagged == 6);
}

TEST_CASE("sharpness gaps stay nonnegative with bounded gap over n^2") {
  const GapTable splits = sharpness_gap(GapFamily::kExtremalSplit, 10, 40);
  for (const auto& row : splits.rows) {
    CHECK(row.gap >= 0);
    if (row.label == "join") CHECK(row.gap == 0);  // the full join attains its bound
  }
  CHECK(splits.max_gap_over_n2 < 1.0);

  const GapTable kab = sharpness_gap(GapFamily::kBestCompleteBipartite, 10, 40);
  for (const auto& row : kab.rows) CHECK(row.gap >= 0);
  CHECK(kab.max_gap_over_n2 < 1.0);
}
