#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mostar/cli_commands.hpp"

using mostar::Int;
using mostar::OutputFormat;

int main(int argc, char** argv) {
  CLI::App app{"Exact Mostar-index toolkit: computation, extremal families, "
               "certified bounds, and exhaustive verification"};
  app.require_subcommand(1);
  app.fallthrough();  // let --format after a subcommand reach the app

  std::string format_name = "human";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"human", "json", "csv"}));

  std::string path;
  auto* compute = app.add_subcommand("compute", "Mostar index of an edge-list file");
  compute->add_option("file", path, "edge-list file")->required();

  std::string family_name;
  std::vector<Int> family_params;
  std::optional<std::string> family_out;
  auto* family = app.add_subcommand("family", "Build a named family member");
  family->add_option("name", family_name, "kab | split-join | extremal-split")->required();
  family->add_option("params", family_params, "family parameters")->required();
  family->add_option("-o,--output", family_out, "write the edge list here");

  int n = 0, k = 0;
  std::optional<int> opt_k;
  std::optional<std::string> dump_lp;
  bool force = false;
  auto* lp = app.add_subcommand("lp", "Profile-LP optimum vs the explicit dual");
  lp->add_option("n", n, "graph order")->required();
  lp->add_option("k", opt_k, "side-A size (default: sweep 1..n/2)");
  lp->add_option("--dump-lp", dump_lp, "write the LP in text form");
  lp->add_flag("--force", force, "lift the capacity guard");

  double tol = 0.0;
  auto* certify = app.add_subcommand("certify", "Emit the dual certificate record");
  certify->add_option("n", n, "graph order")->required();
  certify->add_option("k", k, "side-A size (1 <= k <= n/2)")->required();
  certify->add_option("--tol", tol, "feasibility tolerance (0 = exact)");

  int grid = 10000;
  auto* margins = app.add_subcommand("margins", "Scan the dual-pair margins over [a2, 1/2]");
  margins->add_option("--grid", grid, "grid points");

  std::optional<Int> opt_m;
  bool sweep_m = false;
  auto* splitbound = app.add_subcommand("splitbound", "Split-graph bound chain");
  splitbound->add_option("n", n, "graph order")->required();
  splitbound->add_option("k", k, "clique size")->required();
  splitbound->add_option("m", opt_m, "cross-edge count (default: bound-optimal m)");
  splitbound->add_flag("--sweep-m", sweep_m, "emit every m in 0..k(n-k)");

  std::string search_kind;
  int shards = 1;
  auto* search = app.add_subcommand("search", "Exhaustive maximizer search");
  search->add_option("kind", search_kind, "bipartite | split")->required();
  search->add_option("n", n, "graph order")->required();
  search->add_option("--shards", shards, "parallel shards");
  search->add_flag("--force", force, "lift the capacity guard");

  int n_max = 100;
  auto* conj = app.add_subcommand("conjecture19", "Scan complete bipartite proportions");
  conj->add_option("n_max", n_max, "largest order to scan");

  std::string gap_family;
  int n_lo = 10, n_hi = 200;
  auto* gap = app.add_subcommand("gap", "Bound-vs-construction sharpness table");
  gap->add_option("family", gap_family, "kab-best | extremal-split")->required();
  gap->add_option("--n-from", n_lo, "first order");
  gap->add_option("--n-to", n_hi, "last order");

  CLI11_PARSE(app, argc, argv);

  OutputFormat format = OutputFormat::kHuman;
  try {
    format = mostar::parse_format(format_name);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  if (compute->parsed()) return mostar::cmd_compute(path, format, std::cout, std::cerr);
  if (family->parsed())
    return mostar::cmd_family(family_name, family_params, family_out, format, std::cout, std::cerr);
  if (lp->parsed()) return mostar::cmd_lp(n, opt_k, dump_lp, format, force, std::cout, std::cerr);
  if (certify->parsed()) return mostar::cmd_certify(n, k, tol, format, std::cout, std::cerr);
  if (margins->parsed()) return mostar::cmd_margins(grid, format, std::cout, std::cerr);
  if (splitbound->parsed())
    return mostar::cmd_splitbound(n, k, opt_m, sweep_m, format, std::cout, std::cerr);
  if (search->parsed())
    return mostar::cmd_search(search_kind, n, shards, force, format, std::cout, std::cerr);
  if (conj->parsed()) return mostar::cmd_conjecture19(n_max, format, std::cout, std::cerr);
  if (gap->parsed()) return mostar::cmd_gap(gap_family, n_lo, n_hi, format, std::cout, std::cerr);
  return 2;
}
