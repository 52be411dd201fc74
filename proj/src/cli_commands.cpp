#include "mostar/cli_commands.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "mostar/certificate.hpp"
#include "mostar/families.hpp"
#include "mostar/graph.hpp"
#include "mostar/profile_lp.hpp"
#include "mostar/reports.hpp"
#include "mostar/search.hpp"
#include "mostar/simplex.hpp"
#include "mostar/split_bounds.hpp"

namespace mostar {

using nlohmann::json;

namespace {

int fail(std::ostream& err, const std::string& message) {
  err << json{{"error", message}}.dump() << "\n";
  return 1;
}

json mostar_breakdown(const Graph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) {
    const EdgeUnbalance ub = edge_unbalance(g, u, v);
    edges.push_back(json{{"u", u},
                         {"v", v},
                         {"n_uv", ub.n_uv},
                         {"n_vu", ub.n_vu},
                         {"equidistant", ub.equidistant},
                         {"contribution", ub.contribution()}});
  }
  return edges;
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "human") return OutputFormat::kHuman;
  if (name == "json") return OutputFormat::kJson;
  if (name == "csv") return OutputFormat::kCsv;
  throw std::invalid_argument("unknown format '" + name + "'");
}

int cmd_compute(const std::string& path, OutputFormat format, std::ostream& out,
                std::ostream& err) {
  try {
    const Graph g = read_edge_list_file(path);
    const Int mo = mostar_index(g);
    if (format == OutputFormat::kJson) {
      out << json{{"kind", "compute"}, {"mostar", mo}, {"order", g.order()},
                  {"edges", mostar_breakdown(g)}}
              .dump(2)
          << "\n";
    } else {
      out << "mostar = " << mo << "\n";
      for (const auto& [u, v] : g.edges()) {
        const EdgeUnbalance ub = edge_unbalance(g, u, v);
        out << "  edge (" << u << "," << v << "): n_uv=" << ub.n_uv << " n_vu=" << ub.n_vu
            << " equidistant=" << ub.equidistant << " |diff|=" << ub.contribution() << "\n";
      }
    }
    return 0;
  } catch (const std::exception& e) {
    return fail(err, e.what());
  }
}

int cmd_family(const std::string& name, const std::vector<Int>& params,
               const std::optional<std::string>& output_path, OutputFormat format,
               std::ostream& out, std::ostream& err) {
  try {
    Graph g;
    Int closed_form = 0;
    std::string description;
    if (name == "kab") {
      if (params.size() != 2) throw std::invalid_argument("family kab needs: a b");
      const int a = static_cast<int>(params[0]), b = static_cast<int>(params[1]);
      g = complete_bipartite(a, b);
      closed_form = mo_complete_bipartite(a, b);
      description = "complete bipartite K_{" + std::to_string(a) + "," + std::to_string(b) + "}";
    } else if (name == "split-join") {
      if (params.size() != 2) throw std::invalid_argument("family split-join needs: k n");
      const int k = static_cast<int>(params[0]), n = static_cast<int>(params[1]);
      g = split_join(k, n);
      closed_form = mo_split_join(k, n);
      description = "split join S_{" + std::to_string(k) + "," + std::to_string(n - k) + "}";
    } else if (name == "extremal-split") {
      if (params.size() != 3) throw std::invalid_argument("family extremal-split needs: n k m");
      const ExtremalSplit ex =
          extremal_split(static_cast<int>(params[0]), static_cast<int>(params[1]), params[2]);
      g = ex.graph;
      closed_form = mostar_index(g);
      description = "extremal split n=" + std::to_string(params[0]) + " k=" +
                    std::to_string(params[1]) + " m=" + std::to_string(params[2]);
    } else {
      throw std::invalid_argument("unknown family '" + name + "' (kab, split-join, extremal-split)");
    }
    const Int bfs_value = mostar_index(g);
    if (bfs_value != closed_form)
      throw std::logic_error("closed form " + std::to_string(closed_form) +
                             " disagrees with BFS value " + std::to_string(bfs_value));
    if (output_path) {
      std::ofstream file(*output_path);
      if (!file) throw std::runtime_error("cannot write '" + *output_path + "'");
      write_edge_list(file, g, description);
    }
    if (format == OutputFormat::kJson) {
      json j{{"kind", "family"}, {"family", name}, {"mostar", closed_form},
             {"graph", graph_to_json(g)}};
      if (output_path) j["path"] = *output_path;
      out << j.dump(2) << "\n";
    } else {
      out << description << ": mostar = " << closed_form << "\n";
      if (!output_path) write_edge_list(out, g, description);
    }
    return 0;
  } catch (const std::exception& e) {
    return fail(err, e.what());
  }
}

int cmd_lp(int n, std::optional<int> k, const std::optional<std::string>& dump_path,
           OutputFormat format, bool force, std::ostream& out, std::ostream& err) {
  try {
    if (n > 30 && !force) throw std::runtime_error("lp table above n=30 needs --force");
    std::vector<int> ks;
    if (k)
      ks.push_back(*k);
    else
      for (int kk = 1; 2 * kk <= n; ++kk) ks.push_back(kk);
    if (dump_path) {
      if (!k) throw std::invalid_argument("--dump-lp needs an explicit k");
      std::ofstream file(*dump_path);
      if (!file) throw std::runtime_error("cannot write '" + *dump_path + "'");
      write_lp(file, build_profile_lp(n, *k));
    }
    if (format == OutputFormat::kCsv) out << "n,k,opt_p,dual_p_plus_q,duality_gap,case\n";
    bool all_ok = true;
    for (int kk : ks) {
      const SimplexResult res = solve_simplex(build_profile_lp(n, kk));
      if (res.status != SolveStatus::kOptimal)
        throw std::logic_error("profile LP did not solve to optimality");
      const DualPair pair = explicit_dual_pair(n, kk);
      const Rational dual = pair.p + pair.q;
      const bool ok = res.value <= dual;
      all_ok = all_ok && ok;
      if (format == OutputFormat::kCsv) {
        out << n << "," << kk << "," << rational_to_string(res.value) << ","
            << rational_to_string(dual) << "," << rational_to_string(dual - res.value) << ","
            << to_string(pair.case_tag) << "\n";
      } else {
        out << "n=" << n << " k=" << kk << ": OPT(P) = " << rational_to_string(res.value)
            << " <= p+q = " << rational_to_string(dual) << " [" << to_string(pair.case_tag)
            << (ok ? "]" : "] VIOLATED") << "\n";
      }
    }
    return all_ok ? 0 : 1;
  } catch (const std::exception& e) {
    return fail(err, e.what());
  }
}

int cmd_certify(int n, int k, double tol, OutputFormat format, std::ostream& out,
                std::ostream& err) {
  try {
    const CertificateRecord record = make_certificate_record(n, k, tol);
    if (format == OutputFormat::kHuman) {
      out << "n=" << record.n << " k=" << record.k << " case=" << to_string(record.case_tag)
          << "\n  p = " << rational_to_string(record.p) << "\n  q = " << rational_to_string(record.q)
          << "\n  bound = " << rational_to_string(record.bound) << " ("
          << format_rational_decimal(record.bound) << ")\n  worst slack = "
          << rational_to_string(record.worst_slack) << " at " << record.worst_constraint
          << "\n  worst pair slack = " << format_rational_decimal(record.worst_pair_slack)
          << "\n  feasible: " << (record.feasible ? "yes" : "NO") << "\n";
    } else {
      out << to_json(record).dump(2) << "\n";
    }
    return record.feasible ? 0 : 1;
  } catch (const std::exception& e) {
    return fail(err, e.what());
  }
}

int cmd_margins(int grid_points, OutputFormat format, std::ostream& out, std::ostream& err) {
  try {
    const MarginScan scan = margin_scan(grid_points);
    const bool monotone = scan.f1_nondecreasing && scan.f2_nondecreasing && scan.f3_nonincreasing;
    if (format == OutputFormat::kHuman) {
      out << "grid: " << scan.grid_points << " points over [" << scan.alpha_lo << ", "
          << scan.alpha_hi << "]\n";
      auto line = [&out](const char* name, const MarginExtremum& e) {
        out << "  min " << name << " = " << e.min_value << " at alpha = " << e.argmin << "\n";
      };
      line("q ", scan.q);
      line("f1", scan.f1);
      line("f2", scan.f2);
      line("f3", scan.f3);
      out << "  monotone (f1 up, f2 up, f3 down): " << (monotone ? "yes" : "NO") << "\n"
          << "  all positive: " << (scan.all_positive ? "yes" : "NO") << "\n";
    } else {
      out << to_json(scan).dump(2) << "\n";
    }
    return scan.all_positive && monotone ? 0 : 1;
  } catch (const std::exception& e) {
    return fail(err, e.what());
  }
}

int cmd_splitbound(int n, int k, std::optional<Int> m, bool sweep, OutputFormat format,
                   std::ostream& out, std::ostream& err) {
  try {
    std::vector<SplitBoundChain> chains;
    if (sweep) {
      for (Int mm = 0; mm <= static_cast<Int>(k) * (n - k); ++mm)
        chains.push_back(split_bound_chain(n, k, mm));
    } else if (m) {
      chains.push_back(split_bound_chain(n, k, *m));
    } else {
      chains.push_back(split_piecewise_bound(n, k));
    }
    if (format == OutputFormat::kCsv) {
      write_chain_csv_header(out);
      for (const auto& chain : chains) write_chain_csv_row(out, chain);
    } else if (format == OutputFormat::kJson) {
      if (chains.size() == 1) {
        out << to_json(chains.front()).dump(2) << "\n";
      } else {
        json rows = json::array();
        for (const auto& chain : chains) rows.push_back(to_json(chain));
        out << json{{"kind", "split_bound_sweep"}, {"rows", rows}}.dump(2) << "\n";
      }
    } else {
      for (const auto& chain : chains)
        out << "n=" << chain.n << " k=" << chain.k << " m=" << chain.m
            << ": g = " << format_rational_decimal(chain.g_value)
            << " <= piecewise = " << format_rational_decimal(chain.piecewise_value)
            << " <= cap = " << format_rational_decimal(chain.cap_value)
            << " [" << to_string(chain.case_taken) << ", m* = "
            << format_rational_decimal(chain.m_star) << "]\n";
    }
    return 0;
  } catch (const std::exception& e) {
    return fail(err, e.what());
  }
}

int cmd_search(const std::string& kind, int n, int shards, bool force, OutputFormat format,
               std::ostream& out, std::ostream& err) {
  try {
    SearchOptions opts;
    opts.shards = shards;
    opts.force = force;
    if (kind == "bipartite") {
      const BipartiteSearchReport report = max_mostar_bipartite(n, opts);
      if (format == OutputFormat::kHuman) {
        out << "bipartite n=" << n << ": max mostar = " << report.max_mostar << " (connected: "
            << report.max_mostar_connected << ") over " << report.instances << " instances\n"
            << "  maximizer sides (" << report.maximizer_side_a << ","
            << n - report.maximizer_side_a << "), edges:";
        for (const auto& [u, v] : report.maximizer.edges()) out << " " << u << "-" << v;
        out << "\n";
        if (report.relaxation) out << "  relaxation bound = " << rational_to_string(*report.relaxation) << "\n";
        if (report.certified)
          out << "  certified bound  = " << format_rational_decimal(*report.certified) << "\n";
        out << "  cube bound 108*Mo^2 <= n^6: " << (report.cube_bound_ok ? "holds" : "FAILS") << "\n";
      } else {
        out << to_json(report).dump(2) << "\n";
      }
      const bool chain_ok = report.cube_bound_ok &&
                            (!report.relaxation || Rational(report.max_mostar) <= *report.relaxation) &&
                            (!report.certified || !report.relaxation || *report.relaxation <= *report.certified);
      return chain_ok ? 0 : 1;
    }
    if (kind == "split") {
      const SplitSearchReport report = max_mostar_split(n, opts);
      if (format == OutputFormat::kHuman) {
        out << "split n=" << n << ": max mostar = " << report.max_mostar << " (connected: "
            << report.max_mostar_connected << ") over " << report.instances << " instances\n"
            << "  maximizer clique=" << report.maximizer_clique << " cross edges="
            << report.maximizer_cross_edges << "\n"
            << "  best complete join: S_{" << report.best_join_k << ","
            << n - report.best_join_k << "} with mostar " << report.best_join_value << "\n";
        if (report.chain)
          out << "  chain: g = " << format_rational_decimal(report.chain->g_value)
              << " <= piecewise = " << format_rational_decimal(report.chain->piecewise_value)
              << " <= cap = " << format_rational_decimal(report.chain->cap_value) << "\n";
      } else {
        out << to_json(report).dump(2) << "\n";
      }
      const bool chain_ok =
          !report.chain || Rational(report.max_mostar) <= report.chain->g_value;
      return chain_ok ? 0 : 1;
    }
    throw std::invalid_argument("unknown search kind '" + kind + "' (bipartite, split)");
  } catch (const std::exception& e) {
    return fail(err, e.what());
  }
}

int cmd_conjecture19(int n_max, OutputFormat format, std::ostream& out, std::ostream& err) {
  try {
    const RatioScan scan = conjecture19_scan(n_max);
    if (format == OutputFormat::kCsv) {
      write_ratio_csv(out, scan);
    } else if (format == OutputFormat::kJson) {
      out << to_json(scan).dump(2) << "\n";
    } else {
      for (const auto& row : scan.rows)
        if (row.flagged)
          out << "n=" << row.n << ": best a=" << row.best_a << " gives " << row.mo_best
              << " > " << row.mo_floor << " at a=floor(n/3)=" << row.floor_a << "\n";
      if (scan.smallest_flagged == 0)
        out << "no order up to " << n_max << " beats the n/3 proportion\n";
      else
        out << "smallest flagged order: " << scan.smallest_flagged << "\n";
    }
    return 0;
  } catch (const std::exception& e) {
    return fail(err, e.what());
  }
}

int cmd_gap(const std::string& family, int n_lo, int n_hi, OutputFormat format, std::ostream& out,
            std::ostream& err) {
  try {
    GapFamily fam;
    if (family == "kab-best")
      fam = GapFamily::kBestCompleteBipartite;
    else if (family == "extremal-split")
      fam = GapFamily::kExtremalSplit;
    else
      throw std::invalid_argument("unknown gap family '" + family + "' (kab-best, extremal-split)");
    const GapTable table = sharpness_gap(fam, n_lo, n_hi);
    if (format == OutputFormat::kJson)
      out << to_json(table).dump(2) << "\n";
    else
      write_gap_csv(out, table);
    return 0;
  } catch (const std::exception& e) {
    return fail(err, e.what());
  }
}

}  // namespace mostar
