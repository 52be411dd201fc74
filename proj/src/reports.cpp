#include "mostar/reports.hpp"

#include <ostream>

namespace mostar {

using nlohmann::json;

CertificateRecord make_certificate_record(int n, int k, double tol) {
  CertificateRecord record;
  record.n = n;
  record.k = k;
  const DualPair pair = explicit_dual_pair(n, k);
  record.case_tag = pair.case_tag;
  record.p = pair.p;
  record.q = pair.q;
  record.bound = certified_mostar_bound(n, k);
  const DualCheckReport check = check_dual_certificate(lift_dual_pair(pair, n, k), tol);
  record.worst_slack = check.worst_slack;
  record.worst_pair_slack = check.worst_pair_slack;
  record.worst_constraint = check.worst_constraint;
  record.feasible = check.feasible;
  record.tolerance = tol;
  return record;
}

json to_json(const CertificateRecord& record) {
  return json{{"kind", "certificate"},
              {"n", record.n},
              {"k", record.k},
              {"case", to_string(record.case_tag)},
              {"p", rational_to_string(record.p)},
              {"q", rational_to_string(record.q)},
              {"bound", rational_to_string(record.bound)},
              {"worst_slack", rational_to_string(record.worst_slack)},
              {"worst_pair_slack", rational_to_string(record.worst_pair_slack)},
              {"worst_constraint", record.worst_constraint},
              {"feasible", record.feasible},
              {"tolerance", record.tolerance}};
}

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back(json::array({u, v}));
  return json{{"order", g.order()}, {"edges", edges}};
}

json to_json(const BipartiteSearchReport& report) {
  json j{{"kind", "bipartite_search"},
         {"n", report.n},
         {"instances", report.instances},
         {"max_mostar", report.max_mostar},
         {"max_mostar_connected", report.max_mostar_connected},
         {"maximizer", graph_to_json(report.maximizer)},
         {"maximizer_side_a", report.maximizer_side_a},
         {"cube_bound_ok", report.cube_bound_ok}};
  j["relaxation"] = report.relaxation ? json(rational_to_string(*report.relaxation)) : json();
  j["certified"] = report.certified ? json(rational_to_string(*report.certified)) : json();
  j["gap"] = report.gap ? json(rational_to_string(*report.gap)) : json();
  return j;
}

json to_json(const SplitBoundChain& chain) {
  return json{{"kind", "split_bound_chain"},
              {"n", chain.n},
              {"k", chain.k},
              {"m", chain.m},
              {"g", rational_to_string(chain.g_value)},
              {"piecewise", rational_to_string(chain.piecewise_value)},
              {"cap", rational_to_string(chain.cap_value)},
              {"m_star", rational_to_string(chain.m_star)},
              {"case", to_string(chain.case_taken)}};
}

json to_json(const SplitSearchReport& report) {
  json j{{"kind", "split_search"},
         {"n", report.n},
         {"instances", report.instances},
         {"max_mostar", report.max_mostar},
         {"max_mostar_connected", report.max_mostar_connected},
         {"maximizer", graph_to_json(report.maximizer)},
         {"maximizer_clique", report.maximizer_clique},
         {"maximizer_cross_edges", report.maximizer_cross_edges},
         {"best_join_value", report.best_join_value},
         {"best_join_k", report.best_join_k}};
  j["chain"] = report.chain ? to_json(*report.chain) : json();
  j["gap"] = report.gap ? json(rational_to_string(*report.gap)) : json();
  return j;
}

json to_json(const MarginScan& scan) {
  auto extremum = [](const MarginExtremum& e) {
    return json{{"min", e.min_value}, {"argmin", e.argmin}};
  };
  return json{{"kind", "margin_scan"},
              {"grid_points", scan.grid_points},
              {"alpha_lo", scan.alpha_lo},
              {"alpha_hi", scan.alpha_hi},
              {"q", extremum(scan.q)},
              {"f1", extremum(scan.f1)},
              {"f2", extremum(scan.f2)},
              {"f3", extremum(scan.f3)},
              {"f1_nondecreasing", scan.f1_nondecreasing},
              {"f2_nondecreasing", scan.f2_nondecreasing},
              {"f3_nonincreasing", scan.f3_nonincreasing},
              {"all_positive", scan.all_positive}};
}

json to_json(const RatioScan& scan) {
  json rows = json::array();
  for (const auto& row : scan.rows)
    rows.push_back(json{{"n", row.n},
                        {"floor_a", row.floor_a},
                        {"mo_floor", row.mo_floor},
                        {"best_a", row.best_a},
                        {"mo_best", row.mo_best},
                        {"flagged", row.flagged}});
  return json{{"kind", "ratio_scan"}, {"smallest_flagged", scan.smallest_flagged}, {"rows", rows}};
}

json to_json(const GapTable& table) {
  json rows = json::array();
  for (const auto& row : table.rows)
    rows.push_back(json{{"n", row.n},
                        {"k", row.k},
                        {"m", row.m},
                        {"label", row.label},
                        {"bound", row.bound_exact.empty() ? json(row.bound) : json(row.bound_exact)},
                        {"mo", row.mo},
                        {"gap", row.gap_exact.empty() ? json(row.gap) : json(row.gap_exact)},
                        {"gap_over_n2", row.gap_over_n2}});
  return json{{"kind", "gap_table"},
              {"family", table.family},
              {"max_gap_over_n2", table.max_gap_over_n2},
              {"rows", rows}};
}

void write_gap_csv(std::ostream& out, const GapTable& table) {
  out << "family,n,k,m,label,bound,mo,gap,gap_over_n2\n";
  for (const auto& row : table.rows) {
    out << table.family << "," << row.n << "," << row.k << "," << row.m << "," << row.label << ",";
    if (row.bound_exact.empty())
      out << row.bound;
    else
      out << row.bound_exact;
    out << "," << row.mo << ",";
    if (row.gap_exact.empty())
      out << row.gap;
    else
      out << row.gap_exact;
    out << "," << row.gap_over_n2 << "\n";
  }
}

void write_ratio_csv(std::ostream& out, const RatioScan& scan) {
  out << "n,floor_a,mo_floor,best_a,mo_best,flagged\n";
  for (const auto& row : scan.rows)
    out << row.n << "," << row.floor_a << "," << row.mo_floor << "," << row.best_a << ","
        << row.mo_best << "," << (row.flagged ? 1 : 0) << "\n";
}

void write_chain_csv_header(std::ostream& out) {
  out << "n,k,m,g,piecewise,cap,m_star,case\n";
}

void write_chain_csv_row(std::ostream& out, const SplitBoundChain& chain) {
  out << chain.n << "," << chain.k << "," << chain.m << "," << rational_to_string(chain.g_value)
      << "," << rational_to_string(chain.piecewise_value) << ","
      << rational_to_string(chain.cap_value) << "," << rational_to_string(chain.m_star) << ","
      << to_string(chain.case_taken) << "\n";
}

}  // namespace mostar
