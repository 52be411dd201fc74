#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "mostar/certificate.hpp"
#include "mostar/search.hpp"
#include "mostar/split_bounds.hpp"

namespace mostar {

// Machine-readable records. Exact rationals are serialized as "p/q" strings,
// never as floats.

struct CertificateRecord {
  int n = 0;
  int k = 0;
  DualCase case_tag = DualCase::kSmallRatio;
  Rational p;
  Rational q;
  Rational bound;
  Rational worst_slack;
  Rational worst_pair_slack;
  std::string worst_constraint;
  bool feasible = false;
  double tolerance = 0;
};

CertificateRecord make_certificate_record(int n, int k, double tol = 0.0);

nlohmann::json to_json(const CertificateRecord& record);
nlohmann::json to_json(const BipartiteSearchReport& report);
nlohmann::json to_json(const SplitSearchReport& report);
nlohmann::json to_json(const MarginScan& scan);
nlohmann::json to_json(const SplitBoundChain& chain);
nlohmann::json to_json(const RatioScan& scan);
nlohmann::json to_json(const GapTable& table);
nlohmann::json graph_to_json(const Graph& g);

void write_gap_csv(std::ostream& out, const GapTable& table);
void write_ratio_csv(std::ostream& out, const RatioScan& scan);
void write_chain_csv_header(std::ostream& out);
void write_chain_csv_row(std::ostream& out, const SplitBoundChain& chain);

}  // namespace mostar
