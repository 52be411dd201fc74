#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mostar/numeric.hpp"

namespace mostar {

enum class OutputFormat { kHuman, kJson, kCsv };

// Each command returns a process exit code: 0 when the requested
// computation succeeded and every check it performs passed.

int cmd_compute(const std::string& path, OutputFormat format, std::ostream& out, std::ostream& err);

int cmd_family(const std::string& name, const std::vector<Int>& params,
               const std::optional<std::string>& output_path, OutputFormat format,
               std::ostream& out, std::ostream& err);

int cmd_lp(int n, std::optional<int> k, const std::optional<std::string>& dump_path,
           OutputFormat format, bool force, std::ostream& out, std::ostream& err);

int cmd_certify(int n, int k, double tol, OutputFormat format, std::ostream& out,
                std::ostream& err);

int cmd_margins(int grid_points, OutputFormat format, std::ostream& out, std::ostream& err);

int cmd_splitbound(int n, int k, std::optional<Int> m, bool sweep, OutputFormat format,
                   std::ostream& out, std::ostream& err);

int cmd_search(const std::string& kind, int n, int shards, bool force, OutputFormat format,
               std::ostream& out, std::ostream& err);

int cmd_conjecture19(int n_max, OutputFormat format, std::ostream& out, std::ostream& err);

int cmd_gap(const std::string& family, int n_lo, int n_hi, OutputFormat format, std::ostream& out,
            std::ostream& err);

OutputFormat parse_format(const std::string& name);

}  // namespace mostar
