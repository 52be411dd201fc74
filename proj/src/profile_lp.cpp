#include "mostar/profile_lp.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace mostar {

void DegreeProfile::validate() const {
  Int sum_x = 0, sum_y = 0;
  for (const auto& [i, cnt] : x) {
    if (i < 0 || i > n - k) throw std::invalid_argument("side-A degree out of range");
    if (cnt < 0) throw std::invalid_argument("negative count");
    sum_x += cnt;
  }
  for (const auto& [j, cnt] : y) {
    if (j < 0 || j > k) throw std::invalid_argument("side-B degree out of range");
    if (cnt < 0) throw std::invalid_argument("negative count");
    sum_y += cnt;
  }
  if (sum_x != k || sum_y != n - k)
    throw std::invalid_argument("degree counts do not sum to the side sizes");
  std::map<int, Int> row_sum, col_sum;
  for (const auto& [ij, cnt] : m) {
    if (cnt < 0) throw std::invalid_argument("negative edge count");
    row_sum[ij.first] += cnt;
    col_sum[ij.second] += cnt;
  }
  for (int i = 0; i <= n - k; ++i) {
    Int xi = x.count(i) ? x.at(i) : 0;
    Int rs = row_sum.count(i) ? row_sum.at(i) : 0;
    if (rs != static_cast<Int>(i) * xi)
      throw std::invalid_argument("row constraint violated at degree " + std::to_string(i));
  }
  for (int j = 0; j <= k; ++j) {
    Int yj = y.count(j) ? y.at(j) : 0;
    Int cs = col_sum.count(j) ? col_sum.at(j) : 0;
    if (cs != static_cast<Int>(j) * yj)
      throw std::invalid_argument("column constraint violated at degree " + std::to_string(j));
  }
}

void LinearProgram::validate() const {
  if (rows.size() != rhs.size()) throw std::invalid_argument("row/rhs size mismatch");
  if (nonnegative.size() != objective.size()) throw std::invalid_argument("flag/objective size mismatch");
  for (const auto& row : rows)
    if (row.size() != objective.size()) throw std::invalid_argument("row width mismatch");
  if (!var_names.empty() && var_names.size() != objective.size())
    throw std::invalid_argument("name/objective size mismatch");
}

namespace {

void check_partition(const Graph& g, const Bipartition& parts) {
  std::vector<int> side(static_cast<size_t>(g.order()), -1);
  for (int v : parts.side_a) {
    if (v < 0 || v >= g.order() || side[static_cast<size_t>(v)] != -1)
      throw std::invalid_argument("partition side A is not a valid vertex set");
    side[static_cast<size_t>(v)] = 0;
  }
  for (int v : parts.side_b) {
    if (v < 0 || v >= g.order() || side[static_cast<size_t>(v)] != -1)
      throw std::invalid_argument("partition side B is not a valid vertex set");
    side[static_cast<size_t>(v)] = 1;
  }
  for (int v = 0; v < g.order(); ++v)
    if (side[static_cast<size_t>(v)] == -1)
      throw std::invalid_argument("partition misses vertex " + std::to_string(v));
  for (const auto& [u, v] : g.edges())
    if (side[static_cast<size_t>(u)] == side[static_cast<size_t>(v)])
      throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") does not cross the partition");
}

}  // namespace

DegreeProfile degree_profile(const Graph& g, const Bipartition& parts) {
  check_partition(g, parts);
  DegreeProfile profile;
  profile.n = g.order();
  profile.k = static_cast<int>(parts.side_a.size());
  std::vector<bool> in_a(static_cast<size_t>(g.order()), false);
  for (int v : parts.side_a) in_a[static_cast<size_t>(v)] = true;
  for (int v : parts.side_a) profile.x[g.degree(v)] += 1;
  for (int v : parts.side_b) profile.y[g.degree(v)] += 1;
  for (const auto& [u, v] : g.edges()) {
    int a = in_a[static_cast<size_t>(u)] ? u : v;
    int b = in_a[static_cast<size_t>(u)] ? v : u;
    profile.m[{g.degree(a), g.degree(b)}] += 1;
  }
  profile.validate();
  return profile;
}

Rational relaxation_bound(const Graph& g, const Bipartition& parts) {
  check_partition(g, parts);
  Int total = 0;
  for (const auto& [u, v] : g.edges()) total += g.order() - 2 * std::min(g.degree(u), g.degree(v));
  return Rational(total);
}

size_t lp_var_x(int, int, int i) { return static_cast<size_t>(i); }

size_t lp_var_y(int n, int k, int j) {
  return static_cast<size_t>(n - k + 1) + static_cast<size_t>(j);
}

size_t lp_var_m(int n, int k, int i, int j) {
  return static_cast<size_t>(n - k + 1) + static_cast<size_t>(k + 1) +
         static_cast<size_t>(i) * static_cast<size_t>(k + 1) + static_cast<size_t>(j);
}

LinearProgram build_profile_lp(int n, int k) {
  if (k < 1 || k > n - 1)
    throw std::invalid_argument("degenerate side sizes: need 1 <= k <= n-1");
  const int di = n - k;  // side-A degrees range over 0..n-k
  const int dj = k;      // side-B degrees range over 0..k
  LinearProgram lp;
  const size_t vars = static_cast<size_t>(di + 1) + static_cast<size_t>(dj + 1) +
                      static_cast<size_t>(di + 1) * static_cast<size_t>(dj + 1);
  lp.objective.assign(vars, Rational(0));
  lp.nonnegative.assign(vars, true);
  lp.var_names.resize(vars);
  for (int i = 0; i <= di; ++i) lp.var_names[lp_var_x(n, k, i)] = "x" + std::to_string(i);
  for (int j = 0; j <= dj; ++j) lp.var_names[lp_var_y(n, k, j)] = "y" + std::to_string(j);
  for (int i = 0; i <= di; ++i)
    for (int j = 0; j <= dj; ++j) {
      size_t col = lp_var_m(n, k, i, j);
      lp.var_names[col] = "m" + std::to_string(i) + "_" + std::to_string(j);
      lp.objective[col] = Rational(1) - make_rational(2 * std::min(i, j), n);
    }

  auto add_row = [&lp, vars](const Rational& b) -> std::vector<Rational>& {
    lp.rows.emplace_back(vars, Rational(0));
    lp.rhs.push_back(b);
    return lp.rows.back();
  };

  {
    auto& row = add_row(Rational(1));  // sum_i x_i = 1
    for (int i = 0; i <= di; ++i) row[lp_var_x(n, k, i)] = 1;
  }
  {
    auto& row = add_row(Rational(1));  // sum_j y_j = 1
    for (int j = 0; j <= dj; ++j) row[lp_var_y(n, k, j)] = 1;
  }
  for (int i = 0; i <= di; ++i) {  // sum_j m_ij - i*x_i/(n-k) = 0
    auto& row = add_row(Rational(0));
    for (int j = 0; j <= dj; ++j) row[lp_var_m(n, k, i, j)] = 1;
    row[lp_var_x(n, k, i)] = -make_rational(i, n - k);
  }
  for (int j = 0; j <= dj; ++j) {  // sum_i m_ij - j*y_j/k = 0
    auto& row = add_row(Rational(0));
    for (int i = 0; i <= di; ++i) row[lp_var_m(n, k, i, j)] = 1;
    row[lp_var_y(n, k, j)] = -make_rational(j, k);
  }
  lp.validate();
  return lp;
}

std::vector<Rational> lp_residuals(const LinearProgram& lp, const std::vector<Rational>& point) {
  if (point.size() != lp.num_vars()) throw std::invalid_argument("point dimension mismatch");
  std::vector<Rational> res;
  res.reserve(lp.num_rows());
  for (size_t r = 0; r < lp.num_rows(); ++r) {
    Rational acc = lp.rhs[r];
    for (size_t c = 0; c < lp.num_vars(); ++c)
      if (!lp.rows[r][c].is_zero() && !point[c].is_zero()) acc -= lp.rows[r][c] * point[c];
    res.push_back(acc);
  }
  return res;
}

Rational lp_objective_value(const LinearProgram& lp, const std::vector<Rational>& point) {
  Rational acc = 0;
  for (size_t c = 0; c < lp.num_vars(); ++c)
    if (!lp.objective[c].is_zero() && !point[c].is_zero()) acc += lp.objective[c] * point[c];
  return acc;
}

ProfilePoint profile_to_point(const DegreeProfile& profile) {
  profile.validate();
  const int n = profile.n, k = profile.k;
  if (k < 1 || k > n - 1)
    throw std::invalid_argument("profile has a degenerate side; no LP point exists");
  LinearProgram lp = build_profile_lp(n, k);
  ProfilePoint out;
  out.point.assign(lp.num_vars(), Rational(0));
  for (const auto& [i, cnt] : profile.x) out.point[lp_var_x(n, k, i)] = Rational(BigInt(cnt), BigInt(k));
  for (const auto& [j, cnt] : profile.y)
    out.point[lp_var_y(n, k, j)] = Rational(BigInt(cnt), BigInt(n - k));
  for (const auto& [ij, cnt] : profile.m)
    out.point[lp_var_m(n, k, ij.first, ij.second)] =
        Rational(BigInt(cnt), BigInt(k) * BigInt(n - k));
  for (const auto& r : lp_residuals(lp, out.point))
    if (!r.is_zero())
      throw std::logic_error("graph-derived profile is LP-infeasible; tally bug");
  out.objective = lp_objective_value(lp, out.point);
  return out;
}

void write_lp(std::ostream& out, const LinearProgram& lp) {
  auto name = [&lp](size_t c) {
    return lp.var_names.empty() ? "v" + std::to_string(c) : lp.var_names[c];
  };
  out << "max ";
  bool first = true;
  for (size_t c = 0; c < lp.num_vars(); ++c) {
    if (lp.objective[c].is_zero()) continue;
    if (!first) out << " + ";
    out << rational_to_string(lp.objective[c]) << " " << name(c);
    first = false;
  }
  if (first) out << "0";
  out << "\n";
  for (size_t r = 0; r < lp.num_rows(); ++r) {
    first = true;
    for (size_t c = 0; c < lp.num_vars(); ++c) {
      if (lp.rows[r][c].is_zero()) continue;
      if (!first) out << " + ";
      out << rational_to_string(lp.rows[r][c]) << " " << name(c);
      first = false;
    }
    if (first) out << "0";
    out << " = " << rational_to_string(lp.rhs[r]) << "\n";
  }
  out << "nonneg";
  for (size_t c = 0; c < lp.num_vars(); ++c)
    if (lp.nonnegative[c]) out << " " << name(c);
  out << "\n";
}

}  // namespace mostar
