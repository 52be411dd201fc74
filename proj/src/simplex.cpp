#include "mostar/simplex.hpp"

#include <stdexcept>

namespace mostar {

namespace {

// Dense tableau: rows 0..r-1 are constraints with the basic column
// eliminated, row r is the reduced-cost row for the current objective.
struct Tableau {
  size_t rows = 0, cols = 0;  // cols excludes the rhs column
  std::vector<std::vector<Rational>> t;
  std::vector<size_t> basis;  // basic column per row

  Rational& at(size_t r, size_t c) { return t[r][c]; }
  Rational& rhs(size_t r) { return t[r][cols]; }

  void pivot(size_t pr, size_t pc) {
    const Rational inv = Rational(1) / t[pr][pc];
    for (auto& cell : t[pr]) cell *= inv;
    for (size_t r = 0; r <= rows; ++r) {
      if (r == pr || t[r][pc].is_zero()) continue;
      const Rational factor = t[r][pc];
      for (size_t c = 0; c <= cols; ++c)
        if (!t[pr][c].is_zero()) t[r][c] -= factor * t[pr][c];
    }
    basis[pr] = pc;
  }

  // Bland: entering column = lowest index with positive reduced cost;
  // leaving row = min ratio, ties by lowest basic column index.
  // Returns kOptimal when no entering column exists.
  SolveStatus iterate(size_t eligible_cols) {
    for (;;) {
      size_t enter = eligible_cols;
      for (size_t c = 0; c < eligible_cols; ++c)
        if (t[rows][c] > 0) {
          enter = c;
          break;
        }
      if (enter == eligible_cols) return SolveStatus::kOptimal;
      size_t leave = rows;
      Rational best_ratio;
      for (size_t r = 0; r < rows; ++r) {
        if (t[r][enter] <= 0) continue;
        Rational ratio = rhs(r) / t[r][enter];
        if (leave == rows || ratio < best_ratio ||
            (ratio == best_ratio && basis[r] < basis[leave])) {
          leave = r;
          best_ratio = ratio;
        }
      }
      if (leave == rows) return SolveStatus::kUnbounded;
      pivot(leave, enter);
    }
  }
};

}  // namespace

SimplexResult solve_simplex(const LinearProgram& lp) {
  lp.validate();
  const size_t orig_vars = lp.num_vars();
  const size_t rows = lp.num_rows();

  // Split free variables v = v+ - v-.
  std::vector<size_t> neg_part(orig_vars, SIZE_MAX);
  size_t vars = orig_vars;
  for (size_t c = 0; c < orig_vars; ++c)
    if (!lp.nonnegative[c]) neg_part[c] = vars++;

  const size_t total = vars + rows;  // artificials appended
  Tableau tab;
  tab.rows = rows;
  tab.cols = total;
  tab.t.assign(rows + 1, std::vector<Rational>(total + 1, Rational(0)));
  tab.basis.assign(rows, 0);

  for (size_t r = 0; r < rows; ++r) {
    const bool flip = lp.rhs[r] < 0;
    for (size_t c = 0; c < orig_vars; ++c) {
      Rational a = flip ? Rational(-lp.rows[r][c]) : lp.rows[r][c];
      tab.at(r, c) = a;
      if (neg_part[c] != SIZE_MAX) tab.at(r, neg_part[c]) = -a;
    }
    tab.rhs(r) = flip ? Rational(-lp.rhs[r]) : lp.rhs[r];
    tab.at(r, vars + r) = 1;
    tab.basis[r] = vars + r;
  }

  // Phase 1: maximize -(sum of artificials); objective row starts as the
  // sum of the constraint rows so the artificial basis prices to zero.
  for (size_t r = 0; r < rows; ++r)
    for (size_t c = 0; c <= total; ++c)
      if (c < vars || c == total) tab.at(rows, c) += tab.at(r, c);
  if (tab.iterate(vars) == SolveStatus::kUnbounded)
    throw std::logic_error("phase-1 objective is bounded by construction");
  if (!tab.rhs(rows).is_zero()) return {SolveStatus::kInfeasible, Rational(0), {}};

  // Drive leftover artificials out of the basis; rows where that is
  // impossible are redundant and get cleared.
  for (size_t r = 0; r < rows; ++r) {
    if (tab.basis[r] < vars) continue;
    size_t enter = vars;
    for (size_t c = 0; c < vars; ++c)
      if (!tab.at(r, c).is_zero()) {
        enter = c;
        break;
      }
    if (enter < vars) {
      tab.pivot(r, enter);
    } else {
      for (size_t c = 0; c <= total; ++c) tab.at(r, c) = 0;
    }
  }

  // Phase 2: rebuild the reduced-cost row from the real objective.
  for (size_t c = 0; c <= total; ++c) tab.at(rows, c) = 0;
  for (size_t c = 0; c < orig_vars; ++c) {
    tab.at(rows, c) = lp.objective[c];
    if (neg_part[c] != SIZE_MAX) tab.at(rows, neg_part[c]) = -lp.objective[c];
  }
  for (size_t r = 0; r < rows; ++r) {
    size_t b = tab.basis[r];
    if (b >= vars || tab.at(rows, b).is_zero()) continue;
    const Rational factor = tab.at(rows, b);
    for (size_t c = 0; c <= total; ++c)
      if (!tab.at(r, c).is_zero()) tab.at(rows, c) -= factor * tab.at(r, c);
  }
  if (tab.iterate(vars) == SolveStatus::kUnbounded)
    return {SolveStatus::kUnbounded, Rational(0), {}};

  SimplexResult res;
  res.status = SolveStatus::kOptimal;
  std::vector<Rational> split_point(vars, Rational(0));
  for (size_t r = 0; r < rows; ++r)
    if (tab.basis[r] < vars) split_point[tab.basis[r]] = tab.rhs(r);
  res.point.assign(orig_vars, Rational(0));
  for (size_t c = 0; c < orig_vars; ++c) {
    res.point[c] = split_point[c];
    if (neg_part[c] != SIZE_MAX) res.point[c] -= split_point[neg_part[c]];
  }
  res.value = lp_objective_value(lp, res.point);

  for (const auto& r : lp_residuals(lp, res.point))
    if (!r.is_zero()) throw std::logic_error("simplex optimum violates a constraint");
  for (size_t c = 0; c < orig_vars; ++c)
    if (lp.nonnegative[c] && res.point[c] < 0)
      throw std::logic_error("simplex optimum violates nonnegativity");
  return res;
}

const char* to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal:
      return "optimal";
    case SolveStatus::kUnbounded:
      return "unbounded";
    case SolveStatus::kInfeasible:
      return "infeasible";
  }
  return "unknown";
}

}  // namespace mostar
