#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mostar/graph.hpp"
#include "mostar/numeric.hpp"

namespace mostar {

// Degree statistics of a bipartite graph with sides of sizes k and n-k:
// x[i] vertices of degree i on side A, y[j] of degree j on side B, and
// m[(i,j)] edges joining a degree-i side-A vertex to a degree-j side-B
// vertex. These are the raw counts; profile_to_point() normalizes them into
// a feasible point of the profile LP.
struct DegreeProfile {
  int n = 0;
  int k = 0;  // |side A|
  std::map<int, Int> x;
  std::map<int, Int> y;
  std::map<std::pair<int, int>, Int> m;

  void validate() const;
};

// max c.z subject to a.z = rhs and z >= 0 on flagged coordinates, all data
// exact rationals.
struct LinearProgram {
  std::vector<Rational> objective;
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  std::vector<bool> nonnegative;
  std::vector<std::string> var_names;

  size_t num_vars() const { return objective.size(); }
  size_t num_rows() const { return rows.size(); }
  void validate() const;
};

struct ProfilePoint {
  std::vector<Rational> point;  // ordered like build_profile_lp variables
  Rational objective;
};

DegreeProfile degree_profile(const Graph& g, const Bipartition& parts);

// Sum over edges of n - 2*min(deg u, deg v); always >= mostar_index(g) for
// bipartite g.
Rational relaxation_bound(const Graph& g, const Bipartition& parts);

// The profile LP at side sizes (k, n-k): variables x_i for i in 0..n-k,
// y_j for j in 0..k, m_ij row-major; the two normalization equalities plus
// one row equality per i and one column equality per j.
LinearProgram build_profile_lp(int n, int k);

// Variable index helpers matching build_profile_lp's ordering.
size_t lp_var_x(int n, int k, int i);
size_t lp_var_y(int n, int k, int j);
size_t lp_var_m(int n, int k, int i, int j);

// Normalizes counts into LP coordinates (x_i/k, y_j/(n-k), m_ij/(k(n-k)))
// and certifies the result feasible; graph-derived profiles are feasible by
// construction, so any residual is an internal error.
ProfilePoint profile_to_point(const DegreeProfile& profile);

// Residuals rhs - rows.point, all exactly zero for a feasible point.
std::vector<Rational> lp_residuals(const LinearProgram& lp, const std::vector<Rational>& point);

Rational lp_objective_value(const LinearProgram& lp, const std::vector<Rational>& point);

// Debug dump: one line per constraint, rationals rendered p/q.
void write_lp(std::ostream& out, const LinearProgram& lp);

}  // namespace mostar
