#pragma once

#include <string>
#include <vector>

#include "mostar/numeric.hpp"

namespace mostar {

// Which of the two explicit dual constructions applies at alpha = k/n.
// Small ratio (2a^2 - 5a + 1 >= 0): p = 2a^2/(1-a), q = 1-2a-p, so the
// certified bound is a(1-a)(1-2a)n^3 = k(n-k)(n-2k). Large ratio:
// p = (42/100)a, q = (9622/100000)/(a(1-a)) - p, bound (9622/100000)n^3.
enum class DualCase { kSmallRatio, kLargeRatio };

struct DualPair {
  Rational p;
  Rational q;
  DualCase case_tag = DualCase::kSmallRatio;
};

// Full dual solution: p_vec[i] pairs with side-A degree i in 0..n-k,
// q_vec[j] with side-B degree j in 0..k.
struct DualCertificate {
  int n = 0;
  int k = 0;
  Rational p;
  Rational q;
  std::vector<Rational> p_vec;
  std::vector<Rational> q_vec;
};

struct DualCheckReport {
  bool feasible = true;
  Rational worst_slack;       // exact when tol == 0; the coupling rows are
                              // tight by construction, so this is 0 when feasible
  Rational worst_pair_slack;  // min over the p_i + q_j rows alone
  std::string worst_constraint;
  std::vector<std::string> violations;
};

struct HyperbolaMin {
  double value = 0;
  double argmin = 0;
  bool attained = true;  // false only for beta == 0 (infimum at x -> 0+)
};

struct MarginExtremum {
  double min_value = 0;
  double argmin = 0;
};

struct MarginScan {
  int grid_points = 0;
  double alpha_lo = 0;  // (5 - sqrt(17))/4
  double alpha_hi = 0.5;
  MarginExtremum q, f1, f2, f3;
  bool f1_nondecreasing = false;
  bool f2_nondecreasing = false;
  bool f3_nonincreasing = false;
  bool all_positive = false;
};

// min of beta/x + gamma*x over (0, delta].
HyperbolaMin min_affine_hyperbola(double beta, double gamma, double delta);

// Feasibility for the reduced two-variable dual program at ratio alpha:
// p+q >= 1-2a always, p + 2*sqrt(2qa) >= 1 when q < 2a,
// 2*sqrt(2p(1-a)) + q >= 1 when p < 2a^2/(1-a), and p, q >= 0,
// each with slack >= -tol.
struct ReducedFeasibility {
  bool feasible = true;
  std::vector<std::string> violations;
};
ReducedFeasibility reduced_dual_feasible(double p, double q, double alpha, double tol);

DualCase dual_case_for(int n, int k);  // exact test 2k^2 - 5kn + n^2 >= 0

// The explicit dual pair at alpha = k/n; requires 1 <= k <= n/2 (mirror the
// partition for larger k).
DualPair explicit_dual_pair(int n, int k);

// p_0 = q_0 = 1, p_i = (n-k)p/i, q_j = kq/j.
DualCertificate lift_dual_pair(const DualPair& pair, int n, int k);

// Checks p_i + q_j >= 1 - 2*min(i,j)/n over the full index grid plus the
// coupling rows p >= i*p_i/(n-k) and q >= j*q_j/k. tol == 0 runs in exact
// rational arithmetic; tol > 0 runs in double with slack >= -tol.
DualCheckReport check_dual_certificate(const DualCertificate& cert, double tol = 0.0);

// a(1-a)(p+q)n^3 at the explicit pair: k(n-k)(n-2k) in the small-ratio
// case, (9622/100000)n^3 in the large-ratio case.
Rational certified_mostar_bound(int n, int k);

// Exact form of mo <= (sqrt(3)/18) n^3: 108*mo^2 <= n^6.
bool bipartite_bound_holds(Int mo, Int n);

// Evaluates q, f1 = p+q-(1-2a), f2 = p+2*sqrt(2qa)-1, f3 = 2*sqrt(2p(1-a))+q-1
// on a uniform grid over [alpha_lo, 1/2] with the large-ratio pair, recording
// minima and checking grid monotonicity.
MarginScan margin_scan(int grid_points);

const char* to_string(DualCase c);

}  // namespace mostar
