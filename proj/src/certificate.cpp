#include "mostar/certificate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace mostar {

namespace {

constexpr Int kHighPNum = 42;            // p = (42/100) * alpha
constexpr Int kHighPDen = 100;
constexpr Int kHighSumNum = 9622;        // p + q = (9622/100000) / (alpha(1-alpha))
constexpr Int kHighSumDen = 100000;

void require_half_range(int n, int k) {
  if (n < 2 || k < 1) throw std::invalid_argument("need n >= 2 and k >= 1");
  if (2 * k > n)
    throw std::invalid_argument("k=" + std::to_string(k) + " exceeds n/2; mirror the partition (use k'=" +
                                std::to_string(n - k) + ")");
}

}  // namespace

HyperbolaMin min_affine_hyperbola(double beta, double gamma, double delta) {
  if (beta < 0) throw std::invalid_argument("beta must be nonnegative");
  if (gamma <= 0 || delta <= 0) throw std::invalid_argument("gamma and delta must be positive");
  if (beta == 0) return {0.0, 0.0, false};
  const double stationary = std::sqrt(beta / gamma);
  if (delta >= stationary) return {2 * std::sqrt(beta * gamma), stationary, true};
  return {beta / delta + gamma * delta, delta, true};
}

ReducedFeasibility reduced_dual_feasible(double p, double q, double alpha, double tol) {
  if (!(alpha > 0 && alpha <= 0.5)) throw std::invalid_argument("alpha must lie in (0, 1/2]");
  ReducedFeasibility out;
  auto check = [&](bool cond, const std::string& label) {
    if (!cond) {
      out.feasible = false;
      out.violations.push_back(label);
    }
  };
  check(p >= -tol, "p >= 0");
  check(q >= -tol, "q >= 0");
  check(p + q >= 1 - 2 * alpha - tol, "p + q >= 1 - 2a");
  if (q < 2 * alpha) check(p + 2 * std::sqrt(2 * std::max(q, 0.0) * alpha) >= 1 - tol, "p + 2*sqrt(2qa) >= 1");
  if (p < 2 * alpha * alpha / (1 - alpha))
    check(2 * std::sqrt(2 * std::max(p, 0.0) * (1 - alpha)) + q >= 1 - tol, "2*sqrt(2p(1-a)) + q >= 1");
  return out;
}

DualCase dual_case_for(int n, int k) {
  require_half_range(n, k);
  const Int ki = k, ni = n;
  return 2 * ki * ki - 5 * ki * ni + ni * ni >= 0 ? DualCase::kSmallRatio : DualCase::kLargeRatio;
}

DualPair explicit_dual_pair(int n, int k) {
  DualPair pair;
  pair.case_tag = dual_case_for(n, k);
  const Rational alpha = make_rational(k, n);
  if (pair.case_tag == DualCase::kSmallRatio) {
    pair.p = 2 * alpha * alpha / (1 - alpha);     // = 2k^2 / (n(n-k))
    pair.q = 1 - 2 * alpha - pair.p;              // = (n-3k) / (n-k)
  } else {
    pair.p = make_rational(kHighPNum, kHighPDen) * alpha;
    pair.q = make_rational(kHighSumNum, kHighSumDen) / (alpha * (1 - alpha)) - pair.p;
  }
  return pair;
}

DualCertificate lift_dual_pair(const DualPair& pair, int n, int k) {
  require_half_range(n, k);
  DualCertificate cert;
  cert.n = n;
  cert.k = k;
  cert.p = pair.p;
  cert.q = pair.q;
  cert.p_vec.assign(static_cast<size_t>(n - k) + 1, Rational(1));
  cert.q_vec.assign(static_cast<size_t>(k) + 1, Rational(1));
  for (int i = 1; i <= n - k; ++i) cert.p_vec[static_cast<size_t>(i)] = Rational(n - k) * pair.p / i;
  for (int j = 1; j <= k; ++j) cert.q_vec[static_cast<size_t>(j)] = Rational(k) * pair.q / j;
  return cert;
}

namespace {

template <typename Value, typename Conv>
DualCheckReport run_dual_check(const DualCertificate& cert, Value tol, Conv conv) {
  const int n = cert.n, k = cert.k;
  DualCheckReport report;
  bool first = true, first_pair = true;
  Value worst{}, worst_pair{};
  std::string worst_label;
  auto record = [&](Value slack, std::string label, bool is_pair) {
    if (slack < -tol) {
      report.feasible = false;
      report.violations.push_back(label);
    }
    if (is_pair && (first_pair || slack < worst_pair)) {
      worst_pair = slack;
      first_pair = false;
    }
    if (first || slack < worst) {
      worst = slack;
      worst_label = std::move(label);
      first = false;
    }
  };
  for (int i = 0; i <= n - k; ++i) {
    const Value pi = conv(cert.p_vec[static_cast<size_t>(i)]);
    for (int j = 0; j <= k; ++j) {
      const Value target = conv(Rational(1) - make_rational(2 * std::min(i, j), n));
      Value slack = pi + conv(cert.q_vec[static_cast<size_t>(j)]) - target;
      record(slack, "pair(" + std::to_string(i) + "," + std::to_string(j) + ")", true);
    }
    record(conv(cert.p) - Value(i) * pi / Value(n - k), "coupling p, i=" + std::to_string(i), false);
  }
  for (int j = 0; j <= k; ++j)
    record(conv(cert.q) - Value(j) * conv(cert.q_vec[static_cast<size_t>(j)]) / Value(k),
           "coupling q, j=" + std::to_string(j), false);
  report.worst_constraint = worst_label;
  if constexpr (std::is_same_v<Value, Rational>) {
    report.worst_slack = worst;
    report.worst_pair_slack = worst_pair;
  } else {
    report.worst_slack = Rational(worst);
    report.worst_pair_slack = Rational(worst_pair);
  }
  return report;
}

}  // namespace

DualCheckReport check_dual_certificate(const DualCertificate& cert, double tol) {
  require_half_range(cert.n, cert.k);
  if (cert.p_vec.size() != static_cast<size_t>(cert.n - cert.k) + 1 ||
      cert.q_vec.size() != static_cast<size_t>(cert.k) + 1)
    throw std::invalid_argument("certificate vectors do not match (n, k)");
  if (tol == 0.0)
    return run_dual_check<Rational>(cert, Rational(0), [](const Rational& r) { return r; });
  return run_dual_check<double>(cert, tol, [](const Rational& r) { return to_double(r); });
}

Rational certified_mostar_bound(int n, int k) {
  const DualPair pair = explicit_dual_pair(n, k);
  // alpha(1-alpha)(p+q)n^3 with alpha = k/n
  return make_rational(k, 1) * (n - k) * n * (pair.p + pair.q);
}

bool bipartite_bound_holds(Int mo, Int n) {
  if (mo < 0) throw std::invalid_argument("mostar value must be nonnegative");
  const BigInt mo_big(mo), n_big(n);
  return 108 * mo_big * mo_big <= n_big * n_big * n_big * n_big * n_big * n_big;
}

MarginScan margin_scan(int grid_points) {
  if (grid_points < 2) throw std::invalid_argument("need at least 2 grid points");
  MarginScan scan;
  scan.grid_points = grid_points;
  scan.alpha_lo = (5.0 - std::sqrt(17.0)) / 4.0;
  scan.alpha_hi = 0.5;
  const double step = (scan.alpha_hi - scan.alpha_lo) / (grid_points - 1);
  scan.f1_nondecreasing = scan.f2_nondecreasing = scan.f3_nonincreasing = true;
  double prev_f1 = 0, prev_f2 = 0, prev_f3 = 0;
  for (int t = 0; t < grid_points; ++t) {
    const double a = t + 1 == grid_points ? scan.alpha_hi : scan.alpha_lo + step * t;
    const double p = 0.42 * a;
    const double q = 0.09622 / (a * (1 - a)) - p;
    const double f1 = p + q - (1 - 2 * a);
    const double f2 = p + 2 * std::sqrt(2 * q * a) - 1;
    const double f3 = 2 * std::sqrt(2 * p * (1 - a)) + q - 1;
    auto update = [a, t](MarginExtremum& e, double value) {
      if (t == 0 || value < e.min_value) e = {value, a};
    };
    update(scan.q, q);
    update(scan.f1, f1);
    update(scan.f2, f2);
    update(scan.f3, f3);
    if (t > 0) {
      scan.f1_nondecreasing &= f1 >= prev_f1;
      scan.f2_nondecreasing &= f2 >= prev_f2;
      scan.f3_nonincreasing &= f3 <= prev_f3;
    }
    prev_f1 = f1;
    prev_f2 = f2;
    prev_f3 = f3;
  }
  scan.all_positive = scan.q.min_value > 0 && scan.f1.min_value > 0 && scan.f2.min_value > 0 &&
                      scan.f3.min_value > 0;
  return scan;
}

const char* to_string(DualCase c) {
  return c == DualCase::kSmallRatio ? "small_ratio" : "large_ratio";
}

}  // namespace mostar
