#include "payouts/ideal_curve.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

namespace payouts {

namespace {

constexpr int kMaxIterations = 200;

double budget_tolerance(Money prize_pool) {
  return std::max(0.01, 1e-9 * static_cast<double>(prize_pool));
}

struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double x) {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

void check_feasibility(const ContestSpec& spec, Money min_e) {
  if (spec.winners < 2)
    throw std::invalid_argument("ideal curve: winners must be >= 2");
  if (spec.min_payout < min_e)
    throw std::invalid_argument("ideal curve: min_payout must be >= " +
                                std::to_string(min_e));
  if (spec.top_prize <= spec.min_payout)
    throw std::invalid_argument("ideal curve: top_prize must exceed min_payout");
  const double head = static_cast<double>(spec.top_prize - spec.min_payout);
  const double target = static_cast<double>(spec.prize_pool) -
                        static_cast<double>(spec.winners) *
                            static_cast<double>(spec.min_payout);
  if (!(target > head))
    throw std::invalid_argument(
        "ideal curve: infeasible, requires (P1 - E) < B - N*E");
  if (!(target < static_cast<double>(spec.winners) * head))
    throw std::invalid_argument(
        "ideal curve: infeasible, requires B - N*E < N*(P1 - E)");
}

}  // namespace

double solve_alpha(const ContestSpec& spec) {
  check_feasibility(spec, 1);
  const std::int64_t n = spec.winners;
  const double head = static_cast<double>(spec.top_prize - spec.min_payout);
  const double target = static_cast<double>(spec.prize_pool) -
                        static_cast<double>(n) *
                            static_cast<double>(spec.min_payout);

  std::vector<double> log_rank(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i)
    log_rank[static_cast<std::size_t>(i)] = std::log(static_cast<double>(i + 1));

  // Residual of the budget equation; strictly decreasing in alpha.
  auto residual = [&](double alpha) {
    KahanSum s;
    for (double lr : log_rank) s.add(std::exp(-alpha * lr));
    return head * s.sum - target;
  };

  double lo = 1e-6, hi = 64.0;
  if (!(residual(lo) > 0.0) || !(residual(hi) < 0.0))
    throw std::invalid_argument(
        "ideal curve: alpha bracket [1e-6, 64] does not contain a root");

  const double tol = budget_tolerance(spec.prize_pool);
  double mid = 0.5 * (lo + hi);
  for (int it = 0; it < kMaxIterations; ++it) {
    mid = 0.5 * (lo + hi);
    const double res = residual(mid);
    // Keep narrowing past the budget tolerance so alpha itself is pinned
    // to the root, not just the sum.
    if (std::abs(res) <= tol && (hi - lo) <= 1e-13 * mid) break;
    if (res > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return mid;
}

IdealCurve power_law_curve(const ContestSpec& spec) {
  IdealCurve curve;
  curve.kind = CurveKind::power_law;
  curve.alpha = solve_alpha(spec);
  const double head = static_cast<double>(spec.top_prize - spec.min_payout);
  const double base = static_cast<double>(spec.min_payout);
  curve.payouts.resize(static_cast<std::size_t>(spec.winners));
  for (std::int64_t i = 0; i < spec.winners; ++i)
    curve.payouts[static_cast<std::size_t>(i)] =
        base + head * std::exp(-curve.alpha * std::log(static_cast<double>(i + 1)));
  return curve;
}

IdealCurve exponential_curve(const ContestSpec& spec) {
  check_feasibility(spec, 0);
  const std::int64_t n = spec.winners;
  const double head = static_cast<double>(spec.top_prize - spec.min_payout);
  const double target = static_cast<double>(spec.prize_pool) -
                        static_cast<double>(n) *
                            static_cast<double>(spec.min_payout);

  // Geometric series sum head * (1 + 1/a + ... + 1/a^(N-1)); decreasing in a.
  auto residual = [&](double a) {
    KahanSum s;
    double term = 1.0;
    const double inv = 1.0 / a;
    for (std::int64_t i = 0; i < n; ++i) {
      s.add(term);
      term *= inv;
      if (term < 1e-18) break;
    }
    return head * s.sum - target;
  };

  double lo = 1.0 + 1e-12;
  double hi = 2.0;
  while (residual(hi) > 0.0) {
    hi *= 2.0;
    if (hi > 1e18)
      throw std::invalid_argument("ideal curve: exponential base out of range");
  }
  if (!(residual(lo) > 0.0))
    throw std::invalid_argument(
        "ideal curve: infeasible, requires B - N*E < N*(P1 - E)");

  const double tol = budget_tolerance(spec.prize_pool);
  double mid = 0.5 * (lo + hi);
  for (int it = 0; it < kMaxIterations; ++it) {
    mid = 0.5 * (lo + hi);
    const double res = residual(mid);
    if (std::abs(res) <= tol && (hi - lo) <= 1e-13 * mid) break;
    if (res > 0.0)
      lo = mid;
    else
      hi = mid;
  }

  IdealCurve curve;
  curve.kind = CurveKind::exponential;
  curve.alpha = mid;
  curve.payouts.resize(static_cast<std::size_t>(n));
  const double base = static_cast<double>(spec.min_payout);
  double factor = 1.0;
  for (std::int64_t i = 0; i < n; ++i) {
    curve.payouts[static_cast<std::size_t>(i)] = base + head * factor;
    factor /= mid;
  }
  return curve;
}

void write_curve(std::ostream& out, const IdealCurve& curve) {
  out << "rank payout\n";
  char buf[64];
  for (std::size_t i = 0; i < curve.payouts.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%zu %.4f\n", i + 1, curve.payouts[i]);
    out << buf;
  }
}

}  // namespace payouts
