#pragma once

#include <iosfwd>
#include <vector>

#include "payouts/contest.hpp"

namespace payouts {

enum class CurveKind { power_law, exponential };

// Real-valued per-place payouts produced before discretization.
// payouts[0] equals the top prize exactly; the list is strictly decreasing
// and sums to the prize pool within the bisection tolerance.
struct IdealCurve {
  std::vector<double> payouts;
  double alpha = 0.0;
  CurveKind kind = CurveKind::power_law;
};

// Exponent of the power-law allocation: the unique alpha > 0 with
// sum_i (P1-E)/i^alpha = B - N*E. Bisection stops once the residual is
// within max(0.01, 1e-9*B). Throws std::invalid_argument when the
// feasibility window (P1-E) < B-N*E < N*(P1-E) does not hold.
double solve_alpha(const ContestSpec& spec);

// payouts[i-1] = E + (P1-E)/i^alpha.
IdealCurve power_law_curve(const ContestSpec& spec);

// Geometric alternative: payouts[i-1] = E + (P1-E)/alpha^(i-1) with
// alpha > 1 chosen so the curve sums to B. Accepts E = 0.
IdealCurve exponential_curve(const ContestSpec& spec);

// Two-column "rank payout" text with a header row, for plotting.
void write_curve(std::ostream& out, const IdealCurve& curve);

}  // namespace payouts
