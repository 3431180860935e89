#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "payouts/ideal_curve.hpp"
#include "payouts/structure.hpp"

namespace payouts {

// Working state carried between the four heuristic stages. `leftover` is
// money not yet assigned; it stays >= 0 and the assigned total plus the
// leftover always accounts for the full ideal-curve sum.
struct HeuristicState {
  double beta = 1.0;
  double leftover = 0.0;
  PayoutStructure working;
  std::vector<double> round_sums;  // available sum R_t seen by each bucket
};

struct HeuristicResult {
  PayoutStructure structure;
  ViolationReport report;
  std::int64_t extra_winners = 0;  // negative when winners fall short
};

// Root of beta + beta^2 + ... + beta^terms = n_remaining with beta >= 1,
// to 1e-9 absolute on the sum. Throws when n_remaining < terms.
double solve_beta(std::int64_t n_remaining, std::int64_t terms);

// Stage 1: singleton buckets followed by geometric growth, finished by a
// halved remainder. Sizes are non-decreasing, sum to N, and fit within the
// bucket budget (beta is escalated when they do not).
std::vector<std::int64_t> stage1_bucket_sizes(const ContestSpec& spec);
std::vector<std::int64_t> stage1_bucket_sizes(const ContestSpec& spec, double& beta);

// Stage 2: rounds each bucket's available average down to a nice number,
// carrying the remainder forward; a bucket that would not pay less than
// its predecessor is merged into it. The first guaranteed_singletons
// size-1 buckets never merge; they step down to the next nice number
// below their predecessor instead.
HeuristicState stage2_init_prizes(std::span<const std::int64_t> sizes,
                                  std::span<const double> ideal,
                                  std::int64_t guaranteed_singletons = 4);

// Stage 3: restores non-decreasing bucket sizes by shifting users into the
// next (lower-prize) bucket, growing the leftover.
void stage3_repair_sizes(HeuristicState& state);

// Stage 4: spends the leftover to zero -- singleton raises, dollar-wise
// increments on the last bucket, extra winners, then a two-bucket
// completion scored by constraint cost. Throws std::runtime_error when no
// completion exists. When the ideal payouts are supplied, a singleton
// raise stops at the first nice number above its own ideal payout.
HeuristicResult stage4_spend_leftover(HeuristicState state, const ContestSpec& spec,
                                      std::span<const double> ideal = {});

// All four stages. The returned structure pays out the prize pool exactly.
HeuristicResult heuristic_solve(const ContestSpec& spec, const IdealCurve& curve);

}  // namespace payouts
