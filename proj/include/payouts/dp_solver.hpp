#pragma once

#include <cstdint>
#include <optional>

#include "payouts/ideal_curve.hpp"
#include "payouts/structure.hpp"

namespace payouts {

struct DpLimits {
  // Upper bound on N * B * (nice-number count); beyond this the instance
  // is refused as too large for an exact solve.
  std::int64_t max_state_product = 100'000'000;
};

// Exact minimum-cost solve of the bucketed payout problem, building buckets
// from the lowest awarded places upward over states
// (winners consumed, budget consumed, last prize, last size).
// Returns nullopt when no structure satisfies every constraint.
// Throws std::runtime_error when the instance exceeds the state budget.
std::optional<PayoutStructure> dp_solve(const ContestSpec& spec,
                                        const IdealCurve& curve,
                                        const DpLimits& limits = {});

}  // namespace payouts
