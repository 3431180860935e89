#pragma once

#include <cstdint>
#include <vector>

namespace payouts {

// Prize amounts are whole dollars throughout.
using Money = std::int64_t;

// Membership test for the "nice number" prize set: x = A * 10^K with
// A <= 1000, where A is a multiple of 5 once A >= 10, of 25 once A >= 100,
// and of 50 once A >= 250. Zero is not a publishable prize.
// Throws std::invalid_argument for negative input.
bool is_nice(Money x);

// Largest nice number <= x. Requires x >= 1 (throws std::domain_error
// below that; there is no nice number under 1).
Money nice_floor(double x);
Money nice_floor(Money x);

// Smallest nice number >= x. Defined for any x >= 0.
Money nice_ceil(double x);
Money nice_ceil(Money x);

// All nice numbers in [lo, hi], strictly increasing. Empty when lo > hi.
// Values below 1 are ignored.
std::vector<Money> enumerate_nice(Money lo, Money hi);

}  // namespace payouts
