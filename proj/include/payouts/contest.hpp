#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "payouts/nice_numbers.hpp"

namespace payouts {

// Contest parameters. prize_pool must be paid out exactly; min_payout is
// the smallest prize any winner may receive.
struct ContestSpec {
  Money prize_pool = 0;                // B
  Money top_prize = 0;                 // P1
  Money min_payout = 0;                // E
  std::int64_t winners = 0;            // N
  std::int64_t max_buckets = 0;        // r
  std::int64_t singleton_buckets = 4;  // top places published individually
};

// Hard parameter checks: N >= 1, r >= 1, singleton_buckets >= 1,
// 0 <= E <= P1 <= B, N*E <= B. Throws std::invalid_argument.
void validate_spec(const ContestSpec& spec);

// Soft checks surfaced to the operator: non-nice top prize or minimum
// payout. Never throws for a spec that passes validate_spec.
std::vector<std::string> spec_warnings(const ContestSpec& spec);

}  // namespace payouts
