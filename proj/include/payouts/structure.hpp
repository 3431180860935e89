#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "payouts/contest.hpp"

namespace payouts {

// A maximal run of consecutive places that all receive the same prize.
struct Bucket {
  std::int64_t size = 0;
  Money prize = 0;
  auto operator<=>(const Bucket&) const = default;
};

// Ordered bucket list, rank 1 first. Bucket j covers places
// sum(sizes of buckets before j)+1 .. sum(sizes through j).
struct PayoutStructure {
  std::vector<Bucket> buckets;

  std::int64_t winner_count() const;
  Money total_paid() const;

  // Per-place prize list: each bucket's prize repeated bucket-size times.
  std::vector<Money> expand() const;

  bool operator==(const PayoutStructure&) const = default;
};

enum class ViolationKind {
  budget,
  prize_monotonicity,
  bucket_size_monotonicity,
  nice_number,
  min_payout,
  winner_count,
  bucket_count,
};

std::string to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::int64_t magnitude = 0;
};

struct ViolationReport {
  std::vector<Violation> items;
  // 100 per winner short of N, 1 per winner beyond N, 10 per unit of
  // bucket-size inversion.
  std::int64_t constraint_cost = 0;

  bool ok() const { return items.empty(); }
  // Budget or prize-monotonicity failures; these make a table unpublishable.
  bool hard() const;
  const Violation* find(ViolationKind kind) const;
};

// Checks every structural requirement: exact budget, strictly decreasing
// prizes, nice prizes, minimum payout, exactly N winners, non-decreasing
// bucket sizes, and at most r buckets (fewer is fine).
ViolationReport validate(const PayoutStructure& structure, const ContestSpec& spec);

std::int64_t constraint_cost_of(std::span<const std::int64_t> sizes,
                                std::int64_t target_winners);

// Squared distance between the per-place payouts and the ideal curve.
// The shorter side is zero-padded, so extra or missing winners are charged
// at full prize value.
double cost(const PayoutStructure& structure, std::span<const double> ideal);

}  // namespace payouts
