#include "payouts/contest.hpp"

#include <stdexcept>

namespace payouts {

void validate_spec(const ContestSpec& spec) {
  if (spec.winners < 1) throw std::invalid_argument("spec: winners must be >= 1");
  if (spec.max_buckets < 1) throw std::invalid_argument("spec: max_buckets must be >= 1");
  if (spec.singleton_buckets < 1)
    throw std::invalid_argument("spec: singleton_buckets must be >= 1");
  if (spec.min_payout < 0) throw std::invalid_argument("spec: min_payout must be >= 0");
  if (spec.top_prize < spec.min_payout)
    throw std::invalid_argument("spec: top_prize must be >= min_payout");
  if (spec.prize_pool < spec.top_prize)
    throw std::invalid_argument("spec: prize_pool must be >= top_prize");
  if (spec.winners * spec.min_payout > spec.prize_pool)
    throw std::invalid_argument("spec: winners * min_payout exceeds prize_pool");
}

std::vector<std::string> spec_warnings(const ContestSpec& spec) {
  std::vector<std::string> warnings;
  if (spec.top_prize > 0 && !is_nice(spec.top_prize))
    warnings.push_back("top_prize " + std::to_string(spec.top_prize) +
                       " is not a nice number");
  if (spec.min_payout > 0 && !is_nice(spec.min_payout))
    warnings.push_back("min_payout " + std::to_string(spec.min_payout) +
                       " is not a nice number");
  if (!is_nice(spec.prize_pool))
    warnings.push_back("prize_pool " + std::to_string(spec.prize_pool) +
                       " is not a nice number; an all-nice table may not exist");
  return warnings;
}

}  // namespace payouts
