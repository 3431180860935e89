#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "payouts/ideal_curve.hpp"
#include "payouts/structure.hpp"

namespace payouts {

struct EnumerationBudget {
  std::int64_t max_candidates = 10'000'000;
};

// Brute-force ground truth for tiny instances: every structure satisfying
// all constraints, each exactly once, paired with its cost and sorted by
// cost ascending (ties broken by bucket list). Throws std::runtime_error
// once the candidate budget is exceeded.
std::vector<std::pair<PayoutStructure, double>> enumerate_all(
    const ContestSpec& spec, const IdealCurve& curve,
    const EnumerationBudget& budget = {});

}  // namespace payouts
