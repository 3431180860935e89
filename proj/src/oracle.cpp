#include "payouts/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "payouts/nice_numbers.hpp"

namespace payouts {

namespace {

struct Enumerator {
  const ContestSpec& spec;
  std::span<const double> ideal;
  const std::vector<Money> prizes;  // ascending nice numbers in [E, B]
  const std::int64_t cap;
  std::int64_t visited = 0;
  std::vector<std::int64_t> sizes;
  std::vector<Money> chosen;
  std::vector<std::pair<PayoutStructure, double>> results;

  Enumerator(const ContestSpec& s, std::span<const double> curve,
             const EnumerationBudget& budget)
      : spec(s),
        ideal(curve),
        prizes(enumerate_nice(std::max<Money>(1, s.min_payout), s.prize_pool)),
        cap(budget.max_candidates) {}

  void tick() {
    if (++visited > cap)
      throw std::runtime_error("oracle: enumeration exceeded candidate budget");
  }

  // Smallest spend the remaining buckets can take: the smallest distinct
  // prizes go to the largest (latest) buckets.
  Money min_suffix_spend(std::size_t from) const {
    Money total = 0;
    std::size_t p = 0;
    for (std::size_t t = sizes.size(); t-- > from;) {
      if (p >= prizes.size()) return -1;  // not enough distinct prizes
      total += sizes[t] * prizes[p++];
    }
    return total;
  }

  void assign_prizes(std::size_t idx, Money remaining, std::int32_t prev_idx) {
    const std::int64_t size = sizes[idx];
    if (idx + 1 == sizes.size()) {
      tick();
      if (remaining % size != 0) return;
      const Money p = remaining / size;
      if (p < prizes.front()) return;
      if (prev_idx >= 0 && p >= prizes[static_cast<std::size_t>(prev_idx)]) return;
      if (!is_nice(p) || p < std::max<Money>(1, spec.min_payout)) return;
      emit(p);
      return;
    }
    const std::int32_t hi =
        prev_idx >= 0 ? prev_idx - 1 : static_cast<std::int32_t>(prizes.size()) - 1;
    const std::int32_t lo = static_cast<std::int32_t>(sizes.size() - idx - 1);
    for (std::int32_t k = hi; k >= lo; --k) {  // k distinct prizes must fit below
      tick();
      const Money p = prizes[static_cast<std::size_t>(k)];
      const Money spend = size * p;
      if (spend > remaining) continue;
      const Money left = remaining - spend;
      const Money floor_needed = min_suffix_spend(idx + 1);
      if (floor_needed < 0 || left < floor_needed) continue;
      // Every later prize is below p; even paying p-1 everywhere caps the spend.
      Money later = 0;
      for (std::size_t t = idx + 1; t < sizes.size(); ++t) later += sizes[t];
      if (left > later * (p - 1)) break;  // smaller k only shrinks the cap
      chosen.push_back(p);
      assign_prizes(idx + 1, left, k);
      chosen.pop_back();
    }
  }

  void emit(Money last_prize) {
    PayoutStructure s;
    for (std::size_t t = 0; t < sizes.size(); ++t) {
      const Money p = t + 1 == sizes.size() ? last_prize : chosen[t];
      s.buckets.push_back({sizes[t], p});
    }
    results.emplace_back(std::move(s), 0.0);
  }

  void compositions(std::int64_t left, std::int64_t parts, std::int64_t min_part) {
    if (parts == 1) {
      if (left < min_part) return;
      sizes.push_back(left);
      if (!prizes.empty()) assign_prizes(0, spec.prize_pool, -1);
      sizes.pop_back();
      return;
    }
    for (std::int64_t s = min_part; s * parts <= left; ++s) {
      sizes.push_back(s);
      compositions(left - s, parts - 1, s);
      sizes.pop_back();
    }
  }

  void run() {
    const std::int64_t max_parts = std::min(spec.max_buckets, spec.winners);
    for (std::int64_t c = 1; c <= max_parts; ++c) compositions(spec.winners, c, 1);
    for (auto& entry : results) entry.second = cost(entry.first, ideal);
    std::sort(results.begin(), results.end(), [](const auto& a, const auto& b) {
      if (a.second != b.second) return a.second < b.second;
      return a.first.buckets < b.first.buckets;
    });
  }
};

}  // namespace

std::vector<std::pair<PayoutStructure, double>> enumerate_all(
    const ContestSpec& spec, const IdealCurve& curve,
    const EnumerationBudget& budget) {
  validate_spec(spec);
  if (static_cast<std::int64_t>(curve.payouts.size()) != spec.winners)
    throw std::invalid_argument("oracle: curve length must equal winners");
  Enumerator e(spec, curve.payouts, budget);
  e.run();
  return std::move(e.results);
}

}  // namespace payouts
