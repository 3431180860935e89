#include "payouts/dp_solver.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "payouts/nice_numbers.hpp"

namespace payouts {

namespace {

// Consumed winners/budget plus the last (so far highest) prize index and
// last bucket size; everything earlier choices need to know.
struct Key {
  std::int64_t winners = 0;
  Money budget = 0;
  std::int32_t prize_idx = -1;
  std::int64_t last_size = 0;
  bool operator==(const Key&) const = default;
  auto operator<=>(const Key&) const = default;
};

struct KeyHash {
  std::size_t operator()(const Key& k) const {
    std::uint64_t h = static_cast<std::uint64_t>(k.winners);
    h = h * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(k.budget);
    h = h * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(k.prize_idx + 1);
    h = h * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(k.last_size);
    return static_cast<std::size_t>(h ^ (h >> 32));
  }
};

struct Entry {
  Key key;
  double cost = 0.0;
  std::int32_t parent = -1;  // index into the previous level
};

struct FinalPick {
  bool found = false;
  double cost = 0.0;
  int level = 0;
  std::int64_t size = 0;
  std::int32_t prize_idx = -1;
  std::int32_t parent = -1;

  // Ties prefer fewer buckets, then a larger top-bucket size, then a
  // smaller top prize.
  bool better(double c, int lvl, std::int64_t s, std::int32_t pi) const {
    if (!found) return true;
    if (c != cost) return c < cost;
    if (lvl != level) return lvl < level;
    if (s != size) return s > size;
    return pi < prize_idx;
  }
};

}  // namespace

std::optional<PayoutStructure> dp_solve(const ContestSpec& spec,
                                        const IdealCurve& curve,
                                        const DpLimits& limits) {
  validate_spec(spec);
  const std::int64_t n = spec.winners;
  const Money pool = spec.prize_pool;
  if (static_cast<std::int64_t>(curve.payouts.size()) != n)
    throw std::invalid_argument("dp: curve length must equal winners");

  const std::vector<Money> prizes =
      enumerate_nice(std::max<Money>(1, spec.min_payout), pool);
  const std::int32_t num_prizes = static_cast<std::int32_t>(prizes.size());
  const double state_product = static_cast<double>(n) * static_cast<double>(pool) *
                               static_cast<double>(num_prizes);
  if (state_product > static_cast<double>(limits.max_state_product))
    throw std::runtime_error("dp: instance too large for exact solve");
  if (num_prizes == 0) return std::nullopt;

  // Prefix sums make any bucket's squared-error contribution O(1).
  std::vector<double> sum1(static_cast<std::size_t>(n) + 1, 0.0);
  std::vector<double> sum2(static_cast<std::size_t>(n) + 1, 0.0);
  for (std::int64_t i = 0; i < n; ++i) {
    const double v = curve.payouts[static_cast<std::size_t>(i)];
    sum1[static_cast<std::size_t>(i + 1)] = sum1[static_cast<std::size_t>(i)] + v;
    sum2[static_cast<std::size_t>(i + 1)] = sum2[static_cast<std::size_t>(i)] + v * v;
  }
  auto range_cost = [&](std::int64_t lo, std::int64_t hi, Money prize) {
    const double p = static_cast<double>(prize);
    const double s1 = sum1[static_cast<std::size_t>(hi)] - sum1[static_cast<std::size_t>(lo)];
    const double s2 = sum2[static_cast<std::size_t>(hi)] - sum2[static_cast<std::size_t>(lo)];
    return s2 - 2.0 * p * s1 + static_cast<double>(hi - lo) * p * p;
  };

  std::vector<std::vector<Entry>> levels;  // levels[j-1]: states with j buckets
  FinalPick best;

  const Entry root{};  // winners 0, budget 0, no prize yet, unbounded size
  for (int level = 1; level <= spec.max_buckets; ++level) {
    const std::vector<Entry>* prev = level == 1 ? nullptr : &levels[level - 2];
    const std::size_t prev_count = level == 1 ? 1 : prev->size();
    if (prev_count == 0) break;

    std::vector<Entry> next;
    std::unordered_map<Key, std::int32_t, KeyHash> index;
    const int remaining_buckets = spec.max_buckets - level;

    for (std::size_t pi = 0; pi < prev_count; ++pi) {
      const Entry& e = level == 1 ? root : (*prev)[pi];
      const std::int64_t used = e.key.winners;
      const Money spent = e.key.budget;
      const std::int64_t size_cap =
          level == 1 ? n : std::min(e.key.last_size, n - used);

      for (std::int64_t s = 1; s <= size_cap; ++s) {
        const std::int64_t left = n - used - s;
        // Every later bucket (toward rank 1) is no bigger than s.
        if (left > s * remaining_buckets) continue;
        for (std::int32_t k = e.key.prize_idx + 1; k < num_prizes; ++k) {
          const Money nb = spent + s * prizes[static_cast<std::size_t>(k)];
          if (nb > pool) break;
          if (left == 0) {
            if (nb != pool) continue;
          } else {
            if (k + 1 >= num_prizes) break;  // no strictly higher prize left
            // Remaining winners all earn strictly more than prizes[k].
            if (nb + left * prizes[static_cast<std::size_t>(k + 1)] > pool) break;
            if (nb + left * prizes.back() < pool) continue;
          }
          const double c =
              e.cost + range_cost(n - used - s, n - used, prizes[static_cast<std::size_t>(k)]);

          if (left == 0) {  // nb == pool: a complete structure
            const std::int32_t parent = level == 1 ? -1 : static_cast<std::int32_t>(pi);
            if (best.better(c, level, s, k)) {
              best.found = true;
              best.cost = c;
              best.level = level;
              best.size = s;
              best.prize_idx = k;
              best.parent = parent;
            }
            continue;
          }

          const Key key{used + s, nb, k, s};
          auto it = index.find(key);
          if (it == index.end()) {
            index.emplace(key, static_cast<std::int32_t>(next.size()));
            next.push_back({key, c, level == 1 ? -1 : static_cast<std::int32_t>(pi)});
          } else if (c < next[static_cast<std::size_t>(it->second)].cost) {
            next[static_cast<std::size_t>(it->second)].cost = c;
            next[static_cast<std::size_t>(it->second)].parent =
                level == 1 ? -1 : static_cast<std::int32_t>(pi);
          }
        }
      }
    }

    // Sorted processing keeps results independent of hash iteration order.
    std::sort(next.begin(), next.end(),
              [](const Entry& a, const Entry& b) { return a.key < b.key; });
    levels.push_back(std::move(next));
  }

  if (!best.found) return std::nullopt;

  PayoutStructure out;
  out.buckets.push_back({best.size, prizes[static_cast<std::size_t>(best.prize_idx)]});
  std::int32_t idx = best.parent;
  int level = best.level - 1;
  while (idx >= 0) {
    const Entry& e = levels[static_cast<std::size_t>(level - 1)][static_cast<std::size_t>(idx)];
    out.buckets.push_back(
        {e.key.last_size, prizes[static_cast<std::size_t>(e.key.prize_idx)]});
    idx = e.parent;
    --level;
  }
  return out;
}

}  // namespace payouts
