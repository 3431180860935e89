#include "payouts/structure.hpp"

#include <algorithm>
#include <stdexcept>

namespace payouts {

namespace {

// Pairwise reduction keeps the accumulated error logarithmic in the term
// count; squared terms reach (1e7)^2 on the largest contests.
double pairwise_sum(std::size_t lo, std::size_t hi, const double* terms) {
  if (hi - lo <= 64) {
    double acc = 0.0;
    for (std::size_t i = lo; i < hi; ++i) acc += terms[i];
    return acc;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  return pairwise_sum(lo, mid, terms) + pairwise_sum(mid, hi, terms);
}

void check_buckets(const PayoutStructure& structure) {
  if (structure.buckets.empty())
    throw std::invalid_argument("structure: no buckets");
  for (const Bucket& b : structure.buckets) {
    if (b.size < 1) throw std::invalid_argument("structure: bucket size must be >= 1");
    if (b.prize < 1) throw std::invalid_argument("structure: bucket prize must be >= 1");
  }
}

}  // namespace

std::int64_t PayoutStructure::winner_count() const {
  std::int64_t n = 0;
  for (const Bucket& b : buckets) n += b.size;
  return n;
}

Money PayoutStructure::total_paid() const {
  Money total = 0;
  for (const Bucket& b : buckets) total += b.size * b.prize;
  return total;
}

std::vector<Money> PayoutStructure::expand() const {
  std::vector<Money> places;
  places.reserve(static_cast<std::size_t>(winner_count()));
  for (const Bucket& b : buckets)
    places.insert(places.end(), static_cast<std::size_t>(b.size), b.prize);
  return places;
}

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::budget: return "budget";
    case ViolationKind::prize_monotonicity: return "prize_monotonicity";
    case ViolationKind::bucket_size_monotonicity: return "bucket_size_monotonicity";
    case ViolationKind::nice_number: return "nice_number";
    case ViolationKind::min_payout: return "min_payout";
    case ViolationKind::winner_count: return "winner_count";
    case ViolationKind::bucket_count: return "bucket_count";
  }
  return "unknown";
}

bool ViolationReport::hard() const {
  return find(ViolationKind::budget) != nullptr ||
         find(ViolationKind::prize_monotonicity) != nullptr;
}

const Violation* ViolationReport::find(ViolationKind kind) const {
  for (const Violation& v : items)
    if (v.kind == kind) return &v;
  return nullptr;
}

std::int64_t constraint_cost_of(std::span<const std::int64_t> sizes,
                                std::int64_t target_winners) {
  std::int64_t winners = 0;
  for (std::int64_t s : sizes) winners += s;
  std::int64_t inversions = 0;
  for (std::size_t j = 0; j + 1 < sizes.size(); ++j)
    inversions += std::max<std::int64_t>(0, sizes[j] - sizes[j + 1]);
  const std::int64_t missing = std::max<std::int64_t>(0, target_winners - winners);
  const std::int64_t extra = std::max<std::int64_t>(0, winners - target_winners);
  return 100 * missing + 1 * extra + 10 * inversions;
}

ViolationReport validate(const PayoutStructure& structure, const ContestSpec& spec) {
  check_buckets(structure);
  const auto& buckets = structure.buckets;
  ViolationReport report;
  auto add = [&report](ViolationKind kind, std::int64_t magnitude) {
    if (magnitude > 0) report.items.push_back({kind, magnitude});
  };

  const Money total = structure.total_paid();
  add(ViolationKind::budget, std::abs(total - spec.prize_pool));

  std::int64_t non_strict_pairs = 0;
  std::int64_t size_inversions = 0;
  for (std::size_t j = 0; j + 1 < buckets.size(); ++j) {
    if (buckets[j].prize <= buckets[j + 1].prize) ++non_strict_pairs;
    size_inversions += std::max<std::int64_t>(0, buckets[j].size - buckets[j + 1].size);
  }
  add(ViolationKind::prize_monotonicity, non_strict_pairs);
  add(ViolationKind::bucket_size_monotonicity, size_inversions);

  std::int64_t non_nice = 0;
  std::int64_t min_shortfall = 0;
  for (const Bucket& b : buckets) {
    if (!is_nice(b.prize)) ++non_nice;
    min_shortfall += std::max<Money>(0, spec.min_payout - b.prize);
  }
  add(ViolationKind::nice_number, non_nice);
  add(ViolationKind::min_payout, min_shortfall);

  const std::int64_t winners = structure.winner_count();
  add(ViolationKind::winner_count, std::abs(winners - spec.winners));
  add(ViolationKind::bucket_count,
      std::max<std::int64_t>(0, static_cast<std::int64_t>(buckets.size()) -
                                    spec.max_buckets));

  const std::int64_t missing = std::max<std::int64_t>(0, spec.winners - winners);
  const std::int64_t extra = std::max<std::int64_t>(0, winners - spec.winners);
  report.constraint_cost = 100 * missing + 1 * extra + 10 * size_inversions;
  return report;
}

double cost(const PayoutStructure& structure, std::span<const double> ideal) {
  const std::vector<Money> places = structure.expand();
  const std::size_t n = std::max(places.size(), ideal.size());
  std::vector<double> terms(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double paid = i < places.size() ? static_cast<double>(places[i]) : 0.0;
    const double want = i < ideal.size() ? ideal[i] : 0.0;
    const double d = want - paid;
    terms[i] = d * d;
  }
  return pairwise_sum(0, n, terms.data());
}

}  // namespace payouts
