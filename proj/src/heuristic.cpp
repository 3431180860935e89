#include "payouts/heuristic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace payouts {

namespace {

constexpr int kBetaEscalations = 200;
constexpr std::int64_t kCompletionCap = 10'000'000;

std::int64_t ceil_mul(double factor, std::int64_t size) {
  return static_cast<std::int64_t>(std::ceil(factor * static_cast<double>(size)));
}

std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
  if (b == 0) {
    x = 1;
    y = 0;
    return a;
  }
  std::int64_t x1 = 0, y1 = 0;
  const std::int64_t g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

// A way to finish stage 4 with the pool exactly spent, ranked by the
// weighted constraint cost, ties broken toward nice prizes.
struct Completion {
  std::vector<Bucket> buckets;
  std::int64_t cc = 0;
  int non_nice = 0;

  bool better_than(const Completion& other) const {
    if (cc != other.cc) return cc < other.cc;
    return non_nice < other.non_nice;
  }
};

// Dissolve the last two buckets and redistribute their money plus the
// leftover as (penultimate bucket, bottom bucket at prize E).
std::vector<Completion> two_bucket_completions(const std::vector<Bucket>& state,
                                               Money leftover,
                                               const ContestSpec& spec) {
  std::vector<Completion> found;
  if (state.size() < 2) return found;
  const Bucket last = state.back();
  const Bucket penultimate = state[state.size() - 2];
  const Money available =
      penultimate.size * penultimate.prize + last.size * last.prize + leftover;
  const Money bottom_prize = std::max<Money>(1, spec.min_payout);

  std::vector<Bucket> prefix(state.begin(), state.end() - 2);
  std::int64_t base_winners = 0;
  for (const Bucket& b : prefix) base_winners += b.size;
  const std::int64_t prefix_last_size = prefix.empty() ? 0 : prefix.back().size;

  Money prize_bound;  // exclusive upper bound for the penultimate prize
  if (!prefix.empty()) {
    prize_bound = prefix.back().prize;
  } else {
    const Money per_user = (leftover + last.size - 1) / last.size;
    prize_bound = last.prize + per_user + 1;
  }

  bool have_best = false;
  Completion best;
  Bucket best_penultimate{}, best_bottom{};
  std::int64_t examined = 0;

  for (std::int64_t s = 1; s <= spec.winners; ++s) {
    if (s * (bottom_prize + 1) > available - bottom_prize) break;
    const Money g = std::gcd(s, bottom_prize);
    if (available % g != 0) continue;
    const Money step = bottom_prize / g;

    // Solve s*p = available (mod bottom_prize) for p.
    Money first_p = bottom_prize + 1;
    if (step > 1) {
      std::int64_t inv = 0, unused = 0;
      ext_gcd(s / g, step, inv, unused);
      inv = ((inv % step) + step) % step;
      const Money residue = ((available / g) % step) * inv % step;
      const Money offset = (((residue - first_p) % step) + step) % step;
      first_p += offset;
    }

    const Money max_p = std::min(prize_bound - 1, (available - bottom_prize) / s);
    for (Money p = first_p; p <= max_p; p += step) {
      if (++examined > kCompletionCap)
        throw std::runtime_error("stage 4: completion enumeration exceeded budget");
      const std::int64_t bottom_n = (available - s * p) / bottom_prize;
      const std::int64_t winners = base_winners + s + bottom_n;
      const std::int64_t missing = std::max<std::int64_t>(0, spec.winners - winners);
      const std::int64_t extra = std::max<std::int64_t>(0, winners - spec.winners);
      const std::int64_t inversions =
          std::max<std::int64_t>(0, prefix_last_size - s) +
          std::max<std::int64_t>(0, s - bottom_n);
      Completion candidate;
      candidate.cc = 100 * missing + extra + 10 * inversions;
      candidate.non_nice = is_nice(p) ? 0 : 1;
      if (!have_best || candidate.better_than(best)) {
        have_best = true;
        best = candidate;
        best_penultimate = {s, p};
        best_bottom = {bottom_n, bottom_prize};
      }
    }
  }

  if (have_best) {
    best.buckets = prefix;
    best.buckets.push_back(best_penultimate);
    best.buckets.push_back(best_bottom);
    found.push_back(std::move(best));
  }
  return found;
}

}  // namespace

double solve_beta(std::int64_t n_remaining, std::int64_t terms) {
  if (terms < 1) throw std::invalid_argument("solve_beta: terms must be >= 1");
  if (n_remaining < terms)
    throw std::invalid_argument(
        "solve_beta: infeasible sizing, beta < 1 would be required");

  auto series = [terms](double beta) {
    double sum = 0.0, power = 1.0;
    for (std::int64_t k = 0; k < terms; ++k) {
      power *= beta;
      sum += power;
    }
    return sum;
  };

  const double target = static_cast<double>(n_remaining);
  if (n_remaining == terms) return 1.0;  // series(1) == terms

  double lo = 1.0, hi = 2.0;
  while (series(hi) < target) {
    hi *= 2.0;
    if (hi > 1e15) throw std::invalid_argument("solve_beta: series out of range");
  }
  double mid = 0.5 * (lo + hi);
  for (int it = 0; it < 300; ++it) {
    mid = 0.5 * (lo + hi);
    const double value = series(mid);
    if (std::abs(value - target) <= 1e-9) break;
    if (value < target)
      lo = mid;
    else
      hi = mid;
  }
  return mid;
}

std::vector<std::int64_t> stage1_bucket_sizes(const ContestSpec& spec) {
  double beta = 1.0;
  return stage1_bucket_sizes(spec, beta);
}

std::vector<std::int64_t> stage1_bucket_sizes(const ContestSpec& spec, double& beta) {
  const std::int64_t n = spec.winners;
  const std::int64_t q = spec.singleton_buckets;
  const std::int64_t r = spec.max_buckets;
  if (n < 1 || q < 1 || r < 1)
    throw std::invalid_argument("stage 1: winners, singletons and buckets must be >= 1");
  if (q > r)
    throw std::invalid_argument("stage 1: singleton_buckets exceeds max_buckets");

  beta = 1.0;
  if (n <= q) return std::vector<std::int64_t>(static_cast<std::size_t>(n), 1);
  if (n - q == 1) {
    if (q + 1 > r)
      throw std::runtime_error("stage 1: N winners do not fit in the bucket budget");
    return std::vector<std::int64_t>(static_cast<std::size_t>(q + 1), 1);
  }
  if (q == r)
    throw std::runtime_error("stage 1: N winners do not fit in the bucket budget");
  if (r - q == 1) {
    // No room for the two-bucket seam; one bucket takes the whole remainder.
    std::vector<std::int64_t> sizes(static_cast<std::size_t>(q), 1);
    sizes.push_back(n - q);
    return sizes;
  }

  const std::int64_t terms = r - q;
  double cur = n - q <= terms ? 1.0 : solve_beta(n - q, terms);

  for (int attempt = 0; attempt < kBetaEscalations; ++attempt) {
    std::vector<std::int64_t> sizes(static_cast<std::size_t>(q), 1);
    std::int64_t used = q;
    std::int64_t last = 1;
    while (true) {
      const std::int64_t one_more = ceil_mul(cur, last);
      const std::int64_t two_more = ceil_mul(cur * cur, last);
      if (used + one_more + two_more > n && used + one_more <= n) break;
      if (used + one_more > n) break;  // neither stop inequality holds
      sizes.push_back(one_more);
      used += one_more;
      last = one_more;
    }
    const std::int64_t rem = n - used;
    if (rem >= 2 * last) {
      sizes.push_back(rem / 2);
      sizes.push_back(rem - rem / 2);
    } else if (rem >= last) {
      sizes.push_back(rem);
    } else {
      sizes.back() += rem;  // too small for a monotone bucket of its own
    }
    if (static_cast<std::int64_t>(sizes.size()) <= r) {
      beta = cur;
      return sizes;
    }
    cur *= 1.05;
  }

  // Escalation exhausted; collapse the tail into a single bucket.
  std::vector<std::int64_t> sizes(static_cast<std::size_t>(q), 1);
  sizes.push_back(n - q);
  beta = cur;
  return sizes;
}

HeuristicState stage2_init_prizes(std::span<const std::int64_t> sizes,
                                  std::span<const double> ideal,
                                  std::int64_t guaranteed_singletons) {
  std::int64_t covered = 0;
  for (std::int64_t s : sizes) {
    if (s < 1) throw std::invalid_argument("stage 2: bucket sizes must be >= 1");
    covered += s;
  }
  if (covered != static_cast<std::int64_t>(ideal.size()))
    throw std::invalid_argument("stage 2: bucket sizes must cover the curve exactly");

  // The guaranteed singletons never merge away. When the carried leftover
  // pushes one's rounded prize up to its predecessor, it takes the next
  // nice number down instead.
  std::size_t guaranteed = 0;
  while (guaranteed < sizes.size() && sizes[guaranteed] == 1 &&
         guaranteed < static_cast<std::size_t>(std::max<std::int64_t>(
                          0, guaranteed_singletons)))
    ++guaranteed;

  HeuristicState state;
  auto& buckets = state.working.buckets;
  double leftover = 0.0;
  std::size_t pos = 0;
  for (std::size_t t = 0; t < sizes.size(); ++t) {
    const std::int64_t size = sizes[t];
    double available = leftover;
    for (std::int64_t i = 0; i < size; ++i) available += ideal[pos++];
    state.round_sums.push_back(available);
    const double average = available / static_cast<double>(size);
    if (average < 1.0)
      throw std::runtime_error("stage 2: budget exhausted, average prize below $1");
    Money prize = nice_floor(average);
    if (!buckets.empty() && prize >= buckets.back().prize) {
      const Money prev = buckets.back().prize;
      if (t < guaranteed && prev >= 2) {
        prize = nice_floor(static_cast<double>(prev - 1));
      } else {
        buckets.back().size += size;
        leftover = available - static_cast<double>(size) * static_cast<double>(prev);
        continue;
      }
    }
    buckets.push_back({size, prize});
    leftover = available - static_cast<double>(size) * static_cast<double>(prize);
  }
  state.leftover = leftover;
  return state;
}

void stage3_repair_sizes(HeuristicState& state) {
  auto& buckets = state.working.buckets;
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t t = 0; t + 1 < buckets.size(); ++t) {
      if (buckets[t].size <= buckets[t + 1].size) continue;
      const std::int64_t gap = buckets[t].size - buckets[t + 1].size;
      const std::int64_t m = (gap + 1) / 2;  // each move closes the gap by 2
      buckets[t].size -= m;
      buckets[t + 1].size += m;
      state.leftover += static_cast<double>(m) *
                        static_cast<double>(buckets[t].prize - buckets[t + 1].prize);
      moved = true;
    }
  }
}

HeuristicResult stage4_spend_leftover(HeuristicState state, const ContestSpec& spec,
                                      std::span<const double> ideal) {
  auto& buckets = state.working.buckets;
  if (buckets.empty()) throw std::invalid_argument("stage 4: empty structure");

  // Exact integer leftover; the real-valued one differs only by the
  // curve's sub-dollar budget tolerance, which cannot be paid out.
  Money leftover = spec.prize_pool - state.working.total_paid();
  if (leftover < 0)
    throw std::runtime_error("stage 4: structure already exceeds the prize pool");

  // (a) singleton buckets 2..q, raised toward the midpoint with their
  // predecessor, re-floored to nice. When the ideal payouts are known, a
  // raise also stops at the first nice number above the place's ideal:
  // spending leftover must not push a prize further from the curve than
  // the stage-2 rounding did.
  std::int64_t first_place = buckets[0].size;
  for (std::int64_t i = 1;
       i < spec.singleton_buckets && i < static_cast<std::int64_t>(buckets.size());
       first_place += buckets[static_cast<std::size_t>(i)].size, ++i) {
    if (leftover == 0) break;
    if (buckets[i].size != 1) continue;  // lost singleton status in a merge
    const double cap =
        0.5 * (static_cast<double>(buckets[i - 1].prize) +
               static_cast<double>(buckets[i].prize));
    double want = std::min(static_cast<double>(buckets[i].prize + leftover), cap);
    if (first_place < static_cast<std::int64_t>(ideal.size())) {
      const Money anchor =
          std::max(buckets[i].prize,
                   nice_ceil(ideal[static_cast<std::size_t>(first_place)]));
      want = std::min(want, static_cast<double>(anchor));
    }
    const Money raised = nice_floor(std::max(1.0, want));
    if (raised > buckets[i].prize) {
      leftover -= raised - buckets[i].prize;
      buckets[i].prize = raised;
    }
  }

  if (leftover > 0) {
    const auto snapshot = buckets;
    const Money leftover_before = leftover;

    // (b) dollar-wise raises across the whole final bucket, merging upward
    // on prize collision. First place is never touched.
    while (buckets.size() >= 2 && leftover >= buckets.back().size) {
      buckets.back().prize += 1;
      leftover -= buckets.back().size;
      if (buckets.back().prize == buckets[buckets.size() - 2].prize) {
        buckets[buckets.size() - 2].size += buckets.back().size;
        buckets.pop_back();
      }
    }

    // Solutions generated below compete on constraint cost: (c) spends the
    // tail as whole extra winners when it divides evenly; (d) rolls back
    // and rebuilds the last two buckets from scratch.
    std::vector<Completion> candidates;
    if (leftover % buckets.back().prize == 0) {
      Completion by_division;
      by_division.buckets = buckets;
      by_division.buckets.back().size += leftover / buckets.back().prize;
      by_division.cc = leftover / buckets.back().prize;  // extra winners only
      by_division.non_nice = is_nice(by_division.buckets.back().prize) ? 0 : 1;
      candidates.push_back(std::move(by_division));
    }
    for (Completion& rebuilt :
         two_bucket_completions(snapshot, leftover_before, spec))
      candidates.push_back(std::move(rebuilt));
    if (candidates.empty())
      throw std::runtime_error("stage 4: no feasible completion for the leftover");

    std::size_t pick = 0;
    for (std::size_t i = 1; i < candidates.size(); ++i)
      if (candidates[i].better_than(candidates[pick])) pick = i;
    buckets = std::move(candidates[pick].buckets);
    leftover = 0;
  }

  HeuristicResult result;
  result.structure = std::move(state.working);
  result.report = validate(result.structure, spec);
  result.extra_winners = result.structure.winner_count() - spec.winners;
  return result;
}

HeuristicResult heuristic_solve(const ContestSpec& spec, const IdealCurve& curve) {
  validate_spec(spec);
  if (static_cast<std::int64_t>(curve.payouts.size()) != spec.winners)
    throw std::invalid_argument("heuristic: curve length must equal winners");
  double beta = 1.0;
  const auto sizes = stage1_bucket_sizes(spec, beta);
  HeuristicState state =
      stage2_init_prizes(sizes, curve.payouts, spec.singleton_buckets);
  state.beta = beta;
  stage3_repair_sizes(state);
  return stage4_spend_leftover(std::move(state), spec, curve.payouts);
}

}  // namespace payouts
