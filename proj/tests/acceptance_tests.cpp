// Acceptance suite: runs every release criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion (SKIP only where an optional
// external tool is absent). Exit status is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "payouts/bench.hpp"
#include "payouts/dp_solver.hpp"
#include "payouts/heuristic.hpp"
#include "payouts/ideal_curve.hpp"
#include "payouts/ilp.hpp"
#include "payouts/io.hpp"
#include "payouts/oracle.hpp"

using namespace payouts;
using clock_type = std::chrono::steady_clock;

namespace {

int g_failures = 0;

double ms_since(clock_type::time_point start) {
  return std::chrono::duration<double, std::milli>(clock_type::now() - start).count();
}

void report(int criterion, bool pass, const std::string& detail) {
  std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion,
              detail.c_str());
  if (!pass) ++g_failures;
}

void report_skip(int criterion, const std::string& detail) {
  std::printf("SKIP criterion %d: %s\n", criterion, detail.c_str());
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

// ---------------------------------------------------------------- criterion 1

void criterion1() {
  enumerate_nice(1, 10);  // warm up
  const auto t0 = clock_type::now();
  const auto published = enumerate_nice(1000, 3000);
  const auto first_decades = enumerate_nice(1, 1000);
  const double elapsed = ms_since(t0);

  const std::vector<Money> expected{1000, 1250, 1500, 1750, 2000, 2250, 2500, 3000};
  bool ok = published == expected;

  std::vector<Money> reference;
  for (Money v = 1; v <= 10; ++v) reference.push_back(v);
  for (Money v = 15; v <= 95; v += 5) reference.push_back(v);
  for (Money v = 100; v <= 225; v += 25) reference.push_back(v);
  for (Money v = 250; v <= 1000; v += 50) reference.push_back(v);
  ok = ok && first_decades == reference;
  ok = ok && elapsed < 1.0;
  report(1, ok,
         "nice-number fidelity: [1000,3000] list of " +
             std::to_string(published.size()) + ", [1,1000] list of " +
             std::to_string(first_decades.size()) + ", " + fmt(elapsed) + " ms");
}

// ---------------------------------------------------------------- criterion 2

void criterion2() {
  const ContestSpec fig2{1'000'000, 150'000, 25, 10'000, 25, 4};
  const auto t0 = clock_type::now();
  const IdealCurve curve = power_law_curve(fig2);
  const double elapsed = ms_since(t0);

  double sum = 0.0, carry = 0.0;
  for (double p : curve.payouts) {
    const double y = p - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  const double tolerance = std::max(0.01, 1e-9 * 1e6);
  const double gap = std::abs(sum - 1e6);
  const bool ok = gap <= tolerance && curve.payouts[0] == 150'000.0 && elapsed < 100.0;
  report(2, ok,
         "ideal-curve closure: |sum - B| = " + fmt(gap) + " (tol " + fmt(tolerance) +
             "), top " + fmt(curve.payouts[0]) + ", " + fmt(elapsed) + " ms");
}

// ---------------------------------------------------------------- criterion 3

struct Table1Row {
  const char* label;
  Money pool, top, min;
  std::int64_t winners, buckets, singletons;
  double paper_cost;
  std::int64_t paper_extra;
  bool star;  // rows published with a single nice-number violation
};

// The 25 benchmark contests. The rounded PGA pool is 10,000,000: the printed
// 1,000,000 contradicts both its own top prize and minimum payouts.
const Table1Row kTable1[] = {
    {"Yahoo 90", 90, 25, 2, 30, 7, 4, 2.35, 0, false},
    {"Yahoo 180", 180, 55, 3, 30, 10, 4, 3.44, 0, false},
    {"DraftKings 500", 500, 100, 8, 20, 10, 4, 9.21, 0, false},
    {"Yahoo 2250", 2250, 650, 150, 7, 7, 4, 187.4, 0, false},
    {"Yahoo 3000", 3000, 300, 2, 850, 25, 4, 86.9, 2, false},
    {"FanDuel 4000a", 4000, 900, 50, 40, 12, 4, 58.2, 1, false},
    {"FanDuel 4000b", 4000, 800, 75, 16, 7, 4, 230.1, 4, false},
    {"DraftKings 5000", 5000, 1250, 150, 11, 8, 4, 123.5, 0, false},
    {"Yahoo 10000", 10000, 1000, 7, 550, 25, 4, 97.3, 1, false},
    {"DraftKings 10000", 10000, 1500, 75, 42, 12, 4, 173.7, 0, false},
    {"FanDuel 18000", 18000, 4000, 150, 38, 10, 4, 347.0, 0, false},
    {"FanDuel 100000", 100000, 10000, 2, 23000, 25, 4, 3100, 34, false},
    {"Bassmaster 190700", 190700, 50000, 2000, 40, 15, 4, 3500, 0, true},
    {"Bassmaster 190000", 190000, 50000, 2000, 40, 15, 4, 2800, 0, false},
    {"FLW Fishing 751588", 751588, 100000, 9000, 60, 25, 4, 6000, 0, true},
    {"FLW Fishing 751500", 751500, 100000, 9000, 60, 25, 4, 6000, 0, false},
    {"FanDuel 1000000", 1000000, 100000, 15, 16000, 25, 4, 5300, 7, false},
    {"DraftKings 1000000", 1000000, 100000, 5, 85000, 40, 4, 25900, 0, false},
    {"Bassmaster 1031500", 1031500, 30000, 10000, 55, 25, 4, 13500, 0, true},
    {"FanDuel 5000000", 5000000, 1000000, 40, 46000, 30, 4, 44300, 0, false},
    {"PGA Golf 9715981", 9715981, 1800000, 20000, 69, 69, 4, 254500, 0, true},
    {"PGA Golf 10000000", 10000000, 1800000, 20000, 75, 75, 4, 215900, 9, true},
    {"DraftKings 10000000", 10000000, 2000000, 25, 125000, 40, 4, 78700, 0, false},
    {"Poker Stars 10393400", 10393400, 1750000, 15000, 160, 25, 4, 133000, 0, true},
    {"WSOP 60348000", 60348000, 8000000, 15000, 1000, 30, 9, 462300, 0, true},
};

// Cost every admissible all-nice table must pay: each place rounds to its
// closest nice number independently. Used to explain rows whose 3x bound is
// out of reach for any structure at all.
double nice_lower_bound(const IdealCurve& curve) {
  double lb = 0.0;
  for (double p : curve.payouts) {
    const double down = static_cast<double>(nice_floor(std::max(1.0, p)));
    const double up = static_cast<double>(nice_ceil(p));
    lb += std::min((p - down) * (p - down), (p - up) * (p - up));
  }
  return lb;
}

void criterion3() {
  bool all_ok = true;
  std::string first_fail;
  for (const Table1Row& row : kTable1) {
    ContestSpec spec{row.pool, row.top, row.min, row.winners, row.buckets,
                     row.singletons};
    const auto t0 = clock_type::now();
    IdealCurve curve;
    HeuristicResult result;
    try {
      curve = power_law_curve(spec);
      result = heuristic_solve(spec, curve);
    } catch (const std::exception& e) {
      all_ok = false;
      std::printf("  [3] %-22s solver error: %s\n", row.label, e.what());
      continue;
    }
    const double elapsed = ms_since(t0);
    const double limit_ms =
        (row.pool > 5'000'000 || row.winners >= 100'000) ? 30'000.0 : 5'000.0;

    const bool exact_total = result.structure.total_paid() == row.pool;
    bool strictly_decreasing = true;
    Money min_prize = result.structure.buckets.front().prize;
    std::int64_t nice_violations = 0;
    for (std::size_t j = 0; j < result.structure.buckets.size(); ++j) {
      const Bucket& b = result.structure.buckets[j];
      if (j + 1 < result.structure.buckets.size() &&
          b.prize <= result.structure.buckets[j + 1].prize)
        strictly_decreasing = false;
      min_prize = std::min(min_prize, b.prize);
      if (!is_nice(b.prize)) ++nice_violations;
    }
    const bool min_ok = min_prize >= row.min;
    const bool nice_ok = nice_violations <= (row.star ? 1 : 0);
    // The published benchmark numbers are Euclidean distances; the solver
    // objective is their square. Compare in the published units.
    const double row_cost = std::sqrt(cost(result.structure, curve.payouts));
    const bool cost_ok = row_cost <= 3.0 * row.paper_cost;
    const std::int64_t extra_cap = std::max<std::int64_t>(10, 2 * row.paper_extra);
    const bool extra_ok = std::llabs(result.extra_winners) <= extra_cap;
    const bool time_ok = elapsed <= limit_ms;

    const bool row_ok = exact_total && strictly_decreasing && min_ok && nice_ok &&
                        cost_ok && extra_ok && time_ok;
    if (!row_ok) {
      all_ok = false;
      std::printf(
          "  [3] %-22s total=%s decr=%s min=%s nice=%lld(%s) cost=%s vs 3x%s (%s) "
          "extra=%lld(cap %lld) %s ms\n",
          row.label, exact_total ? "ok" : "BAD", strictly_decreasing ? "ok" : "BAD",
          min_ok ? "ok" : "BAD", static_cast<long long>(nice_violations),
          nice_ok ? "ok" : "BAD", fmt(row_cost).c_str(), fmt(row.paper_cost).c_str(),
          cost_ok ? "ok" : "BAD", static_cast<long long>(result.extra_winners),
          static_cast<long long>(extra_cap), fmt(elapsed).c_str());
      if (!cost_ok) {
        const double lb = nice_lower_bound(curve);
        std::printf("      all-nice per-place lower bound: %s (bound %s)\n",
                    fmt(std::sqrt(lb)).c_str(), fmt(3.0 * row.paper_cost).c_str());
        const double product = static_cast<double>(row.winners) *
                               static_cast<double>(row.pool) * 60.0;
        if (product < 5e8 && row.winners <= 20) {
          try {
            DpLimits limits;
            limits.max_state_product = 500'000'000;
            const auto exact = dp_solve(spec, curve, limits);
            if (exact)
              std::printf("      exact optimum over all structures: %s\n",
                          fmt(std::sqrt(cost(*exact, curve.payouts))).c_str());
            else
              std::printf("      exact solver: no feasible structure\n");
          } catch (const std::exception& e) {
            std::printf("      exact solver unavailable here: %s\n", e.what());
          }
        }
      }
    }
  }
  report(3, all_ok, all_ok ? "heuristic reproduces all 25 benchmark contests"
                           : "heuristic benchmark bounds missed (rows above)");
}

// ----------------------------------------------------------- criteria 4 and 5

void criteria4and5() {
  std::mt19937_64 rng(20251109);
  const auto t0 = clock_type::now();
  int feasible = 0, infeasible = 0, dominance_checked = 0;
  int dp_mismatches = 0, verdict_mismatches = 0, invalid_dp = 0, dominance_broken = 0;
  int instances = 0;

  while ((feasible < 200 || dominance_checked < 30) && instances < 20'000) {
    ++instances;
    ContestSpec spec;
    spec.winners = std::uniform_int_distribution<std::int64_t>(1, 6)(rng);
    spec.min_payout = std::uniform_int_distribution<Money>(1, 3)(rng);
    spec.max_buckets = std::uniform_int_distribution<std::int64_t>(1, 3)(rng);
    spec.singleton_buckets = 1;
    spec.prize_pool =
        std::uniform_int_distribution<Money>(spec.winners * spec.min_payout, 40)(rng);
    spec.top_prize =
        std::min<Money>(spec.prize_pool,
                        spec.min_payout + std::uniform_int_distribution<Money>(0, 30)(rng));

    std::vector<double> payouts(static_cast<std::size_t>(spec.winners));
    double level = static_cast<double>(spec.top_prize) +
                   std::uniform_real_distribution<double>(0.0, 4.0)(rng);
    for (auto& p : payouts) {
      p = level;
      level = std::max(level - std::uniform_real_distribution<double>(0.0, 5.0)(rng),
                       static_cast<double>(spec.min_payout));
    }
    IdealCurve curve;
    curve.payouts = payouts;

    const auto all = enumerate_all(spec, curve);
    const auto best = dp_solve(spec, curve);
    if (all.empty() || !best.has_value()) {
      if (all.empty() != !best.has_value()) ++verdict_mismatches;
      ++infeasible;
      continue;
    }
    ++feasible;
    if (!validate(*best, spec).ok()) ++invalid_dp;
    const double dp_cost = cost(*best, curve.payouts);
    if (std::abs(dp_cost - all.front().second) >
        1e-9 * std::max(1.0, all.front().second))
      ++dp_mismatches;

    try {
      const auto heur = heuristic_solve(spec, curve);
      if (heur.report.ok()) {
        ++dominance_checked;
        if (cost(heur.structure, curve.payouts) < dp_cost - 1e-9) ++dominance_broken;
      }
    } catch (const std::exception&) {
    }
  }
  const double elapsed = ms_since(t0);

  const bool ok4 = feasible >= 200 && dp_mismatches == 0 && verdict_mismatches == 0 &&
                   invalid_dp == 0 && elapsed < 60'000.0;
  report(4, ok4,
         "dp exactness: " + std::to_string(feasible) + " feasible / " +
             std::to_string(infeasible) + " infeasible instances, " +
             std::to_string(dp_mismatches) + " cost mismatches, " +
             std::to_string(verdict_mismatches) + " verdict mismatches, " +
             fmt(elapsed) + " ms");
  const bool ok5 = dominance_checked >= 30 && dominance_broken == 0;
  report(5, ok5,
         "heuristic dominance: " + std::to_string(dominance_checked) +
             " clean heuristic runs, " + std::to_string(dominance_broken) +
             " beat the exact optimum");
}

// ---------------------------------------------------------------- criterion 6

void criterion6() {
  std::mt19937_64 rng(60606);
  int encoded = 0, row_violations = 0, inversion_failures = 0;
  int attempts = 0;
  while (encoded < 200 && attempts < 4000) {
    ++attempts;
    ContestSpec spec;
    spec.winners = std::uniform_int_distribution<std::int64_t>(1, 5)(rng);
    spec.min_payout = std::uniform_int_distribution<Money>(1, 3)(rng);
    spec.max_buckets = std::uniform_int_distribution<std::int64_t>(1, 3)(rng);
    spec.singleton_buckets = 1;
    spec.prize_pool =
        std::uniform_int_distribution<Money>(spec.winners * spec.min_payout, 30)(rng);
    spec.top_prize = spec.prize_pool;

    IdealCurve curve;
    curve.payouts.assign(static_cast<std::size_t>(spec.winners), 5.0);
    const auto all = enumerate_all(spec, curve);
    if (all.empty()) continue;

    PrizeLadder ladder;
    ladder.prizes =
        enumerate_nice(std::max<Money>(1, spec.min_payout), spec.prize_pool);
    std::reverse(ladder.prizes.begin(), ladder.prizes.end());
    const IlpModel model = build_ilp(spec, curve, ladder);

    const auto& pick =
        all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)].first;
    const Assignment assignment = structure_to_assignment(model, pick);
    if (!check_assignment(model, assignment).empty()) ++row_violations;
    if (!(import_solution(model, assignment) == pick)) ++inversion_failures;
    ++encoded;
  }

  int sign_failures = 0, identity_failures = 0;
  for (int t = 0; t < 10'000; ++t) {
    const double pj = std::uniform_real_distribution<double>(0.0, 1e6)(rng);
    const double pi = pj + std::uniform_real_distribution<double>(0.0, 1e5)(rng);
    const Money low = std::uniform_int_distribution<Money>(1, 500'000)(rng);
    const Money high = low + std::uniform_int_distribution<Money>(1, 100'000)(rng);
    const double delta = contiguity_exchange_delta(pi, pj, high, low);
    if (delta > 0.0) ++sign_failures;
    const double hi = static_cast<double>(high), lo = static_cast<double>(low);
    const double direct = ((pi - hi) * (pi - hi) + (pj - lo) * (pj - lo)) -
                          ((pi - lo) * (pi - lo) + (pj - hi) * (pj - hi));
    const double scale = std::max({1.0, std::abs(delta), std::abs(direct)});
    if (std::abs(delta - direct) > 1e-9 * scale) ++identity_failures;
  }

  const bool ok = encoded >= 200 && row_violations == 0 && inversion_failures == 0 &&
                  sign_failures == 0 && identity_failures == 0;
  report(6, ok,
         "ilp soundness: " + std::to_string(encoded) + " encoded structures, " +
             std::to_string(row_violations) + " row violations, " +
             std::to_string(inversion_failures) + " inversion failures, " +
             std::to_string(sign_failures) + "/" + std::to_string(identity_failures) +
             " exchange-delta failures");
}

// ---------------------------------------------------------------- criterion 7

void criterion7() {
  const ContestSpec spec{60'348'000, 8'000'000, 15'000, 1000, 30, 9};
  const auto t0 = clock_type::now();
  IdealCurve curve;
  HeuristicResult result;
  try {
    curve = power_law_curve(spec);
    result = heuristic_solve(spec, curve);
  } catch (const std::exception& e) {
    report(7, false, std::string("WSOP scenario: solver error: ") + e.what());
    return;
  }
  const double elapsed = ms_since(t0);

  std::int64_t nice_violations = 0;
  for (const Bucket& b : result.structure.buckets)
    if (!is_nice(b.prize)) ++nice_violations;
  bool singletons_ok = result.structure.buckets.size() >= 9;
  for (int j = 0; j < 9 && singletons_ok; ++j)
    singletons_ok = result.structure.buckets[static_cast<std::size_t>(j)].size == 1;

  const bool ok = result.structure.total_paid() == spec.prize_pool &&
                  nice_violations <= 1 && singletons_ok && elapsed < 5000.0;
  report(7, ok,
         "WSOP scenario: total " + std::to_string(result.structure.total_paid()) +
             ", " + std::to_string(nice_violations) + " nice violation(s), " +
             std::to_string(result.structure.buckets.size()) + " buckets, " +
             fmt(elapsed) + " ms");
}

// ---------------------------------------------------------------- criterion 8

Assignment parse_glpsol_columns(std::istream& in) {
  Assignment out;
  std::string line;
  bool in_columns = false;
  while (std::getline(in, line)) {
    if (line.find("Column name") != std::string::npos) {
      in_columns = true;
      continue;
    }
    if (in_columns && line.find("Karush-Kuhn") != std::string::npos) break;
    if (!in_columns) continue;
    std::istringstream ls(line);
    std::string no, name, star_or_activity, activity;
    if (!(ls >> no >> name)) continue;
    if (name.rfind("x_", 0) != 0 && name.rfind("y_", 0) != 0) continue;
    if (!(ls >> star_or_activity)) continue;
    std::string value = star_or_activity;
    if (value == "*") {
      if (!(ls >> activity)) continue;
      value = activity;
    }
    const double v = std::atof(value.c_str());
    out[name] = v > 0.5 ? 1 : 0;
  }
  return out;
}

void criterion8() {
  if (std::system("glpsol --version > /dev/null 2>&1") != 0) {
    report_skip(8, "ilp external check: no LP solver (glpsol) on PATH");
    return;
  }
  const ContestSpec spec{90, 25, 2, 30, 7, 4};
  const IdealCurve curve = power_law_curve(spec);
  const IlpModel model = build_ilp(spec, curve);
  const std::string lp_path = "/tmp/payouts_yahoo90.lp";
  const std::string sol_path = "/tmp/payouts_yahoo90.out";
  {
    std::ofstream lp(lp_path);
    write_lp(model, lp);
  }
  const std::string cmd =
      "glpsol --lp " + lp_path + " --output " + sol_path + " --tmlim 300 > /dev/null 2>&1";
  if (std::system(cmd.c_str()) != 0) {
    report(8, false, "ilp external check: glpsol failed to run");
    return;
  }
  std::ifstream sol(sol_path);
  const Assignment assignment = parse_glpsol_columns(sol);
  try {
    const PayoutStructure structure = import_solution(model, assignment);
    // Euclidean distance, the published unit.
    const double solved_cost = std::sqrt(cost(structure, curve.payouts));
    const bool ok = validate(structure, spec).ok() && solved_cost <= 1.2 * 0.89;
    report(8, ok, "ilp external check: solved cost " + fmt(solved_cost) +
                      " vs bound " + fmt(1.2 * 0.89));
  } catch (const std::exception& e) {
    report(8, false, std::string("ilp external check: ") + e.what());
  }
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criteria4and5();
  criterion6();
  criterion7();
  criterion8();
  if (g_failures == 0)
    std::printf("acceptance: all criteria passed\n");
  else
    std::printf("acceptance: %d criterion(s) failed\n", g_failures);
  return g_failures;
}
