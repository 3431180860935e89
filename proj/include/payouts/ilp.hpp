#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "payouts/ideal_curve.hpp"
#include "payouts/structure.hpp"

namespace payouts {

// Admissible prizes p_1 > p_2 > ... > p_m, all nice.
struct PrizeLadder {
  std::vector<Money> prizes;
};

// Every nice number in [E, P1], highest first.
PrizeLadder default_ladder(const ContestSpec& spec);

// The binary program over contestant variables x_i_j_k (winner i sits in
// bucket j at prize p_k) and auxiliary variables y_j_k (bucket j pays p_k).
// Rows are generated on demand; the model itself stores only dimensions
// and coefficients.
struct IlpModel {
  std::int64_t winners = 0;      // N
  std::int64_t buckets = 0;      // r
  std::int64_t prize_count = 0;  // m
  Money prize_pool = 0;
  std::vector<double> ideal;     // length N
  std::vector<Money> prizes;     // length m, descending

  std::int64_t contestant_vars() const { return winners * buckets * prize_count; }
  std::int64_t aux_vars() const { return buckets * prize_count; }
  double objective_coeff(std::int64_t i, std::int64_t k) const;  // (pi_i - p_k)^2
};

struct IlpRowCounts {
  std::int64_t monotonicity = 0;       // r-1
  std::int64_t prize_pool = 0;         // 1
  std::int64_t bucket_size = 0;        // r-1
  std::int64_t one_bucket = 0;         // N
  std::int64_t one_prize = 0;          // r
  std::int64_t consistency = 0;        // N*r*m
  std::int64_t total() const;
};

IlpRowCounts row_counts(const IlpModel& model);

struct IlpBuildLimits {
  std::int64_t max_contestant_vars = 10'000'000;
};

IlpModel build_ilp(const ContestSpec& spec, const IdealCurve& curve,
                   const PrizeLadder& ladder, const IlpBuildLimits& limits = {});
IlpModel build_ilp(const ContestSpec& spec, const IdealCurve& curve);

std::string contestant_var_name(std::int64_t i, std::int64_t j, std::int64_t k);
std::string aux_var_name(std::int64_t j, std::int64_t k);

// Deterministic CPLEX-style LP text: Minimize / Subject To / Binary / End.
void write_lp(const IlpModel& model, std::ostream& out);
std::string to_lp_string(const IlpModel& model);

// Structural re-parse of our LP subset, for round-trip checks.
struct LpSummary {
  std::int64_t objective_terms = 0;
  std::int64_t constraint_rows = 0;
  std::int64_t binary_vars = 0;
  std::map<std::string, std::int64_t> rows_by_family;  // keyed by row-name prefix
};
LpSummary parse_lp(std::istream& in);

// Variable name -> 0/1. Fractional or out-of-range values are rejected at
// parse time.
using Assignment = std::map<std::string, int>;

// One "name value" pair per line; blank lines and '#' comments ignored.
Assignment read_solution(std::istream& in);

// Names of violated constraint rows, empty when the assignment satisfies
// the whole system.
std::vector<std::string> check_assignment(const IlpModel& model,
                                          const Assignment& assignment);

// Converts a satisfying assignment to a payout structure: bucket j pays
// p_k where y_j_k = 1, sizes come from the contestant variables, unused
// buckets are dropped. Consistency violations are rejected by name, as is
// a used bucket preceding an unused one.
PayoutStructure import_solution(const IlpModel& model, const Assignment& assignment);

// Inverse of import_solution: real buckets occupy the highest-numbered
// slots so that any unused buckets are the lowest-numbered ones.
Assignment structure_to_assignment(const IlpModel& model,
                                   const PayoutStructure& structure);

// Cost change from giving the higher of two prizes to the place with the
// higher ideal payout: -2*(pi_i - pi_j)*(p_high - p_low), never positive
// when pi_i >= pi_j and p_high > p_low.
double contiguity_exchange_delta(double pi_i, double pi_j, Money p_high, Money p_low);

}  // namespace payouts
