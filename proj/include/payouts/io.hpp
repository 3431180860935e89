#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "payouts/contest.hpp"
#include "payouts/structure.hpp"

namespace payouts {

struct LabeledSpec {
  std::string label;
  ContestSpec spec;
};

// Contest spec document (JSON): prize_pool, top_prize, winners, max_buckets,
// optional singleton_buckets (default 4), and exactly one of min_payout or
// entry_fee (E is then the nice ceiling of 1.5x the entry fee).
LabeledSpec parse_spec_json(const std::string& text);
LabeledSpec load_spec_file(const std::string& path);

// Suite file: a JSON array of spec objects.
std::vector<LabeledSpec> parse_suite_json(const std::string& text);
std::vector<LabeledSpec> load_suite_file(const std::string& path);

// CSV with header place_from,place_to,prize.
void write_structure_csv(std::ostream& out, const PayoutStructure& structure);
PayoutStructure read_structure_csv(std::istream& in);

// Right-aligned table with a recomputed total row.
void write_structure_text(std::ostream& out, const PayoutStructure& structure);

}  // namespace payouts
