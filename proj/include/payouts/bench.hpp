#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "payouts/io.hpp"
#include "payouts/structure.hpp"

namespace payouts {

enum class SolverChoice { heuristic, dp, ilp_export };

SolverChoice solver_from_string(const std::string& name);
std::string to_string(SolverChoice solver);

// One benchmark result. Cost and violations are recomputed from the
// returned structure, never taken from the solver.
struct BenchRow {
  std::string label;
  ContestSpec spec;
  SolverChoice solver = SolverChoice::heuristic;
  bool failed = false;
  std::string error;
  bool exported_only = false;  // ilp-export rows without a solution file
  PayoutStructure structure;
  double cost = 0.0;
  std::int64_t runtime_ms = 0;
  std::int64_t extra_winners = 0;
  ViolationReport report;
};

// Runs every contest with the chosen solver. Per-row failures are recorded
// and the run continues. ilp-export rows build and serialize the model
// (optionally into export_dir) without solving it.
std::vector<BenchRow> run_bench(const std::vector<LabeledSpec>& contests,
                                SolverChoice solver,
                                const std::string& export_dir = "");

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);
void write_bench_text(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace payouts
