#include "payouts/bench.hpp"

#include <cctype>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "payouts/dp_solver.hpp"
#include "payouts/heuristic.hpp"
#include "payouts/ideal_curve.hpp"
#include "payouts/ilp.hpp"

namespace payouts {

namespace {

std::string sanitize(const std::string& label) {
  std::string out;
  for (char c : label)
    out += (std::isalnum(static_cast<unsigned char>(c)) != 0) ? c : '_';
  return out.empty() ? "contest" : out;
}

std::string join_violations(const ViolationReport& report) {
  std::string out;
  for (const Violation& v : report.items) {
    if (!out.empty()) out += ';';
    out += to_string(v.kind) + ":" + std::to_string(v.magnitude);
  }
  return out.empty() ? "none" : out;
}

}  // namespace

SolverChoice solver_from_string(const std::string& name) {
  if (name == "heuristic") return SolverChoice::heuristic;
  if (name == "dp") return SolverChoice::dp;
  if (name == "ilp-export") return SolverChoice::ilp_export;
  throw std::invalid_argument("unknown solver '" + name + "'");
}

std::string to_string(SolverChoice solver) {
  switch (solver) {
    case SolverChoice::heuristic: return "heuristic";
    case SolverChoice::dp: return "dp";
    case SolverChoice::ilp_export: return "ilp-export";
  }
  return "unknown";
}

std::vector<BenchRow> run_bench(const std::vector<LabeledSpec>& contests,
                                SolverChoice solver,
                                const std::string& export_dir) {
  using clock = std::chrono::steady_clock;
  std::vector<BenchRow> rows;
  rows.reserve(contests.size());

  for (const LabeledSpec& contest : contests) {
    BenchRow row;
    row.label = contest.label;
    row.spec = contest.spec;
    row.solver = solver;
    try {
      validate_spec(contest.spec);
      const auto t0 = clock::now();
      IdealCurve curve;
      if (contest.spec.winners == 1) {
        curve.payouts = {static_cast<double>(contest.spec.top_prize)};
        curve.alpha = 1.0;
      } else {
        curve = power_law_curve(contest.spec);
      }

      if (solver == SolverChoice::ilp_export) {
        const IlpModel model = build_ilp(contest.spec, curve);
        const std::string text = to_lp_string(model);
        row.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             clock::now() - t0)
                             .count();
        if (!export_dir.empty()) {
          const std::string path = export_dir + "/" + sanitize(row.label) + ".lp";
          std::ofstream out(path);
          if (!out) throw std::runtime_error("cannot write " + path);
          out << text;
        }
        row.exported_only = true;
        rows.push_back(std::move(row));
        continue;
      }

      if (contest.spec.winners == 1) {
        row.structure.buckets.push_back({1, contest.spec.prize_pool});
      } else if (solver == SolverChoice::heuristic) {
        row.structure = heuristic_solve(contest.spec, curve).structure;
      } else {
        auto solved = dp_solve(contest.spec, curve);
        if (!solved) throw std::runtime_error("no feasible structure exists");
        row.structure = *solved;
      }
      row.runtime_ms =
          std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - t0)
              .count();

      row.cost = cost(row.structure, curve.payouts);
      row.report = validate(row.structure, contest.spec);
      row.extra_winners = row.structure.winner_count() - contest.spec.winners;
    } catch (const std::exception& e) {
      row.failed = true;
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << "label,solver,prize_pool,top_prize,min_payout,winners,max_buckets,"
         "cost,runtime_ms,extra_winners,constraint_cost,violations,status\n";
  for (const BenchRow& row : rows) {
    out << row.label << ',' << to_string(row.solver) << ',' << row.spec.prize_pool
        << ',' << row.spec.top_prize << ',' << row.spec.min_payout << ','
        << row.spec.winners << ',' << row.spec.max_buckets << ',';
    if (row.failed || row.exported_only)
      out << "--";
    else
      out << std::setprecision(10) << row.cost;
    out << ',' << row.runtime_ms << ',';
    if (row.failed || row.exported_only)
      out << "--,--,--";
    else
      out << row.extra_winners << ',' << row.report.constraint_cost << ','
          << join_violations(row.report);
    out << ',' << (row.failed ? "failed" : row.exported_only ? "exported" : "ok")
        << '\n';
  }
}

void write_bench_text(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << std::left << std::setw(28) << "label" << std::right << std::setw(11)
      << "solver" << std::setw(12) << "pool" << std::setw(9) << "winners"
      << std::setw(12) << "cost" << std::setw(9) << "ms" << std::setw(7) << "extra"
      << "  violations\n";
  for (const BenchRow& row : rows) {
    std::string label = row.label.substr(0, 27);
    out << std::left << std::setw(28) << label << std::right << std::setw(11)
        << to_string(row.solver) << std::setw(12) << row.spec.prize_pool
        << std::setw(9) << row.spec.winners;
    if (row.failed) {
      out << std::setw(12) << "--" << std::setw(9) << "--" << std::setw(7) << "--"
          << "  error: " << row.error << "\n";
      continue;
    }
    if (row.exported_only) {
      out << std::setw(12) << "--" << std::setw(9) << row.runtime_ms << std::setw(7)
          << "--" << "  exported\n";
      continue;
    }
    std::ostringstream cost_s;
    cost_s << std::setprecision(6) << row.cost;
    out << std::setw(12) << cost_s.str() << std::setw(9) << row.runtime_ms
        << std::setw(7) << row.extra_winners << "  " << join_violations(row.report)
        << "\n";
  }
}

}  // namespace payouts
