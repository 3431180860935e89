#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "payouts/bench.hpp"
#include "payouts/dp_solver.hpp"
#include "payouts/heuristic.hpp"
#include "payouts/ideal_curve.hpp"
#include "payouts/ilp.hpp"
#include "payouts/io.hpp"

namespace {

using namespace payouts;

std::ostream& open_output(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot write " + path);
  return file;
}

void print_warnings(const ContestSpec& spec) {
  for (const std::string& w : spec_warnings(spec))
    std::cerr << "warning: " << w << "\n";
}

IdealCurve make_curve(const ContestSpec& spec, const std::string& kind) {
  if (spec.winners == 1) {
    IdealCurve curve;
    curve.payouts = {static_cast<double>(spec.top_prize)};
    curve.alpha = 1.0;
    return curve;
  }
  return kind == "exp" ? exponential_curve(spec) : power_law_curve(spec);
}

int run_generate(const std::string& spec_path, const std::string& solver_name,
                 const std::string& curve_kind, const std::string& format,
                 const std::string& out_path, const std::string& solution_path,
                 std::int64_t singletons_override) {
  LabeledSpec contest = load_spec_file(spec_path);
  if (singletons_override > 0) contest.spec.singleton_buckets = singletons_override;
  validate_spec(contest.spec);
  print_warnings(contest.spec);
  const SolverChoice solver = solver_from_string(solver_name);
  const IdealCurve curve = make_curve(contest.spec, curve_kind);

  PayoutStructure structure;
  if (contest.spec.winners == 1) {
    if (!is_nice(contest.spec.prize_pool))
      std::cerr << "warning: single-winner pool is not a nice number\n";
    structure.buckets.push_back({1, contest.spec.prize_pool});
  } else if (solver == SolverChoice::heuristic) {
    structure = heuristic_solve(contest.spec, curve).structure;
  } else if (solver == SolverChoice::dp) {
    auto solved = dp_solve(contest.spec, curve);
    if (!solved) {
      std::cerr << "error: no structure satisfies every constraint\n";
      return 2;
    }
    structure = *solved;
  } else {  // ilp-export
    const IlpModel model = build_ilp(contest.spec, curve);
    if (solution_path.empty()) {
      std::ofstream file;
      std::ostream& out = open_output(file, out_path);
      write_lp(model, out);
      std::cerr << "model: " << model.contestant_vars() + model.aux_vars()
                << " binary variables, " << row_counts(model).total()
                << " constraint rows\n";
      return 0;
    }
    std::ifstream sol(solution_path);
    if (!sol) throw std::runtime_error("cannot open " + solution_path);
    structure = import_solution(model, read_solution(sol));
  }

  const ViolationReport report = validate(structure, contest.spec);
  const double distance = cost(structure, curve.payouts);

  std::ofstream file;
  std::ostream& out = open_output(file, out_path);
  if (format == "csv") {
    write_structure_csv(out, structure);
  } else {
    if (!contest.label.empty()) out << contest.label << "\n";
    write_structure_text(out, structure);
    out << "cost vs ideal curve: " << distance << "\n";
    out << "extra winners: " << structure.winner_count() - contest.spec.winners
        << "\n";
    if (report.ok()) {
      out << "violations: none\n";
    } else {
      for (const Violation& v : report.items)
        out << "violation: " << to_string(v.kind) << " magnitude " << v.magnitude
            << "\n";
      out << "constraint cost: " << report.constraint_cost << "\n";
    }
  }
  return report.hard() ? 1 : 0;
}

int run_curve(const std::string& spec_path, const std::string& curve_kind,
              const std::string& out_path, std::int64_t singletons_override) {
  LabeledSpec contest = load_spec_file(spec_path);
  if (singletons_override > 0) contest.spec.singleton_buckets = singletons_override;
  validate_spec(contest.spec);
  print_warnings(contest.spec);
  const IdealCurve curve = make_curve(contest.spec, curve_kind);
  std::ofstream file;
  std::ostream& out = open_output(file, out_path);
  write_curve(out, curve);
  return 0;
}

int run_bench_cmd(const std::string& suite_path, const std::string& solver_name,
                  const std::string& format, const std::string& out_path,
                  const std::string& export_dir) {
  const std::vector<LabeledSpec> contests = load_suite_file(suite_path);
  const auto rows = run_bench(contests, solver_from_string(solver_name), export_dir);
  std::ofstream file;
  std::ostream& out = open_output(file, out_path);
  if (format == "csv")
    write_bench_csv(out, rows);
  else
    write_bench_text(out, rows);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tournament payout structure generator"};
  app.require_subcommand(1);

  std::string spec_path, suite_path, out_path, solution_path, export_dir;
  std::string solver = "heuristic";
  std::string curve_kind = "power";
  std::string format = "text";
  std::int64_t singletons = 0;

  auto* generate = app.add_subcommand("generate", "Generate a payout table");
  generate->add_option("spec", spec_path, "contest spec file (JSON)")->required();
  generate->add_option("--solver", solver, "heuristic|dp|ilp-export");
  generate->add_option("--curve", curve_kind, "power|exp")
      ->check(CLI::IsMember({"power", "exp"}));
  generate->add_option("--format", format, "text|csv")
      ->check(CLI::IsMember({"text", "csv"}));
  generate->add_option("--out", out_path, "output path (default stdout)");
  generate->add_option("--solution", solution_path,
                       "variable assignment file for ilp-export");
  generate->add_option("--singletons", singletons, "override singleton bucket count");

  auto* curve = app.add_subcommand("curve", "Write the ideal curve");
  curve->add_option("spec", spec_path, "contest spec file (JSON)")->required();
  curve->add_option("--curve", curve_kind, "power|exp")
      ->check(CLI::IsMember({"power", "exp"}));
  curve->add_option("--out", out_path, "output path (default stdout)");
  curve->add_option("--singletons", singletons, "override singleton bucket count");

  auto* bench = app.add_subcommand("bench", "Run a contest suite");
  bench->add_option("suite", suite_path, "suite file (JSON array)")->required();
  bench->add_option("--solver", solver, "heuristic|dp|ilp-export");
  bench->add_option("--format", format, "text|csv")
      ->check(CLI::IsMember({"text", "csv"}));
  bench->add_option("--out", out_path, "output path (default stdout)");
  bench->add_option("--export-dir", export_dir, "directory for exported models");

  CLI11_PARSE(app, argc, argv);

  try {
    if (generate->parsed())
      return run_generate(spec_path, solver, curve_kind, format, out_path,
                          solution_path, singletons);
    if (curve->parsed()) return run_curve(spec_path, curve_kind, out_path, singletons);
    return run_bench_cmd(suite_path, solver, format, out_path, export_dir);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
