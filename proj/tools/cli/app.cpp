#include "app.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "errors.hpp"
#include "nomacr/admission.hpp"
#include "nomacr/maxmin.hpp"
#include "nomacr/montecarlo.hpp"
#include "nomacr/oracle.hpp"
#include "report.hpp"
#include "scenario_file.hpp"

namespace nomacr::cli {
namespace {

std::vector<Solver> solvers_for(SolverChoice choice) {
  switch (choice) {
    case SolverChoice::bisection:
      return {Solver::bisection};
    case SolverChoice::waterfill:
      return {Solver::waterfill};
    case SolverChoice::both:
      break;
  }
  return {Solver::bisection, Solver::waterfill};
}

void run_admit(const RunConfig& cfg, std::ostream& out) {
  const Scenario scenario = read_scenario_file(cfg.scenario_path);
  write_admission(out, cfg.format, scenario, admit(scenario, power_budget(scenario)));
}

void run_maxmin(const RunConfig& cfg, std::ostream& out) {
  const Scenario scenario = read_scenario_file(cfg.scenario_path);
  const double budget = power_budget(scenario);
  const AdmissionResult adm = admit(scenario, budget);
  if (adm.admitted_count == 0) {
    if (cfg.format == OutputFormat::table) {
      out << "0 admitted of " << scenario.num_sus() << "; nothing to redistribute\n";
    } else {
      write_maxmin(out, cfg.format, scenario.prefix(0), budget, {});
    }
    return;
  }
  const Scenario admitted = scenario.prefix(adm.admitted_count);
  std::vector<MaxMinSolution> solutions;
  for (Solver s : solvers_for(cfg.solver)) {
    solutions.push_back(solve(s, admitted, budget, cfg.epsilon));
  }
  write_maxmin(out, cfg.format, admitted, budget, solutions);
}

void run_verify(const RunConfig& cfg, std::ostream& out) {
  const Scenario scenario = read_scenario_file(cfg.scenario_path);
  const double budget = power_budget(scenario);
  const AdmissionResult adm = admit(scenario, budget);

  VerifyReport report;
  report.num_sus = scenario.num_sus();
  const auto thr = scenario.su_thresholds();
  report.equal_thresholds =
      std::all_of(thr.begin(), thr.end(), [&](double g) { return g == thr.front(); });
  report.greedy_admitted = adm.admitted_count;
  report.oracle_admitted = oracle_max_admitted(scenario, budget);

  if (adm.admitted_count == 0) {
    report.grid_skip_reason = "no user admitted";
  } else if (adm.admitted_count > kMaxGridUsers) {
    report.grid_skip_reason = std::to_string(adm.admitted_count) +
                              " admitted users; grid search handles at most " +
                              std::to_string(kMaxGridUsers);
  } else {
    const Scenario admitted = scenario.prefix(adm.admitted_count);
    report.grid = oracle_max_min_sinr(admitted, GridSpec{cfg.grid_points, budget});
    for (Solver s : solvers_for(SolverChoice::both)) {
      report.solutions.push_back(solve(s, admitted, budget, cfg.epsilon));
    }
  }
  write_verify(out, cfg.format, report);
}

void run_simulate(const RunConfig& cfg, std::ostream& out) {
  ExperimentOptions opts;
  opts.target_sinr_db = cfg.targets_db;
  opts.n_values = cfg.n_values;
  opts.runs = cfg.runs;
  opts.master_seed = cfg.master_seed;
  opts.threads = cfg.threads;
  opts.epsilon = cfg.epsilon;
  const bool csv = cfg.format == OutputFormat::csv;

  switch (cfg.experiment) {
    case Experiment::fig2: {
      const auto rows = run_fig2(cfg.model, opts);
      csv ? write_fig2_csv(out, rows) : write_stats_table(out, rows, false);
      break;
    }
    case Experiment::fig3: {
      const auto rows = run_fig3(cfg.model, opts);
      csv ? write_fig3_csv(out, rows) : write_stats_table(out, rows, true);
      break;
    }
    case Experiment::fig4: {
      const Snapshot snap = run_fig4(cfg.model, cfg.snapshot_users, cfg.snapshot_low_db,
                                     cfg.snapshot_high_db, cfg.master_seed, cfg.epsilon);
      csv ? write_fig4_csv(out, snap) : write_snapshot_table(out, snap);
      break;
    }
  }
}

}  // namespace

void execute(const RunConfig& cfg, std::ostream& out) {
  std::ostringstream buffer;
  std::ostream& sink = cfg.output_path.empty() ? out : buffer;
  switch (cfg.command) {
    case Command::admit:
      run_admit(cfg, sink);
      break;
    case Command::maxmin:
      run_maxmin(cfg, sink);
      break;
    case Command::verify:
      run_verify(cfg, sink);
      break;
    case Command::simulate:
      run_simulate(cfg, sink);
      break;
  }
  if (cfg.output_path.empty()) return;
  std::ofstream file(cfg.output_path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot write output file '" + cfg.output_path + "'");
  file << buffer.str();
  file.flush();
  if (!file) throw IoError("failed writing output file '" + cfg.output_path + "'");
}

int run_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    const RunConfig cfg = parse_config(args);
    if (!cfg.help_text.empty()) {
      out << cfg.help_text;
      return exit_code::kOk;
    }
    execute(cfg, out);
    return exit_code::kOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\nRun with --help for more information.\n";
    return exit_code::kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return exit_code::kParse;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return exit_code::kIo;
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << e.what() << '\n';
    return exit_code::kInfeasible;
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << '\n';
    return exit_code::kCapacity;
  } catch (const Error& e) {
    err << "invalid input: " << e.what() << '\n';
    return exit_code::kInvalidInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return exit_code::kInternal;
  }
}

}  // namespace nomacr::cli
