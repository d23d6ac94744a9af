#include "config.hpp"

#include <algorithm>
#include <map>

#include "CLI11.hpp"
#include "errors.hpp"

namespace nomacr::cli {
namespace {

void add_output_options(CLI::App* sub, RunConfig& cfg) {
  static const std::map<std::string, OutputFormat> formats{{"csv", OutputFormat::csv},
                                                            {"table", OutputFormat::table}};
  sub->add_option("-o,--output", cfg.output_path, "Write results to this file (default stdout)");
  sub->add_option("--format", cfg.format, "csv or table")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
}

void add_scenario_option(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("-s,--scenario", cfg.scenario_path, "Scenario file")->required();
}

void add_epsilon_option(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--epsilon", cfg.epsilon, "Bisection tolerance on the linear SINR")
      ->check(CLI::PositiveNumber);
}

}  // namespace

RunConfig parse_config(const std::vector<std::string>& args) {
  RunConfig cfg;
  CLI::App app{"Two-phase power allocation for NOMA cognitive radio downlinks", "nomacr"};
  app.set_config("--config", "", "Read options from an INI/TOML file");
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.require_subcommand(1, 1);

  static const std::map<std::string, SolverChoice> solvers{
      {"bisection", SolverChoice::bisection},
      {"waterfill", SolverChoice::waterfill},
      {"both", SolverChoice::both}};
  static const std::map<std::string, Experiment> experiments{
      {"fig2", Experiment::fig2}, {"fig3", Experiment::fig3}, {"fig4", Experiment::fig4}};

  auto* admit_cmd = app.add_subcommand("admit", "Phase 1: greedy admission for a scenario file");
  add_scenario_option(admit_cmd, cfg);
  add_output_options(admit_cmd, cfg);

  auto* maxmin_cmd = app.add_subcommand("maxmin", "Phase 1 then max-min SINR redistribution");
  add_scenario_option(maxmin_cmd, cfg);
  add_epsilon_option(maxmin_cmd, cfg);
  maxmin_cmd->add_option("--solver", cfg.solver, "bisection, waterfill or both")
      ->transform(CLI::CheckedTransformer(solvers, CLI::ignore_case));
  add_output_options(maxmin_cmd, cfg);

  auto* verify_cmd = app.add_subcommand("verify", "Check both phases against exhaustive oracles");
  add_scenario_option(verify_cmd, cfg);
  add_epsilon_option(verify_cmd, cfg);
  verify_cmd->add_option("--grid-points", cfg.grid_points, "Grid points per power axis")
      ->check(CLI::Range(std::size_t{2}, std::size_t{100000000}));
  add_output_options(verify_cmd, cfg);

  auto* sim_cmd = app.add_subcommand("simulate", "Monte-Carlo experiments");
  sim_cmd->add_option("--experiment", cfg.experiment, "fig2, fig3 or fig4")
      ->required()
      ->transform(CLI::CheckedTransformer(experiments, CLI::ignore_case));
  sim_cmd->add_option("--pus", cfg.model.num_pus, "Number of primary users")->required();
  sim_cmd->add_option("--runs", cfg.runs, "Drops per grid point")->check(CLI::PositiveNumber);
  sim_cmd->add_option("--seed", cfg.master_seed, "Master seed")->envname(kSeedEnvVar);
  sim_cmd->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");
  sim_cmd->add_option("--targets-db", cfg.targets_db, "Targeted SINR grid in dB")
      ->delimiter(',');
  sim_cmd->add_option("--n", cfg.n_values, "Requesting secondary-user counts")->delimiter(',');
  sim_cmd->add_option("--snapshot-users", cfg.snapshot_users, "Users in the fig4 snapshot");
  sim_cmd->add_option("--snapshot-low-db", cfg.snapshot_low_db, "Lowest fig4 target");
  sim_cmd->add_option("--snapshot-high-db", cfg.snapshot_high_db, "Highest fig4 target");
  sim_cmd->add_option("--cell-radius", cfg.model.cell_radius, "Cell radius in metres");
  sim_cmd->add_option("--min-distance", cfg.model.min_distance, "Distance clip in metres");
  sim_cmd->add_option("--shadowing-db", cfg.model.shadowing_sigma_db,
                      "Log-normal shadowing standard deviation in dB");
  sim_cmd->add_option("--system-constant", cfg.model.system_constant_k, "Linear constant K");
  sim_cmd->add_option("--noise-dbm", cfg.model.su_noise_dbm, "Noise plus PU interference");
  sim_cmd->add_option("--interference-dbm", cfg.model.pu_interference_limit_dbm,
                      "Interference tolerable by each primary user");
  sim_cmd->add_option("--pmax-dbm", cfg.model.p_max_dbm, "Maximum transmit power");
  add_epsilon_option(sim_cmd, cfg);
  add_output_options(sim_cmd, cfg);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    cfg.help_text = app.help();
    for (const auto* sub : app.get_subcommands()) cfg.help_text = sub->help();
    return cfg;
  } catch (const CLI::CallForAllHelp&) {
    cfg.help_text = app.help("", CLI::AppFormatMode::All);
    return cfg;
  } catch (const CLI::ConversionError& e) {
    throw ParseError(e.what());
  } catch (const CLI::FileError& e) {
    throw IoError(e.what());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  if (app.got_subcommand(admit_cmd)) {
    cfg.command = Command::admit;
  } else if (app.got_subcommand(maxmin_cmd)) {
    cfg.command = Command::maxmin;
  } else if (app.got_subcommand(verify_cmd)) {
    cfg.command = Command::verify;
  } else {
    cfg.command = Command::simulate;
    // Figure data is plot input; default to CSV unless asked otherwise.
    if (sim_cmd->count("--format") == 0) cfg.format = OutputFormat::csv;
    if (cfg.targets_db.empty()) throw UsageError("--targets-db needs at least one value");
    if (cfg.n_values.empty()) throw UsageError("--n needs at least one value");
    if (cfg.snapshot_low_db > cfg.snapshot_high_db) {
      throw UsageError("--snapshot-low-db exceeds --snapshot-high-db");
    }
    try {
      cfg.model.validate();
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  }
  return cfg;
}

}  // namespace nomacr::cli
