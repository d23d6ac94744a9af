#ifndef NOMACR_CLI_REPORT_HPP
#define NOMACR_CLI_REPORT_HPP

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "config.hpp"
#include "nomacr/admission.hpp"
#include "nomacr/maxmin.hpp"
#include "nomacr/montecarlo.hpp"
#include "nomacr/oracle.hpp"

namespace nomacr::cli {

/// Six significant digits, '.' decimal point, independent of locale.
std::string format_number(double value);

void write_fig2_csv(std::ostream& out, std::span<const ExperimentStats> rows);
void write_fig3_csv(std::ostream& out, std::span<const ExperimentStats> rows);
void write_fig4_csv(std::ostream& out, const Snapshot& snapshot);
void write_stats_table(std::ostream& out, std::span<const ExperimentStats> rows,
                       bool with_sinr);
void write_snapshot_table(std::ostream& out, const Snapshot& snapshot);

void write_admission(std::ostream& out, OutputFormat format, const Scenario& scenario,
                     const AdmissionResult& result);

/// One or two solutions over the admitted prefix `admitted`. With two, the
/// absolute theta* discrepancy is reported.
void write_maxmin(std::ostream& out, OutputFormat format, const Scenario& admitted,
                  double budget, std::span<const MaxMinSolution> solutions);

struct VerifyReport {
  std::size_t num_sus = 0;
  bool equal_thresholds = true;
  std::size_t greedy_admitted = 0;
  std::size_t oracle_admitted = 0;
  /// Empty when phase 2 was skipped (nothing admitted or too many users).
  std::optional<GridSearchResult> grid;
  std::string grid_skip_reason;
  std::vector<MaxMinSolution> solutions;
};

void write_verify(std::ostream& out, OutputFormat format, const VerifyReport& report);

}  // namespace nomacr::cli

#endif  // NOMACR_CLI_REPORT_HPP
