#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <ostream>

#include "nomacr/units.hpp"

namespace nomacr::cli {
namespace {

std::string db_or_inf(double linear) {
  return linear > 0.0 ? format_number(linear_to_db(linear)) : "-inf";
}

// Left-aligned columns separated by two spaces.
class Table {
 public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  void print(std::ostream& out) const {
    std::vector<std::size_t> width(rows_.front().size(), 0);
    for (const auto& row : rows_) {
      for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    }
    for (const auto& row : rows_) {
      for (std::size_t c = 0; c + 1 < row.size(); ++c) {
        out << std::left << std::setw(static_cast<int>(width[c])) << row[c] << "  ";
      }
      if (!row.empty()) out << row.back();
      out << '\n';
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

}  // namespace

std::string format_number(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", value);
  return buf;
}

void write_fig2_csv(std::ostream& out, std::span<const ExperimentStats> rows) {
  out << "target_sinr_db,n_requesting,m_pus,runs,mean_admitted\n";
  for (const auto& r : rows) {
    out << format_number(r.target_sinr_db) << ',' << r.n_requesting << ',' << r.m_pus << ','
        << r.runs << ',' << format_number(r.mean_admitted) << '\n';
  }
}

void write_fig3_csv(std::ostream& out, std::span<const ExperimentStats> rows) {
  out << "target_sinr_db,n_requesting,m_pus,runs,mean_admitted,"
         "mean_min_achieved_sinr_db,mean_all_achieved_sinr_db\n";
  for (const auto& r : rows) {
    out << format_number(r.target_sinr_db) << ',' << r.n_requesting << ',' << r.m_pus << ','
        << r.runs << ',' << format_number(r.mean_admitted) << ','
        << format_number(r.mean_min_achieved_sinr_db) << ','
        << format_number(r.mean_all_achieved_sinr_db) << '\n';
  }
}

void write_fig4_csv(std::ostream& out, const Snapshot& snapshot) {
  out << "user_index,gain,target_db,achieved_db,admitted\n";
  for (const auto& r : snapshot.rows) {
    out << r.user_index << ',' << format_number(r.gain) << ',' << format_number(r.target_db)
        << ',' << format_number(r.achieved_db) << ',' << (r.admitted ? 1 : 0) << '\n';
  }
}

void write_stats_table(std::ostream& out, std::span<const ExperimentStats> rows,
                       bool with_sinr) {
  std::vector<std::string> header{"target_db", "N", "M", "runs", "mean_admitted"};
  if (with_sinr) {
    header.insert(header.end(), {"min_achieved_db", "all_achieved_db", "gain_db"});
  }
  Table t(header);
  for (const auto& r : rows) {
    std::vector<std::string> row{format_number(r.target_sinr_db),
                                 std::to_string(r.n_requesting), std::to_string(r.m_pus),
                                 std::to_string(r.runs), format_number(r.mean_admitted)};
    if (with_sinr) {
      row.push_back(format_number(r.mean_min_achieved_sinr_db));
      row.push_back(format_number(r.mean_all_achieved_sinr_db));
      row.push_back(format_number(r.mean_min_achieved_sinr_db - r.mean_targeted_sinr_db));
    }
    t.add(std::move(row));
  }
  t.print(out);
}

void write_snapshot_table(std::ostream& out, const Snapshot& snapshot) {
  out << "budget: " << format_number(snapshot.budget) << " W, admitted " << snapshot.admitted
      << " of " << snapshot.rows.size();
  if (snapshot.admitted > 0) out << ", theta* " << format_number(snapshot.theta_star_db) << " dB";
  out << '\n';
  Table t({"user", "gain", "target_db", "achieved_db", "admitted"});
  for (const auto& r : snapshot.rows) {
    t.add({std::to_string(r.user_index), format_number(r.gain), format_number(r.target_db),
           format_number(r.achieved_db), r.admitted ? "yes" : "no"});
  }
  t.print(out);
}

void write_admission(std::ostream& out, OutputFormat format, const Scenario& scenario,
                     const AdmissionResult& result) {
  const PowerVector powers = result.full_powers(scenario.num_sus());
  const std::vector<double> sinr = compute_sinr(scenario, powers);
  const auto original = scenario.original_index();

  if (format == OutputFormat::csv) {
    out << "user_index,original_index,gain_db,target_db,power_w,achieved_db,admitted\n";
    for (std::size_t n = 0; n < scenario.num_sus(); ++n) {
      out << n + 1 << ',' << original[n] << ',' << format_number(linear_to_db(scenario.su_gains()[n]))
          << ',' << format_number(linear_to_db(scenario.su_thresholds()[n])) << ','
          << format_number(powers[n]) << ',' << db_or_inf(sinr[n]) << ','
          << (n < result.admitted_count ? 1 : 0) << '\n';
    }
    return;
  }

  out << "budget: " << format_number(result.budget) << " W ("
      << format_number(watts_to_dbm(result.budget)) << " dBm)\n";
  out << result.admitted_count << " admitted of " << scenario.num_sus()
      << ", remaining power " << format_number(result.remaining_power) << " W\n";
  if (scenario.num_sus() == 0) return;
  Table t({"user", "original", "gain_db", "target_db", "power_w", "achieved_db", "admitted"});
  for (std::size_t n = 0; n < scenario.num_sus(); ++n) {
    t.add({std::to_string(n + 1), std::to_string(original[n]),
           format_number(linear_to_db(scenario.su_gains()[n])),
           format_number(linear_to_db(scenario.su_thresholds()[n])), format_number(powers[n]),
           db_or_inf(sinr[n]), n < result.admitted_count ? "yes" : "no"});
  }
  t.print(out);
}

void write_maxmin(std::ostream& out, OutputFormat format, const Scenario& admitted,
                  double budget, std::span<const MaxMinSolution> solutions) {
  const bool compare = solutions.size() == 2;
  const double discrepancy =
      compare ? std::abs(solutions[0].theta_star - solutions[1].theta_star) : 0.0;

  if (format == OutputFormat::csv) {
    out << "solver,user_index,power_w,target_db,achieved_db,theta_star_linear,"
           "theta_star_db,iterations";
    if (compare) out << ",theta_discrepancy";
    out << '\n';
    for (const auto& sol : solutions) {
      for (std::size_t n = 0; n < sol.powers.size(); ++n) {
        out << to_string(sol.solver) << ',' << n + 1 << ',' << format_number(sol.powers[n])
            << ',' << format_number(linear_to_db(admitted.su_thresholds()[n])) << ','
            << db_or_inf(sol.achieved_sinr[n]) << ',' << format_number(sol.theta_star) << ','
            << format_number(linear_to_db(sol.theta_star)) << ',' << sol.iterations;
        if (compare) out << ',' << format_number(discrepancy);
        out << '\n';
      }
    }
    return;
  }

  out << "budget: " << format_number(budget) << " W, " << admitted.num_sus()
      << " admitted users\n";
  for (const auto& sol : solutions) {
    out << '\n'
        << to_string(sol.solver) << ": theta* = " << format_number(linear_to_db(sol.theta_star))
        << " dB (" << format_number(sol.theta_star) << " linear), " << sol.iterations
        << " iterations\n";
    Table t({"user", "power_w", "target_db", "achieved_db"});
    for (std::size_t n = 0; n < sol.powers.size(); ++n) {
      t.add({std::to_string(n + 1), format_number(sol.powers[n]),
             format_number(linear_to_db(admitted.su_thresholds()[n])),
             db_or_inf(sol.achieved_sinr[n])});
    }
    t.print(out);
  }
  if (compare) {
    out << "\n|theta*_bisection - theta*_waterfill| = " << format_number(discrepancy) << '\n';
  }
}

void write_verify(std::ostream& out, OutputFormat format, const VerifyReport& report) {
  const bool phase1_match = report.greedy_admitted == report.oracle_admitted;
  if (format == OutputFormat::csv) {
    out << "check,solver_value,oracle_value,tolerance,match\n";
    out << "admitted_count," << report.greedy_admitted << ',' << report.oracle_admitted << ",0,"
        << (phase1_match ? 1 : 0) << '\n';
    if (report.grid && report.grid->min_sinr) {
      for (const auto& sol : report.solutions) {
        const double diff = std::abs(sol.theta_star - *report.grid->min_sinr);
        out << "theta_star_" << to_string(sol.solver) << ',' << format_number(sol.theta_star)
            << ',' << format_number(*report.grid->min_sinr) << ','
            << format_number(report.grid->resolution) << ','
            << (diff <= report.grid->resolution ? 1 : 0) << '\n';
      }
    }
    return;
  }

  out << "phase 1: greedy admits " << report.greedy_admitted << ", exhaustive search admits "
      << report.oracle_admitted << " of " << report.num_sus << " -> "
      << (phase1_match ? "match" : "MISMATCH") << '\n';
  if (!report.equal_thresholds) {
    out << "  (thresholds differ between users; greedy admission is not guaranteed optimal)\n";
  }
  if (!report.grid) {
    out << "phase 2: skipped (" << report.grid_skip_reason << ")\n";
    return;
  }
  if (!report.grid->min_sinr) {
    out << "phase 2: no grid point meets every threshold; refine --grid-points\n";
    return;
  }
  out << "phase 2: grid optimum " << format_number(*report.grid->min_sinr) << " linear ("
      << report.grid->points_evaluated << " points, resolution "
      << format_number(report.grid->resolution) << ")\n";
  for (const auto& sol : report.solutions) {
    const double diff = std::abs(sol.theta_star - *report.grid->min_sinr);
    out << "  " << to_string(sol.solver) << ": theta* = " << format_number(sol.theta_star)
        << ", |diff| = " << format_number(diff) << " -> "
        << (diff <= report.grid->resolution ? "within resolution" : "OUTSIDE resolution")
        << '\n';
  }
}

}  // namespace nomacr::cli
