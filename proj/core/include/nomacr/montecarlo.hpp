#ifndef NOMACR_MONTECARLO_HPP
#define NOMACR_MONTECARLO_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "nomacr/maxmin.hpp"
#include "nomacr/scenario.hpp"

namespace nomacr {

/// Single cell with the base station at the centre; users dropped uniformly
/// over the disk. Link gain: K * 10^(H/10) * D^-exponent, H ~ N(0, sigma^2) dB.
struct ChannelModel {
  double cell_radius = 500.0;          // m
  double path_loss_exponent = 4.0;
  double shadowing_sigma_db = 6.0;
  double system_constant_k = 1e3;
  double min_distance = 1.0;           // m, clips the D^-4 singularity
  std::size_t num_sus = 0;
  std::size_t num_pus = 0;
  double su_noise_dbm = -120.0;
  double pu_interference_limit_dbm = -90.0;
  double p_max_dbm = 20.0;

  /// Throws DomainError on a non-physical configuration.
  void validate() const;
};

/// K * 10^(shadowing_db/10) * max(distance, min_distance)^-exponent.
double link_gain(const ChannelModel& model, double distance, double shadowing_db);

/// Mixes a master seed with a path of indices into a 64-bit seed. The result
/// depends only on the values, never on call order.
std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> path);

/// One random drop. All thresholds are set to 1 (0 dB); callers apply the
/// experiment's targets. Bit-for-bit reproducible for a given seed.
Scenario draw_scenario(const ChannelModel& model, std::uint64_t seed);

struct ExperimentOptions {
  std::vector<double> target_sinr_db{5.0, 10.0, 15.0, 20.0, 25.0};
  std::vector<std::size_t> n_values{5, 10, 15};
  std::size_t runs = 10000;
  std::uint64_t master_seed = 1;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
  double epsilon = kDefaultEpsilon;
};

struct ExperimentStats {
  double target_sinr_db = 0.0;
  std::size_t n_requesting = 0;
  std::size_t m_pus = 0;
  std::size_t runs = 0;
  std::uint64_t master_seed = 0;

  double mean_admitted = 0.0;
  double mean_targeted_sinr_db = 0.0;
  /// Averages in dB over runs that admitted at least one user (fig3 only).
  double mean_min_achieved_sinr_db = 0.0;
  double mean_all_achieved_sinr_db = 0.0;
  std::size_t runs_with_admission = 0;
  std::size_t runs_without_admission = 0;

  /// Runs where some primary user received more than I_m (1e-9 relative).
  std::size_t interference_violations = 0;
  /// Largest sum_n P_n g_m / I_m seen in any run.
  double max_interference_ratio = 0.0;
};

/// Mean admitted count over a (target, N) grid. Rows are grouped by N in
/// the order of options.n_values, targets ascending inside each block as
/// given. Every target of one N reuses the same drops.
std::vector<ExperimentStats> run_fig2(const ChannelModel& model,
                                      const ExperimentOptions& options);

/// As run_fig2, then spends the full budget with solve_waterfill and records
/// the achieved SINR.
std::vector<ExperimentStats> run_fig3(const ChannelModel& model,
                                      const ExperimentOptions& options);

struct SnapshotRow {
  std::size_t user_index = 0;  // 1-based, strongest user first
  double gain = 0.0;
  double target_db = 0.0;
  double achieved_db = 0.0;    // -inf for rejected users
  bool admitted = false;
};

struct Snapshot {
  std::vector<SnapshotRow> rows;
  std::size_t admitted = 0;
  double budget = 0.0;
  double theta_star_db = 0.0;  // meaningful only when admitted > 0
};

/// One drop with per-user targets drawn uniformly in dB over
/// [low_db, high_db], followed by admission and water-filling.
Snapshot run_fig4(const ChannelModel& model, std::size_t n, double low_db,
                  double high_db, std::uint64_t seed,
                  double epsilon = kDefaultEpsilon);

}  // namespace nomacr

#endif  // NOMACR_MONTECARLO_HPP
