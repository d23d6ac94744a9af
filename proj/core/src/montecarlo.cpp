#include "nomacr/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <thread>

#include "nomacr/admission.hpp"
#include "nomacr/errors.hpp"
#include "nomacr/units.hpp"

namespace nomacr {
namespace {

constexpr std::uint64_t kFig2Stream = 2;
constexpr std::uint64_t kFig3Stream = 3;
constexpr std::uint64_t kFig4TargetStream = 4;
constexpr double kAuditTolerance = 1e-9;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Outcome of one (drop, target) pair.
struct RunRecord {
  std::size_t admitted = 0;
  double min_sinr_db = 0.0;
  double mean_sinr_db = 0.0;
  double interference_ratio = 0.0;
};

double interference_ratio(const Scenario& scenario, std::span<const double> powers) {
  double total = 0.0;
  for (double p : powers) total += p;
  double worst = 0.0;
  const auto gains = scenario.pu_gains();
  const auto limits = scenario.pu_interference_limits();
  for (std::size_t m = 0; m < gains.size(); ++m) {
    worst = std::max(worst, total * gains[m] / limits[m]);
  }
  return worst;
}

// Runs `body(run)` for run in [0, runs) on `threads` workers. Each run writes
// only its own slots, so the result does not depend on scheduling.
template <typename Body>
void parallel_runs(std::size_t runs, unsigned threads, Body body) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(runs, 1)));
  if (threads <= 1) {
    for (std::size_t r = 0; r < runs; ++r) body(r);
    return;
  }
  std::vector<std::jthread> workers;
  workers.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    workers.emplace_back([&, t] {
      for (std::size_t r = t; r < runs; r += threads) body(r);
    });
  }
}

std::vector<ExperimentStats> run_grid(const ChannelModel& model,
                                      const ExperimentOptions& options,
                                      std::uint64_t stream, bool spend_remaining) {
  model.validate();
  if (options.runs == 0) throw DomainError("experiment needs at least one run");
  if (!(options.epsilon > 0.0)) throw DomainError("epsilon must be positive");

  const std::size_t targets = options.target_sinr_db.size();
  std::vector<double> thresholds(targets);
  for (std::size_t g = 0; g < targets; ++g) {
    thresholds[g] = db_to_linear(options.target_sinr_db[g]);
  }

  std::vector<ExperimentStats> out;
  out.reserve(options.n_values.size() * targets);
  for (std::size_t n_users : options.n_values) {
    ChannelModel drop_model = model;
    drop_model.num_sus = n_users;

    std::vector<RunRecord> records(options.runs * targets);
    parallel_runs(options.runs, options.threads, [&](std::size_t run) {
      const Scenario drop =
          draw_scenario(drop_model, derive_seed(options.master_seed, {stream, n_users, run}));
      const double budget = power_budget(drop);
      for (std::size_t g = 0; g < targets; ++g) {
        RunRecord& rec = records[run * targets + g];
        const Scenario scenario = drop.with_common_threshold(thresholds[g]);
        const AdmissionResult adm = admit(scenario, budget);
        rec.admitted = adm.admitted_count;
        rec.interference_ratio = interference_ratio(scenario, adm.powers);
        if (!spend_remaining || adm.admitted_count == 0) continue;

        const MaxMinSolution sol =
            solve_waterfill(scenario.prefix(adm.admitted_count), budget, options.epsilon);
        double min_sinr = std::numeric_limits<double>::infinity();
        double sum_db = 0.0;
        for (double s : sol.achieved_sinr) {
          min_sinr = std::min(min_sinr, s);
          sum_db += linear_to_db(s);
        }
        rec.min_sinr_db = linear_to_db(min_sinr);
        rec.mean_sinr_db = sum_db / static_cast<double>(sol.achieved_sinr.size());
        rec.interference_ratio = interference_ratio(scenario, sol.powers);
      }
    });

    // Fixed-order reduction over runs.
    for (std::size_t g = 0; g < targets; ++g) {
      ExperimentStats st;
      st.target_sinr_db = options.target_sinr_db[g];
      st.n_requesting = n_users;
      st.m_pus = model.num_pus;
      st.runs = options.runs;
      st.master_seed = options.master_seed;
      st.mean_targeted_sinr_db = options.target_sinr_db[g];
      double admitted_sum = 0.0;
      double min_sum = 0.0;
      double all_sum = 0.0;
      for (std::size_t run = 0; run < options.runs; ++run) {
        const RunRecord& rec = records[run * targets + g];
        admitted_sum += static_cast<double>(rec.admitted);
        st.max_interference_ratio = std::max(st.max_interference_ratio, rec.interference_ratio);
        if (rec.interference_ratio > 1.0 + kAuditTolerance) ++st.interference_violations;
        if (rec.admitted == 0) {
          ++st.runs_without_admission;
          continue;
        }
        ++st.runs_with_admission;
        min_sum += rec.min_sinr_db;
        all_sum += rec.mean_sinr_db;
      }
      st.mean_admitted = admitted_sum / static_cast<double>(options.runs);
      if (spend_remaining && st.runs_with_admission > 0) {
        const auto k = static_cast<double>(st.runs_with_admission);
        st.mean_min_achieved_sinr_db = min_sum / k;
        st.mean_all_achieved_sinr_db = all_sum / k;
      }
      out.push_back(st);
    }
  }
  return out;
}

}  // namespace

void ChannelModel::validate() const {
  auto fail = [](const std::string& msg) { throw DomainError("channel model: " + msg); };
  if (!(min_distance > 0.0)) fail("min_distance must be positive");
  if (!(cell_radius > min_distance)) fail("cell_radius must exceed min_distance");
  if (!(path_loss_exponent > 0.0)) fail("path_loss_exponent must be positive");
  if (!(shadowing_sigma_db >= 0.0)) fail("shadowing sigma must be non-negative");
  if (!(system_constant_k > 0.0)) fail("system constant K must be positive");
  for (double v : {su_noise_dbm, pu_interference_limit_dbm, p_max_dbm}) {
    if (!std::isfinite(v)) fail("noise, interference limit and p_max must be finite");
  }
}

double link_gain(const ChannelModel& model, double distance, double shadowing_db) {
  const double d = std::max(distance, model.min_distance);
  return model.system_constant_k * db_to_linear(shadowing_db) *
         std::pow(d, -model.path_loss_exponent);
}

std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> path) {
  std::uint64_t h = splitmix64(master);
  for (std::uint64_t v : path) h = splitmix64(h ^ splitmix64(v));
  return h;
}

Scenario draw_scenario(const ChannelModel& model, std::uint64_t seed) {
  model.validate();
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> shadow(0.0, model.shadowing_sigma_db > 0.0
                                                   ? model.shadowing_sigma_db
                                                   : 1.0);
  const bool shadowing = model.shadowing_sigma_db > 0.0;

  // Only the distance to the centre matters, so the angle is not drawn.
  // r = R sqrt(u) is uniform over the disk area.
  auto draw_gain = [&] {
    const double distance = model.cell_radius * std::sqrt(unit(gen));
    const double h = shadowing ? shadow(gen) : 0.0;
    return link_gain(model, distance, h);
  };

  RawScenario raw;
  const double noise = dbm_to_watts(model.su_noise_dbm);
  for (std::size_t n = 0; n < model.num_sus; ++n) {
    raw.su_gains.push_back(draw_gain());
    raw.su_noise.push_back(noise);
    raw.su_thresholds.push_back(1.0);
  }
  const double limit = dbm_to_watts(model.pu_interference_limit_dbm);
  for (std::size_t m = 0; m < model.num_pus; ++m) {
    raw.pu_gains.push_back(draw_gain());
    raw.pu_interference_limits.push_back(limit);
  }
  raw.p_max = dbm_to_watts(model.p_max_dbm);
  return sort_users(std::move(raw));
}

std::vector<ExperimentStats> run_fig2(const ChannelModel& model,
                                      const ExperimentOptions& options) {
  return run_grid(model, options, kFig2Stream, false);
}

std::vector<ExperimentStats> run_fig3(const ChannelModel& model,
                                      const ExperimentOptions& options) {
  return run_grid(model, options, kFig3Stream, true);
}

Snapshot run_fig4(const ChannelModel& model, std::size_t n, double low_db,
                  double high_db, std::uint64_t seed, double epsilon) {
  if (!(low_db <= high_db)) throw DomainError("run_fig4: empty target range");
  ChannelModel drop_model = model;
  drop_model.num_sus = n;
  const Scenario drop = draw_scenario(drop_model, seed);

  std::mt19937_64 gen(derive_seed(seed, {kFig4TargetStream}));
  std::uniform_real_distribution<double> target(low_db, high_db);
  std::vector<double> targets_db(n);
  std::vector<double> thresholds(n);
  for (std::size_t u = 0; u < n; ++u) {
    targets_db[u] = low_db == high_db ? low_db : target(gen);
    thresholds[u] = db_to_linear(targets_db[u]);
  }
  const Scenario scenario = drop.with_thresholds(std::move(thresholds));

  Snapshot snap;
  snap.budget = power_budget(scenario);
  const AdmissionResult adm = admit(scenario, snap.budget);
  snap.admitted = adm.admitted_count;
  std::vector<double> achieved(n, 0.0);
  if (adm.admitted_count > 0) {
    const MaxMinSolution sol =
        solve_waterfill(scenario.prefix(adm.admitted_count), snap.budget, epsilon);
    std::copy(sol.achieved_sinr.begin(), sol.achieved_sinr.end(), achieved.begin());
    snap.theta_star_db = linear_to_db(sol.theta_star);
  }
  for (std::size_t u = 0; u < n; ++u) {
    SnapshotRow row;
    row.user_index = u + 1;
    row.gain = scenario.su_gains()[u];
    row.target_db = targets_db[u];
    row.admitted = u < adm.admitted_count;
    row.achieved_db = row.admitted ? linear_to_db(achieved[u])
                                   : -std::numeric_limits<double>::infinity();
    snap.rows.push_back(row);
  }
  return snap;
}

}  // namespace nomacr
