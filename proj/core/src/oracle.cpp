#include "nomacr/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nomacr/errors.hpp"

namespace nomacr {

std::size_t oracle_max_admitted(const Scenario& scenario, double budget) {
  const std::size_t n = scenario.num_sus();
  if (n > kMaxOracleUsers) {
    throw CapacityError("oracle_max_admitted: " + std::to_string(n) +
                        " users exceeds the limit of " +
                        std::to_string(kMaxOracleUsers));
  }
  const auto thresholds = scenario.su_thresholds();
  std::size_t best = 0;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size <= best) continue;
    double spent = 0.0;
    bool fits = true;
    for (std::size_t u = 0; u < n && fits; ++u) {
      if (!(mask & (std::uint32_t{1} << u))) continue;
      const double required = thresholds[u] * (spent + scenario.noise_to_gain(u));
      fits = spent + required <= budget;
      spent += required;
    }
    if (fits) best = size;
  }
  return best;
}

namespace {

// Points whose free users sit exactly on their thresholds land there only up
// to rounding.
constexpr double kThresholdSlack = 1e-12;

// Geometric SINR grid for one free user: Gamma_n * ratio^k, k = 0..steps,
// ending at the SINR the user would get from the whole budget alone.
struct Axis {
  double start = 0.0;
  double ratio = 1.0;
  double at(long k) const { return start * std::pow(ratio, static_cast<double>(k)); }
};

class GridEvaluator {
 public:
  GridEvaluator(const Scenario& scenario, double budget, std::vector<Axis> axes)
      : scenario_(scenario), budget_(budget), axes_(std::move(axes)),
        powers_(scenario.num_sus()) {}

  // min_n gamma_n with the free users at the given SINR grid indices and the
  // weakest user on the leftover power; empty when the free users alone
  // overspend or a threshold is missed.
  std::optional<double> at(std::span<const long> idx) {
    double spent = 0.0;
    for (std::size_t n = 0; n < idx.size(); ++n) {
      const double c = scenario_.su_noise()[n] / scenario_.su_gains()[n];
      powers_[n] = axes_[n].at(idx[n]) * (spent + c);
      spent += powers_[n];
    }
    if (spent > budget_) return std::nullopt;
    powers_.back() = budget_ - spent;
    const auto sinr = compute_sinr(scenario_, powers_);
    const auto thresholds = scenario_.su_thresholds();
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t n = 0; n < sinr.size(); ++n) {
      if (sinr[n] < thresholds[n] * (1.0 - kThresholdSlack)) return std::nullopt;
      worst = std::min(worst, sinr[n]);
    }
    return worst;
  }

  const PowerVector& last_powers() const { return powers_; }

 private:
  const Scenario& scenario_;
  double budget_;
  std::vector<Axis> axes_;
  PowerVector powers_;
};

}  // namespace

GridSearchResult oracle_max_min_sinr(const Scenario& scenario, const GridSpec& grid) {
  const std::size_t users = scenario.num_sus();
  if (users == 0) throw DomainError("oracle_max_min_sinr: no users");
  if (users > kMaxGridUsers) {
    throw CapacityError("oracle_max_min_sinr: " + std::to_string(users) +
                        " users exceeds the limit of " + std::to_string(kMaxGridUsers));
  }
  if (grid.points_per_axis < 2) {
    throw DomainError("oracle_max_min_sinr: points_per_axis must be at least 2");
  }
  if (!(grid.budget > 0.0)) throw DomainError("oracle_max_min_sinr: budget must be positive");

  GridSearchResult result;
  const long steps = static_cast<long>(grid.points_per_axis) - 1;
  const auto thresholds = scenario.su_thresholds();
  std::vector<Axis> axes(users - 1);
  double worst_ratio = 1.0;
  for (std::size_t n = 0; n + 1 < users; ++n) {
    const double ceiling = grid.budget * scenario.su_gains()[n] / scenario.su_noise()[n];
    if (ceiling < thresholds[n]) return result;
    axes[n].start = thresholds[n];
    axes[n].ratio = std::pow(ceiling / thresholds[n], 1.0 / static_cast<double>(steps));
    worst_ratio = std::max(worst_ratio, axes[n].ratio);
  }

  GridEvaluator eval(scenario, grid.budget, axes);
  std::vector<long> idx(users - 1, 0);
  auto visit = [&] {
    ++result.points_evaluated;
    const std::optional<double> v = eval.at(idx);
    if (v && (!result.min_sinr || *v > *result.min_sinr)) {
      result.min_sinr = v;
      result.best_powers = eval.last_powers();
    }
  };

  if (users == 1) {
    visit();
  } else if (users == 2) {
    for (idx[0] = 0; idx[0] <= steps; ++idx[0]) visit();
  } else {
    for (idx[0] = 0; idx[0] <= steps; ++idx[0]) {
      for (idx[1] = 0; idx[1] <= steps; ++idx[1]) visit();
    }
  }

  // Rounding every free user's optimal SINR down to the grid costs them at
  // most a factor `ratio` and leaves the weakest user at least as well off,
  // so theta* <= best * ratio.
  if (result.min_sinr) result.resolution = *result.min_sinr * (worst_ratio - 1.0);
  return result;
}

}  // namespace nomacr
