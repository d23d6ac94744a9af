#ifndef NOMACR_SCENARIO_HPP
#define NOMACR_SCENARIO_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace nomacr {

/// Per-user transmit powers in watts, indexed in a Scenario's sorted order.
using PowerVector = std::vector<double>;

/// Problem instance as supplied by a caller: secondary-user lists in any
/// order. All quantities are linear (watts, linear gains, linear SINR).
struct RawScenario {
  std::vector<double> su_gains;
  std::vector<double> su_noise;
  std::vector<double> su_thresholds;
  std::vector<double> pu_gains;
  std::vector<double> pu_interference_limits;
  double p_max = 0.0;

  friend bool operator==(const RawScenario&, const RawScenario&) = default;
};

/// Validated problem instance with secondary users sorted by non-increasing
/// channel gain. Index 0 is the strongest user; a user's SINR is degraded
/// only by users with a smaller index.
///
/// Only sort_users() creates non-empty scenarios, so every instance satisfies
/// the ordering and positivity invariants.
class Scenario {
 public:
  Scenario() = default;

  std::size_t num_sus() const { return gains_.size(); }
  std::size_t num_pus() const { return pu_gains_.size(); }

  std::span<const double> su_gains() const { return gains_; }
  std::span<const double> su_noise() const { return noise_; }
  std::span<const double> su_thresholds() const { return thresholds_; }
  std::span<const double> pu_gains() const { return pu_gains_; }
  std::span<const double> pu_interference_limits() const { return pu_limits_; }
  double p_max() const { return p_max_; }

  /// original_index()[n] is the position user n had in the RawScenario.
  std::span<const std::size_t> original_index() const { return original_; }

  /// N_n / G_n: the power user n needs per unit of SINR with no interference.
  double noise_to_gain(std::size_t n) const { return noise_[n] / gains_[n]; }

  /// The strongest `count` users (the admitted prefix), primary users kept.
  Scenario prefix(std::size_t count) const;

  /// Copy with thresholds replaced; `thresholds` is in sorted user order.
  Scenario with_thresholds(std::vector<double> thresholds) const;
  Scenario with_common_threshold(double threshold) const;

  /// Undo the sort: lists back in their original order.
  RawScenario unsorted() const;

  friend Scenario sort_users(RawScenario raw);
  friend bool operator==(const Scenario&, const Scenario&) = default;

 private:
  std::vector<double> gains_;
  std::vector<double> noise_;
  std::vector<double> thresholds_;
  std::vector<double> pu_gains_;
  std::vector<double> pu_limits_;
  std::vector<std::size_t> original_;
  double p_max_ = 0.0;
};

/// Validates `raw` and stably sorts the secondary users by non-increasing gain.
/// Throws StructuralError on mismatched list lengths and DomainError on any
/// non-positive or non-finite quantity.
Scenario sort_users(RawScenario raw);

/// SINR of every user under SIC decoding:
///   gamma_n = P_n G_n / (G_n * sum_{j<n} P_j + N_n).
/// Throws StructuralError when powers.size() != scenario.num_sus().
std::vector<double> compute_sinr(const Scenario& scenario,
                                 std::span<const double> powers);

/// Total secondary power allowed by the primary users' interference limits,
/// capped at p_max: min(p_max, min_m I_m / g_m).
double power_budget(const Scenario& scenario);

/// Scatter sorted-order values back to the caller's original user order.
/// `sorted_values` may be shorter than num_sus(); missing users get zero.
std::vector<double> to_original_order(const Scenario& scenario,
                                      std::span<const double> sorted_values);

}  // namespace nomacr

#endif  // NOMACR_SCENARIO_HPP
