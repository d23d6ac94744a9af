#ifndef NOMACR_ADMISSION_HPP
#define NOMACR_ADMISSION_HPP

#include <cstddef>

#include "nomacr/scenario.hpp"

namespace nomacr {

/// Outcome of phase 1. The admitted users are always the strongest
/// `admitted_count` users of the scenario.
struct AdmissionResult {
  std::size_t admitted_count = 0;
  /// Powers of the admitted prefix, each user exactly at its threshold.
  PowerVector powers;
  double remaining_power = 0.0;
  double budget = 0.0;
  /// Users inspected by the single pass: admitted_count, plus one if a user
  /// was rejected.
  std::size_t users_examined = 0;

  /// Length-N vector in sorted order; rejected users get zero power.
  PowerVector full_powers(std::size_t num_sus) const;
};

/// Sequential greedy admission. Walks the users strongest first and gives
/// each the least power meeting its threshold given the powers already
/// assigned:
///   P_n = Gamma_n * (sum_{j<n} P_j + N_n / G_n).
/// Stops at the first user whose requirement exceeds the remaining budget;
/// that user and every weaker one get nothing. A requirement exactly equal to
/// the remaining budget is admitted.
///
/// Throws DomainError unless budget > 0.
AdmissionResult admit(const Scenario& scenario, double budget);

/// Total power the strongest k users need at equality, via
///   A_k = A_{k-1} (1 + Gamma_k) + Gamma_k N_k / G_k,  A_0 = 0.
/// Throws DomainError unless 1 <= k <= num_sus().
double required_prefix_power(const Scenario& scenario, std::size_t k);

}  // namespace nomacr

#endif  // NOMACR_ADMISSION_HPP
