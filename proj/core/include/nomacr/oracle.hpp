#ifndef NOMACR_ORACLE_HPP
#define NOMACR_ORACLE_HPP

#include <cstddef>
#include <optional>

#include "nomacr/scenario.hpp"

namespace nomacr {

// Exhaustive verifiers for the two phases. Slow by construction and only
// meant for a handful of users; they share no code path with the solvers
// beyond compute_sinr.

inline constexpr std::size_t kMaxOracleUsers = 12;
inline constexpr std::size_t kMaxGridUsers = 3;

/// Largest number of users that fit in `budget` over all 2^N subsets, each
/// subset kept in gain order and powered at equality of its thresholds.
/// Throws CapacityError when N > kMaxOracleUsers.
std::size_t oracle_max_admitted(const Scenario& scenario, double budget);

struct GridSpec {
  std::size_t points_per_axis = 1001;
  double budget = 0.0;
};

struct GridSearchResult {
  /// Best min_n gamma_n over grid points meeting every threshold; empty if
  /// no grid point qualifies.
  std::optional<double> min_sinr;
  PowerVector best_powers;
  /// Bound on the distance to the true optimum: min_sinr <= theta* <=
  /// min_sinr + resolution.
  double resolution = 0.0;
  std::size_t points_evaluated = 0;
};

/// Exhaustive search over the SINRs of the first L-1 users, each on a
/// geometric grid from its threshold up to budget * G_n / N_n. Their powers
/// follow from the SINRs in decoding order; the weakest user takes whatever
/// is left (its power interferes with nobody, so leaving power unused never
/// helps) and every point is scored with compute_sinr. (points_per_axis)^(L-1)
/// points in total.
///
/// Throws CapacityError when L > kMaxGridUsers, DomainError for an empty
/// scenario or points_per_axis < 2.
GridSearchResult oracle_max_min_sinr(const Scenario& scenario, const GridSpec& grid);

}  // namespace nomacr

#endif  // NOMACR_ORACLE_HPP
