#ifndef NOMACR_MAXMIN_HPP
#define NOMACR_MAXMIN_HPP

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "nomacr/scenario.hpp"

namespace nomacr {

// Phase 2: share the whole budget among the admitted users so that the
// smallest SINR is as large as possible while every user keeps its threshold.
//
// All functions here treat every user of the scenario as admitted; pass
// scenario.prefix(admission.admitted_count).

inline constexpr double kDefaultEpsilon = 1e-6;

enum class Solver { bisection, waterfill };

std::string_view to_string(Solver solver);

struct MaxMinSolution {
  /// Optimal minimum SINR (linear).
  double theta_star = 0.0;
  PowerVector powers;
  std::vector<double> achieved_sinr;
  /// Bisection steps, or breakpoints visited plus in-segment steps.
  std::size_t iterations = 0;
  Solver solver = Solver::bisection;
};

struct TargetPowers {
  double total = 0.0;
  PowerVector powers;
};

/// Least powers giving user n an SINR of at least targets[n]:
///   P_n = targets[n] * (sum_{j<n} P_j + N_n / G_n).
/// Each user's minimum depends only on the stronger users, so this point is
/// component-wise minimal and its total is the least feasible total.
TargetPowers min_power_for_targets(const Scenario& scenario,
                                   std::span<const double> targets);

/// S(theta): total of min_power_for_targets at targets max(theta, Gamma_n).
/// Continuous, convex, and strictly increasing above min Gamma_n.
double total_power_curve(const Scenario& scenario, double theta);

/// Whether every user can reach max(t, Gamma_n) within the budget.
bool feasible(const Scenario& scenario, double t, double budget);

/// Interval known to contain theta*:
/// [min Gamma_n, max_n budget * G_n / N_n].
struct Bracket {
  double lower = 0.0;
  double upper = 0.0;
};
Bracket initial_bracket(const Scenario& scenario, double budget);

/// Bisection on theta over initial_bracket(), one closed-form feasibility
/// check per step, until the bracket is no wider than epsilon.
///
/// Throws DomainError for an empty scenario or epsilon <= 0, and
/// InfeasibleError if the thresholds alone exceed the budget.
MaxMinSolution solve_bisection(const Scenario& scenario, double budget,
                               double epsilon = kDefaultEpsilon);

/// Water-filling: evaluates S at the sorted distinct thresholds to find the
/// segment holding S^{-1}(budget), then bisects inside that segment.
/// Same errors and result contract as solve_bisection.
MaxMinSolution solve_waterfill(const Scenario& scenario, double budget,
                               double epsilon = kDefaultEpsilon);

MaxMinSolution solve(Solver solver, const Scenario& scenario, double budget,
                     double epsilon = kDefaultEpsilon);

}  // namespace nomacr

#endif  // NOMACR_MAXMIN_HPP
