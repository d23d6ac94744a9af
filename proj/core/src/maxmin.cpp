#include "nomacr/maxmin.hpp"

#include <algorithm>
#include <string>

#include "nomacr/errors.hpp"

namespace nomacr {
namespace {

// Relative slack when checking the thresholds against the budget, for budgets
// summed in a different order (e.g. required_prefix_power).
constexpr double kBudgetSlack = 1e-12;

void check_inputs(const Scenario& scenario, double budget, double epsilon,
                  const char* who) {
  if (scenario.num_sus() == 0) {
    throw DomainError(std::string(who) + ": no admitted users");
  }
  if (!(budget > 0.0)) {
    throw DomainError(std::string(who) + ": budget must be positive");
  }
  if (!(epsilon > 0.0)) {
    throw DomainError(std::string(who) + ": epsilon must be positive");
  }
}

double min_threshold(const Scenario& scenario) {
  const auto thresholds = scenario.su_thresholds();
  return *std::min_element(thresholds.begin(), thresholds.end());
}

void check_thresholds_fit(const Scenario& scenario, double budget, const char* who) {
  const double required = total_power_curve(scenario, min_threshold(scenario));
  if (required > budget * (1.0 + kBudgetSlack)) {
    throw InfeasibleError(std::string(who) + ": thresholds need " +
                          std::to_string(required) + " W but the budget is " +
                          std::to_string(budget) + " W");
  }
}

std::vector<double> level_targets(const Scenario& scenario, double theta) {
  const auto thresholds = scenario.su_thresholds();
  std::vector<double> targets(thresholds.size());
  for (std::size_t n = 0; n < targets.size(); ++n) {
    targets[n] = std::max(theta, thresholds[n]);
  }
  return targets;
}

// Turns a bracket lower <= theta* <= upper into a solution that spends the
// whole budget. A threshold inside the bracket is a kink of S, so the
// bracket is first cut down to one smooth piece. There S is convex, so the
// chord root never overshoots the budget and a few chord steps leave an
// error of order width^2. What little is left goes to the weakest user,
// whose power interferes with nobody.
MaxMinSolution finalize(const Scenario& scenario, double budget, double lower,
                        double upper, Solver solver, std::size_t iterations) {
  MaxMinSolution sol;
  sol.solver = solver;
  sol.iterations = iterations;

  if (scenario.num_sus() == 1) {
    sol.theta_star = budget / scenario.noise_to_gain(0);
    sol.powers = {budget};
  } else {
    for (double t : scenario.su_thresholds()) {
      if (t <= lower || t >= upper) continue;
      if (total_power_curve(scenario, t) <= budget) {
        lower = t;
      } else {
        upper = t;
      }
    }
    double s_lower = total_power_curve(scenario, lower);
    double s_upper = total_power_curve(scenario, upper);
    if (s_upper <= budget) {
      lower = upper;
    } else {
      // Regula falsi. Rounding can put a chord root a hair past the budget;
      // that point becomes the new upper end, and once the chord stalls on
      // an end point the bracket is halved instead.
      for (int step = 0; step < 64 && budget > s_lower; ++step) {
        double next = lower + (budget - s_lower) / (s_upper - s_lower) * (upper - lower);
        if (!(next > lower && next < upper)) next = lower + 0.5 * (upper - lower);
        if (next == lower || next == upper) break;
        const double s_next = total_power_curve(scenario, next);
        if (s_next <= budget) {
          lower = next;
          s_lower = s_next;
        } else {
          upper = next;
          s_upper = s_next;
        }
      }
    }
    const double theta = lower;
    TargetPowers tp = min_power_for_targets(scenario, level_targets(scenario, theta));
    tp.powers.back() = std::max(0.0, tp.powers.back() + (budget - tp.total));
    sol.theta_star = theta;
    sol.powers = std::move(tp.powers);
  }
  sol.achieved_sinr = compute_sinr(scenario, sol.powers);
  return sol;
}

}  // namespace

std::string_view to_string(Solver solver) {
  switch (solver) {
    case Solver::bisection:
      return "bisection";
    case Solver::waterfill:
      return "waterfill";
  }
  return "unknown";
}

TargetPowers min_power_for_targets(const Scenario& scenario,
                                   std::span<const double> targets) {
  if (targets.size() != scenario.num_sus()) {
    throw StructuralError("min_power_for_targets: " + std::to_string(targets.size()) +
                          " targets for " + std::to_string(scenario.num_sus()) +
                          " users");
  }
  TargetPowers out;
  out.powers.resize(targets.size());
  for (std::size_t n = 0; n < targets.size(); ++n) {
    out.powers[n] = targets[n] * (out.total + scenario.noise_to_gain(n));
    out.total += out.powers[n];
  }
  return out;
}

double total_power_curve(const Scenario& scenario, double theta) {
  const auto thresholds = scenario.su_thresholds();
  double total = 0.0;
  for (std::size_t n = 0; n < thresholds.size(); ++n) {
    total += std::max(theta, thresholds[n]) * (total + scenario.noise_to_gain(n));
  }
  return total;
}

bool feasible(const Scenario& scenario, double t, double budget) {
  return total_power_curve(scenario, t) <= budget;
}

Bracket initial_bracket(const Scenario& scenario, double budget) {
  if (scenario.num_sus() == 0) throw DomainError("initial_bracket: no admitted users");
  Bracket b;
  b.lower = min_threshold(scenario);
  for (std::size_t n = 0; n < scenario.num_sus(); ++n) {
    b.upper = std::max(b.upper, budget / scenario.noise_to_gain(n));
  }
  b.upper = std::max(b.upper, b.lower);
  return b;
}

MaxMinSolution solve_bisection(const Scenario& scenario, double budget, double epsilon) {
  check_inputs(scenario, budget, epsilon, "solve_bisection");
  check_thresholds_fit(scenario, budget, "solve_bisection");

  const Bracket b = initial_bracket(scenario, budget);
  double lower = b.lower;
  // Halving is exact in floating point, so the step count is exactly
  // ceil(log2((u - l) / epsilon)).
  double width = b.upper - b.lower;
  std::size_t iterations = 0;
  while (width > epsilon) {
    width *= 0.5;
    const double mid = lower + width;
    if (feasible(scenario, mid, budget)) lower = mid;
    ++iterations;
  }
  return finalize(scenario, budget, lower, std::min(lower + width, b.upper),
                  Solver::bisection, iterations);
}

MaxMinSolution solve_waterfill(const Scenario& scenario, double budget, double epsilon) {
  check_inputs(scenario, budget, epsilon, "solve_waterfill");
  check_thresholds_fit(scenario, budget, "solve_waterfill");

  std::vector<double> levels(scenario.su_thresholds().begin(),
                             scenario.su_thresholds().end());
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  // Raise the lowest SINRs level by level until a breakpoint costs more than
  // the budget.
  double lower = levels.front();
  double upper = initial_bracket(scenario, budget).upper;
  std::size_t iterations = 1;
  for (std::size_t k = 1; k < levels.size(); ++k) {
    ++iterations;
    if (total_power_curve(scenario, levels[k]) >= budget) {
      upper = levels[k];
      break;
    }
    lower = levels[k];
  }
  upper = std::max(upper, lower);

  // For very large theta the spacing of doubles can exceed epsilon; stop
  // once the midpoint no longer splits the bracket.
  while (upper - lower > epsilon) {
    const double mid = lower + 0.5 * (upper - lower);
    if (mid <= lower || mid >= upper) break;
    if (total_power_curve(scenario, mid) <= budget) {
      lower = mid;
    } else {
      upper = mid;
    }
    ++iterations;
  }
  return finalize(scenario, budget, lower, upper, Solver::waterfill, iterations);
}

MaxMinSolution solve(Solver solver, const Scenario& scenario, double budget,
                     double epsilon) {
  return solver == Solver::bisection ? solve_bisection(scenario, budget, epsilon)
                                     : solve_waterfill(scenario, budget, epsilon);
}

}  // namespace nomacr
