#include "nomacr/admission.hpp"

#include <algorithm>
#include <string>

#include "nomacr/errors.hpp"

namespace nomacr {

PowerVector AdmissionResult::full_powers(std::size_t num_sus) const {
  PowerVector out(num_sus, 0.0);
  for (std::size_t n = 0; n < powers.size() && n < num_sus; ++n) out[n] = powers[n];
  return out;
}

AdmissionResult admit(const Scenario& scenario, double budget) {
  if (!(budget > 0.0)) {
    throw DomainError("admit: budget must be positive, got " + std::to_string(budget));
  }
  AdmissionResult result;
  result.budget = budget;

  const auto thresholds = scenario.su_thresholds();
  double spent = 0.0;
  for (std::size_t n = 0; n < scenario.num_sus(); ++n) {
    ++result.users_examined;
    const double required = thresholds[n] * (spent + scenario.noise_to_gain(n));
    if (spent + required > budget) break;
    result.powers.push_back(required);
    spent += required;
  }
  result.admitted_count = result.powers.size();
  result.remaining_power = std::max(0.0, budget - spent);
  return result;
}

double required_prefix_power(const Scenario& scenario, std::size_t k) {
  if (k < 1 || k > scenario.num_sus()) {
    throw DomainError("required_prefix_power: k=" + std::to_string(k) +
                      " outside [1, " + std::to_string(scenario.num_sus()) + "]");
  }
  const auto thresholds = scenario.su_thresholds();
  double total = 0.0;
  for (std::size_t n = 0; n < k; ++n) {
    total = total * (1.0 + thresholds[n]) + thresholds[n] * scenario.noise_to_gain(n);
  }
  return total;
}

}  // namespace nomacr
