#include "nomacr/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "nomacr/errors.hpp"

namespace nomacr {
namespace {

void require_positive(std::span<const double> values, const char* what) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(values[i] > 0.0) || !std::isfinite(values[i])) {
      throw DomainError(std::string(what) + "[" + std::to_string(i) +
                        "] must be positive and finite, got " +
                        std::to_string(values[i]));
    }
  }
}

template <typename T>
std::vector<T> permute(const std::vector<T>& values,
                       std::span<const std::size_t> order) {
  std::vector<T> out;
  out.reserve(order.size());
  for (std::size_t idx : order) out.push_back(values[idx]);
  return out;
}

}  // namespace

Scenario sort_users(RawScenario raw) {
  const std::size_t n = raw.su_gains.size();
  if (raw.su_noise.size() != n || raw.su_thresholds.size() != n) {
    throw StructuralError(
        "secondary-user lists differ in length: gains=" + std::to_string(n) +
        " noise=" + std::to_string(raw.su_noise.size()) +
        " thresholds=" + std::to_string(raw.su_thresholds.size()));
  }
  if (raw.pu_gains.size() != raw.pu_interference_limits.size()) {
    throw StructuralError(
        "primary-user lists differ in length: gains=" +
        std::to_string(raw.pu_gains.size()) +
        " limits=" + std::to_string(raw.pu_interference_limits.size()));
  }
  require_positive(raw.su_gains, "su_gains");
  require_positive(raw.su_noise, "su_noise");
  require_positive(raw.su_thresholds, "su_thresholds");
  require_positive(raw.pu_gains, "pu_gains");
  require_positive(raw.pu_interference_limits, "pu_interference_limits");
  require_positive(std::span<const double>(&raw.p_max, 1), "p_max");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return raw.su_gains[a] > raw.su_gains[b];
  });

  Scenario s;
  s.gains_ = permute(raw.su_gains, order);
  s.noise_ = permute(raw.su_noise, order);
  s.thresholds_ = permute(raw.su_thresholds, order);
  s.pu_gains_ = std::move(raw.pu_gains);
  s.pu_limits_ = std::move(raw.pu_interference_limits);
  s.original_ = std::move(order);
  s.p_max_ = raw.p_max;
  return s;
}

Scenario Scenario::prefix(std::size_t count) const {
  if (count > num_sus()) {
    throw DomainError("prefix of " + std::to_string(count) + " users requested from " +
                      std::to_string(num_sus()));
  }
  Scenario s = *this;
  s.gains_.resize(count);
  s.noise_.resize(count);
  s.thresholds_.resize(count);
  s.original_.resize(count);
  return s;
}

Scenario Scenario::with_thresholds(std::vector<double> thresholds) const {
  if (thresholds.size() != num_sus()) {
    throw StructuralError("with_thresholds: expected " + std::to_string(num_sus()) +
                          " thresholds, got " + std::to_string(thresholds.size()));
  }
  require_positive(thresholds, "su_thresholds");
  Scenario s = *this;
  s.thresholds_ = std::move(thresholds);
  return s;
}

Scenario Scenario::with_common_threshold(double threshold) const {
  return with_thresholds(std::vector<double>(num_sus(), threshold));
}

RawScenario Scenario::unsorted() const {
  RawScenario raw;
  raw.su_gains = to_original_order(*this, gains_);
  raw.su_noise = to_original_order(*this, noise_);
  raw.su_thresholds = to_original_order(*this, thresholds_);
  raw.pu_gains = pu_gains_;
  raw.pu_interference_limits = pu_limits_;
  raw.p_max = p_max_;
  return raw;
}

std::vector<double> to_original_order(const Scenario& scenario,
                                      std::span<const double> sorted_values) {
  if (sorted_values.size() > scenario.num_sus()) {
    throw StructuralError("to_original_order: more values than users");
  }
  // A prefix scenario knows only the original indices of its own users, so
  // the output is sized by the largest index seen.
  const auto idx = scenario.original_index();
  std::size_t size = scenario.num_sus();
  for (std::size_t i : idx) size = std::max(size, i + 1);
  std::vector<double> out(size, 0.0);
  for (std::size_t n = 0; n < sorted_values.size(); ++n) out[idx[n]] = sorted_values[n];
  return out;
}

std::vector<double> compute_sinr(const Scenario& scenario,
                                 std::span<const double> powers) {
  if (powers.size() != scenario.num_sus()) {
    throw StructuralError("compute_sinr: " + std::to_string(powers.size()) +
                          " powers for " + std::to_string(scenario.num_sus()) +
                          " users");
  }
  const auto gains = scenario.su_gains();
  const auto noise = scenario.su_noise();
  std::vector<double> sinr(powers.size());
  double stronger = 0.0;  // sum of powers of users decoded before n
  for (std::size_t n = 0; n < powers.size(); ++n) {
    sinr[n] = powers[n] * gains[n] / (stronger * gains[n] + noise[n]);
    stronger += powers[n];
  }
  return sinr;
}

double power_budget(const Scenario& scenario) {
  double budget = scenario.p_max();
  const auto gains = scenario.pu_gains();
  const auto limits = scenario.pu_interference_limits();
  for (std::size_t m = 0; m < gains.size(); ++m) {
    budget = std::min(budget, limits[m] / gains[m]);
  }
  return budget;
}

}  // namespace nomacr
