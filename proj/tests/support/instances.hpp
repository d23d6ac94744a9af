#ifndef NOMACR_TESTS_INSTANCES_HPP
#define NOMACR_TESTS_INSTANCES_HPP

// Random problem instances shared by the property tests and the acceptance
// suite.

#include <cmath>
#include <cstddef>
#include <random>
#include <vector>

#include "nomacr/admission.hpp"
#include "nomacr/scenario.hpp"
#include "nomacr/units.hpp"

namespace nomacr::testing {

struct Instance {
  Scenario scenario;
  double budget = 0.0;
};

class InstanceGenerator {
 public:
  explicit InstanceGenerator(std::uint64_t seed) : gen_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen_);
  }
  double log_uniform(double lo_exp, double hi_exp) {
    return std::pow(10.0, uniform(lo_exp, hi_exp));
  }
  std::size_t count(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(gen_);
  }

  RawScenario raw(std::size_t users, double thr_lo_db, double thr_hi_db,
                  bool equal_thresholds = false, bool equal_noise = false) {
    RawScenario r;
    const double common_thr = db_to_linear(uniform(thr_lo_db, thr_hi_db));
    const double common_noise = log_uniform(-2.0, 1.0);
    for (std::size_t n = 0; n < users; ++n) {
      r.su_gains.push_back(log_uniform(-2.0, 2.0));
      r.su_noise.push_back(equal_noise ? common_noise : log_uniform(-2.0, 1.0));
      r.su_thresholds.push_back(equal_thresholds ? common_thr
                                                 : db_to_linear(uniform(thr_lo_db, thr_hi_db)));
    }
    r.p_max = 1.0;
    return r;
  }

  /// All users admitted: budget is the phase-1 requirement times a random
  /// slack factor in [1, 10^max_slack_exp].
  Instance admitted(std::size_t max_users, double thr_lo_db = 0.0, double thr_hi_db = 25.0,
                    double max_slack_exp = 2.0) {
    const std::size_t users = count(1, max_users);
    Scenario s = sort_users(raw(users, thr_lo_db, thr_hi_db));
    const double need = required_prefix_power(s, users);
    return {s, need * log_uniform(0.0, max_slack_exp)};
  }

 private:
  std::mt19937_64 gen_;
};

inline double relative_error(double value, double reference) {
  return std::abs(value - reference) / std::max(std::abs(reference), 1e-300);
}

}  // namespace nomacr::testing

#endif  // NOMACR_TESTS_INSTANCES_HPP
