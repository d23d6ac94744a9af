#include "nomacr/units.hpp"

#include <cmath>
#include <string>

#include "nomacr/errors.hpp"

namespace nomacr {

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double linear) {
  if (!(linear > 0.0)) {
    throw DomainError("linear_to_db: argument must be positive, got " +
                      std::to_string(linear));
  }
  return 10.0 * std::log10(linear);
}

double dbm_to_watts(double dbm) { return db_to_linear(dbm - 30.0); }

double watts_to_dbm(double watts) { return linear_to_db(watts) + 30.0; }

}  // namespace nomacr
