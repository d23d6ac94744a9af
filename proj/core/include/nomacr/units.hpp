#ifndef NOMACR_UNITS_HPP
#define NOMACR_UNITS_HPP

// Conversions between the logarithmic units used at I/O boundaries and the
// linear units used for every computation inside the library.

namespace nomacr {

double db_to_linear(double db);

/// Throws DomainError for non-positive or NaN input.
double linear_to_db(double linear);

/// dBm is referenced to 1 mW.
double dbm_to_watts(double dbm);
double watts_to_dbm(double watts);

}  // namespace nomacr

#endif  // NOMACR_UNITS_HPP
