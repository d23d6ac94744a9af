#ifndef NOMACR_CLI_SCENARIO_FILE_HPP
#define NOMACR_CLI_SCENARIO_FILE_HPP

#include <iosfwd>
#include <string>

#include "nomacr/scenario.hpp"

namespace nomacr::cli {

// Scenario text format, one directive per line, '#' starts a comment:
//
//   pmax_dbm <dBm>                         maximum secondary transmit power
//   noise_dbm <dBm>                        noise for su lines without their own
//   su <gain_dB> <threshold_dB> [noise_dBm]
//   pu <gain_dB> <limit_dBm>
//
// Linear forms exist for values whose dB text would not reproduce the
// stored double exactly: pmax_w, noise_w, su_linear <gain> <threshold>
// [noise_W], pu_linear <gain> <limit_W>. The writer falls back to them
// per line, so write/read round-trips bit-for-bit.

/// Throws ParseError naming the line on malformed input; validation errors
/// from sort_users propagate unchanged.
Scenario read_scenario(std::istream& in);
Scenario read_scenario_file(const std::string& path);

void write_scenario(std::ostream& out, const Scenario& scenario);

}  // namespace nomacr::cli

#endif  // NOMACR_CLI_SCENARIO_FILE_HPP
