#ifndef NOMACR_CLI_APP_HPP
#define NOMACR_CLI_APP_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "config.hpp"

namespace nomacr::cli {

/// Executes a parsed configuration. Results go to cfg.output_path, or `out`
/// when it is empty. Library and I/O errors propagate.
void execute(const RunConfig& cfg, std::ostream& out);

/// Full front end: parse, execute, map every error to its exit code and a
/// one-line message on `err`.
int run_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nomacr::cli

#endif  // NOMACR_CLI_APP_HPP
