#ifndef NOMACR_CLI_ERRORS_HPP
#define NOMACR_CLI_ERRORS_HPP

#include "nomacr/errors.hpp"

namespace nomacr::cli {

/// Bad command line: unknown flag, missing required option, ...
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Malformed number or line in a flag value, config file or scenario file.
class ParseError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kInternal = 1;
inline constexpr int kUsage = 2;
inline constexpr int kParse = 3;
inline constexpr int kInfeasible = 4;
inline constexpr int kCapacity = 5;
inline constexpr int kIo = 6;
inline constexpr int kInvalidInput = 7;
}  // namespace exit_code

}  // namespace nomacr::cli

#endif  // NOMACR_CLI_ERRORS_HPP
