#ifndef TTRAP_ERRORS_HPP
#define TTRAP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ttrap {

// Bad user-facing configuration (CLI/config file). Exit code 2 at the CLI.
class config_error : public std::runtime_error {
public:
  explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

// Runtime numerical failure (NaN/Inf mid-propagation, eigensolver failure, ...).
// Exit code 3 at the CLI.
class numerical_error : public std::runtime_error {
public:
  explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ttrap

#endif
