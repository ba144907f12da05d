#ifndef POLYNUM_CONFIG_HPP
#define POLYNUM_CONFIG_HPP

#include <stdexcept>
#include <string>

namespace polynum {

// Thrown when a computation would exceed the configured truncation-order cap.
class OrderCapError : public std::runtime_error {
 public:
  explicit OrderCapError(const std::string& what) : std::runtime_error(what) {}
};

// Global truncation-order cap. Defaults to 512; the environment variable
// POLYNUM_MAX_ORDER (positive integer) overrides the default on first use.
int max_order();

// Replaces the cap (cap >= 1). Mostly for tests and the CLI.
void set_max_order(int cap);

// Validates POLYNUM_MAX_ORDER without committing to it; throws
// std::invalid_argument if the variable is set but not a positive integer.
void validate_order_cap_env();

// Throws OrderCapError if order > max_order(). `what` names the operation.
void require_within_cap(int order, const char* what);

}  // namespace polynum

#endif  // POLYNUM_CONFIG_HPP
