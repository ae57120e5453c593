#ifndef LIEGRAM_ERRORS_HPP
#define LIEGRAM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace liegram {

// Unsupported Cartan type / rank, bad CLI input of that kind.
struct config_error : std::runtime_error {
  explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Missing or malformed embedded table data.
struct data_error : std::runtime_error {
  explicit data_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Caller broke a documented precondition (domain mismatch, non-antisymmetric
// input, empty odd part, ...).
struct domain_error : std::invalid_argument {
  explicit domain_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// A computation exceeded its step budget.
struct budget_exceeded : std::runtime_error {
  explicit budget_exceeded(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace liegram

#endif
