#pragma once

#include <stdexcept>
#include <string>

namespace chipletsim {

enum class ErrorCode {
  malformed_row,
  invalid_value,
  empty_network,
  unknown_key,
  missing_required_key,
  inconsistent_mode,
  chiplet_budget_exceeded,
  missing_component,
  node_out_of_range,
  deadlock_detected,
  area_too_large,
};

const char* error_code_name(ErrorCode code);

// Single exception type for all structured failures. The code is stable API
// (the CLI maps it to an exit code, the python layer to an exception class).
class SimError : public std::runtime_error {
 public:
  SimError(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace chipletsim
