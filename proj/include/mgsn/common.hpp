#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mgsn {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

inline constexpr std::string_view kVersion = "0.4.0";

// Error taxonomy. Every module throws one of these; the CLI maps them to exit
// codes (ConfigError/ValidationError from user input -> 1, the rest -> 2).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A value violates a documented precondition or type invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Caller misused an API (backward on a non-scalar, Adam without grads, ...).
class ContractError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class FormatError : public Error {
 public:
  using Error::Error;
};

// Numerical failure during training (non-finite loss and the like).
class RuntimeFailure : public Error {
 public:
  using Error::Error;
};

using WarningSink = std::function<void(std::string_view)>;

// Non-fatal diagnostics (asymmetric edge listings, dense fallbacks). The
// default sink prints each distinct message to stderr once per process.
void warn(std::string_view message);
WarningSink set_warning_sink(WarningSink sink);

}  // namespace mgsn
