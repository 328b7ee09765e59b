#pragma once

#include <stdexcept>
#include <string>

namespace infoscale {

/// A caller-supplied value violates an operation's precondition.
/// The CLI maps this to exit code 2.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A well-formed computation could not produce a result (fully masked
/// softmax row, quadrature that never settles). The CLI maps this to exit 3.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw ConfigError(what);
}

}  // namespace detail
}  // namespace infoscale
