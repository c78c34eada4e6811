#pragma once

#include <stdexcept>
#include <string>

namespace exocalc {

/// Malformed or inconsistent run configuration.
class ConfigError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// Parameters on which an operation is undefined (e.g. a degenerate constraint).
class DegenerateError : public std::domain_error
{
  public:
    using std::domain_error::domain_error;
};

/// Numerical blow-up or a violated stability bound.
class InstabilityError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

} // namespace exocalc
