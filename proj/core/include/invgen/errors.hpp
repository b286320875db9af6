#pragma once

#include <stdexcept>
#include <string>

namespace invgen {

/// Raised when a run is asked for something the configuration cannot
/// deliver (window too small, sweep range too narrow, ...). The CLI maps
/// this to exit status 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace invgen
