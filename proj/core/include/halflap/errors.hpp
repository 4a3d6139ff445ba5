#ifndef HALFLAP_ERRORS_HPP
#define HALFLAP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace halflap {

/// Invalid configuration or argument domain (CLI exit code 2).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// A numerical guard tripped: degenerate denominator, excluded
/// neighbourhood, non-finite input (CLI exit code 3).
class NumericalGuard : public std::runtime_error {
public:
    explicit NumericalGuard(const std::string& what) : std::runtime_error(what) {}
};

} // namespace halflap

#endif
