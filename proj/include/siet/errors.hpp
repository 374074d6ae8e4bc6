#pragma once

#include <stdexcept>
#include <string>

namespace siet {

/// Raised when a run configuration fails validation. Carries the offending
/// field path so CLI users see exactly what to fix.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string field, const std::string& message)
        : std::runtime_error("config error at '" + field + "': " + message),
          field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// Raised when a requested codebook size exceeds the number of distinct
/// arrangements of the symbol multiset. The message names the exact limit.
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& message) : std::runtime_error(message) {}
};

/// Raised when a numerical search cannot satisfy its constraints.
class InfeasibleError : public std::runtime_error {
public:
    explicit InfeasibleError(const std::string& message) : std::runtime_error(message) {}
};

} // namespace siet
