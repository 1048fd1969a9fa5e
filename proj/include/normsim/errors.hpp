#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace normsim {

/// Invalid configuration, file contents, or argument values. CLI exit code 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// A simulation produced non-finite values. Carries the step index. CLI exit code 3.
class BlowupError : public std::runtime_error {
public:
    BlowupError(const std::string& what, std::size_t step_index)
        : std::runtime_error(what + " (step " + std::to_string(step_index) + ")"),
          step_index(step_index) {}
    std::size_t step_index;
};

} // namespace normsim
