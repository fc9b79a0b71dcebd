#pragma once

#include <stdexcept>
#include <string>

namespace hfe {

// Exit-code taxonomy used by the CLI: config errors -> 2, numerical failures -> 3.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

struct DegenerateInputError : std::runtime_error {
    explicit DegenerateInputError(const std::string& msg) : std::runtime_error(msg) {}
};

struct IterationLimitError : std::runtime_error {
    explicit IterationLimitError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace hfe
