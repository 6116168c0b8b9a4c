#pragma once

#include <stdexcept>
#include <string>

namespace versenet {

// Single exception type for the whole toolkit. `kind` separates caller
// mistakes (bad flags, bad config, bad arguments) from data/runtime
// failures (malformed files, degenerate graphs); the CLI maps them to
// exit codes 1 and 2 respectively.
class Error : public std::runtime_error {
public:
    enum class Kind { validation, data };

    Error(Kind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

[[noreturn]] inline void throw_validation(const std::string& message) {
    throw Error(Error::Kind::validation, message);
}

[[noreturn]] inline void throw_data(const std::string& message) {
    throw Error(Error::Kind::data, message);
}

}  // namespace versenet
