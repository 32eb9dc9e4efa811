#pragma once
#include <stdexcept>
#include <string>

namespace rkdg {

// Exit codes used by the command line driver.
enum ExitCode {
    exit_ok = 0,
    exit_config_error = 2,
    exit_blowup = 3,
    exit_oracle_invalid = 4,
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct BlowupError : std::runtime_error {
    explicit BlowupError(const std::string& msg) : std::runtime_error(msg) {}
};

struct OracleError : std::runtime_error {
    explicit OracleError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace rkdg
