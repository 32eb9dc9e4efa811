#pragma once

#include <string>

#include "rkdg/stepper.hpp"

namespace rkdg {

// key=value lines, '#' starts a comment, blank lines skipped.
// Recognized keys: problem, p, k, h, mu, gamma, tau, mode, tfinal,
// kappa, ceiling, snapshots (comma-separated times).
// Unknown keys are a ConfigError so typos cannot silently fall back
// to defaults.
struct FileConfig {
    std::string problem;
    RunConfig cfg;
    bool has_problem = false;
    bool has_p = false, has_k = false, has_h = false, has_mu = false;
    bool has_gamma = false, has_tau = false, has_mode = false;
    bool has_tfinal = false, has_kappa = false, has_ceiling = false;
    bool has_snapshots = false;
};

FileConfig parse_config_text(const std::string& text);
FileConfig load_config_file(const std::string& path);

// Overlay the file values (only those present) onto the problem defaults.
void apply_file_config(const FileConfig& fc, RunConfig& cfg);

}  // namespace rkdg
