#pragma once

// Subcommands of the exocalc tool. Each returns the files it would write, so tests
// can compare bytes without touching the filesystem.

#include "cli/config.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace exocalc::cli {

struct Artifact
{
    std::string filename;
    std::string content;
};

using Artifacts = std::vector<Artifact>;

/// Names accepted by run_subcommand, hidden ones included.
const std::vector<std::string>& subcommand_names();

/// Default parameter document of a subcommand; throws ConfigError for unknown names.
json default_config(const std::string& name);

/// Runs one subcommand. Errors surface as ConfigError, DegenerateError or InstabilityError;
/// human-readable warnings are appended to `warnings`.
Artifacts run_subcommand(const std::string& name, const Config& config, bool svg, std::vector<std::string>& warnings);

Artifacts cmd_metric(const Config& config);
Artifacts cmd_lightcone(const Config& config);
Artifacts cmd_spectrum(const Config& config, bool svg);
Artifacts cmd_simulate(const Config& config, bool svg, std::vector<std::string>& warnings);
Artifacts cmd_forms_check(const Config& config);
Artifacts cmd_cartan(const Config& config);

/// Spectrum table from the implementation; `allow_empty` lets a zero-point sweep through.
std::string spectrum_csv(const Config& config, bool allow_empty);
std::string forms_check_csv(const Config& config);

inline const std::vector<std::string> kSpectrumHeader{"theta_dot", "grad_norm", "m",         "reE_plus",  "imE_plus",
                                                       "reE_minus", "imE_minus", "reE_paper", "imE_paper", "delta_diag"};
inline const std::vector<std::string> kFormsCheckHeader{"identity", "seed", "dimension", "degree", "residual_grade", "pass"};

/// Golden files from the independent oracles. Compares them with the implementation and
/// throws FixtureMismatch (with a per-row diff) instead of writing when they disagree.
Artifacts generate_fixtures(const Config& config);

class FixtureMismatch : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// Per-row differences between two CSV texts; empty when equal.
std::string csv_diff(const std::string& name, const std::string& expected, const std::string& actual);

} // namespace exocalc::cli
