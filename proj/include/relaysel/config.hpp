#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "relaysel/params.hpp"

namespace relaysel {

enum class RunMode { Simulate, Analytic, Validate };
enum class OutputFormat { Csv, Json };

const char* to_string(RunMode mode);
const char* to_string(OutputFormat format);

// Sweep of one dB-dimensioned parameter: avg_snr_first_db, avg_snr_second_db
// or avg_inr_db.
struct SweepSpec {
    std::string field;
    double start_db = 0.0;
    double stop_db = 0.0;
    double step_db = 1.0;

    std::vector<double> values_db() const;
};

struct RunConfig {
    NetworkParams params;                  // linear scale, validated
    std::vector<double> threshold_grid_db; // grid of outage thresholds, dB
    std::uint64_t n_trials = 100000;
    std::uint64_t master_seed = 1;
    std::optional<SweepSpec> sweep;
    OutputFormat output_format = OutputFormat::Csv;
    std::string output_path;  // empty -> stdout
    RunMode mode = RunMode::Validate;

    std::vector<double> threshold_grid_linear() const;
};

// Parse/validation failure with the 1-based config line it was detected on
// (0 when no single line applies).
struct ConfigError : std::runtime_error {
    int line;
    ConfigError(const std::string& msg, int line_no)
        : std::runtime_error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + msg
                                         : msg),
          line(line_no) {}
};

// Parses the line-oriented `key = value` format ('#' starts a comment,
// lists are comma separated). Unknown keys, malformed values and parameter
// constraint violations raise ConfigError with the offending line number.
RunConfig parse_config(const std::string& text);

// Reads and parses a config file; I/O failures raise std::runtime_error.
RunConfig load_config_file(const std::string& path);

// Applies a sweep value (dB) to the swept field of a parameter set.
NetworkParams apply_sweep_value(const NetworkParams& base, const std::string& field,
                                double value_db);

}  // namespace relaysel
