#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>

#include "relaysel/config.hpp"

namespace relaysel {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvariantFailure = 1;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitIoError = 3;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using ProgressFn = std::function<void(std::uint64_t, std::uint64_t)>;

// Executes the configured mode. Result rows go to config.output_path (or to
// `console` when the path is empty); in validate mode a pass/fail summary is
// always written to `console`. Returns kExitOk or, for failed validate
// checks, kExitInvariantFailure. I/O failures throw IoError.
int run(const RunConfig& config, unsigned n_threads, std::ostream& console,
        const ProgressFn& progress = {});

}  // namespace relaysel
