#pragma once

#include <cstdint>
#include <random>

namespace relaysel {

// Deterministic per-trial random stream. The sequence produced for a given
// (master_seed, trial_index) pair is a pure function of those two values,
// independent of thread count and execution order: each trial seeds its own
// engine from a splitmix64-style mix of seed and index.
class TrialRng {
public:
    using result_type = std::uint64_t;

    TrialRng(std::uint64_t master_seed, std::uint64_t trial_index);

    static constexpr result_type min() { return std::mt19937_64::min(); }
    static constexpr result_type max() { return std::mt19937_64::max(); }
    result_type operator()() { return engine_(); }

    // Uniform draw in [0, 1).
    double next_unit();

private:
    std::mt19937_64 engine_;
};

inline TrialRng derive_trial_stream(std::uint64_t master_seed, std::uint64_t trial_index) {
    return TrialRng(master_seed, trial_index);
}

// Samples Nakagami-m channel power gains: Gamma distributed with shape m and
// mean gamma_bar (scale gamma_bar / m). Shapes down to 0.5 are supported.
class GammaSampler {
public:
    // Throws std::invalid_argument if shape < 0.5 or mean <= 0.
    GammaSampler(double shape, double mean);

    double shape() const { return shape_; }
    double mean() const { return mean_; }

    // One strictly positive draw.
    double sample(TrialRng& rng) const;

private:
    double shape_;
    double mean_;
};

inline double sample_power(const GammaSampler& sampler, TrialRng& rng) {
    return sampler.sample(rng);
}

}  // namespace relaysel
