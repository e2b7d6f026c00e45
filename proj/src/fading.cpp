#include "relaysel/fading.hpp"

#include <cmath>
#include <stdexcept>

namespace relaysel {

namespace {

// splitmix64 finalizer (Vigna); bijective on 64-bit words.
std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

}  // namespace

TrialRng::TrialRng(std::uint64_t master_seed, std::uint64_t trial_index)
    : engine_(mix64(mix64(master_seed) ^ mix64(trial_index ^ 0xA02BDBF7BB3C0A7ull))) {}

double TrialRng::next_unit() {
    // 53 random bits into [0, 1).
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

GammaSampler::GammaSampler(double shape, double mean) : shape_(shape), mean_(mean) {
    if (!(std::isfinite(shape) && shape >= 0.5))
        throw std::invalid_argument("GammaSampler: shape must be finite and >= 0.5");
    if (!(std::isfinite(mean) && mean > 0.0))
        throw std::invalid_argument("GammaSampler: mean must be finite and > 0");
}

double GammaSampler::sample(TrialRng& rng) const {
    std::gamma_distribution<double> dist(shape_, mean_ / shape_);
    return dist(rng);
}

}  // namespace relaysel
