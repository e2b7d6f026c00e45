#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "relaysel/params.hpp"

namespace relaysel {

// Default symbol-error map: the Gaussian tail Q(sqrt(2 * sinr)), i.e. binary
// antipodal signaling under a Gaussian-interference approximation. Monotone
// nonincreasing with ser_map(0) = 1/2 (a failed trial counts as a random
// guess).
double ser_map(double sinr);

// Probability estimate with a 95% Wilson score interval.
struct Estimate {
    double value = 0.0;
    double ci_lo = 0.0;
    double ci_hi = 0.0;
};

Estimate wilson_interval(std::uint64_t successes, std::uint64_t trials);

// Sup-norm distance between the empirical CDF of `sorted_samples` and the
// analytic CDF, using both one-sided step values at every sample point.
// Throws std::invalid_argument on empty input.
double ks_statistic(const std::vector<double>& sorted_samples,
                    const std::function<double(double)>& cdf);

// Aggregate Monte Carlo result for one threshold grid point.
struct TrialReport {
    std::uint64_t n_trials = 0;
    double threshold = 0.0;  // linear SINR threshold for this grid point

    Estimate outage_rrs;
    Estimate outage_prs;
    double ser_rrs = 0.0;
    double ser_rrs_se = 0.0;
    double ser_prs = 0.0;
    double ser_prs_se = 0.0;

    // Trials where the two strategies' outage indicators differ, split by
    // direction. Both directions are exactly 0 under OutageThreshold.
    std::uint64_t outage_prs_only = 0;  // PRS in outage, RRS not
    std::uint64_t outage_rrs_only = 0;  // RRS in outage, PRS not
    std::uint64_t pathwise_outage_mismatches = 0;

    // Trials with effective_sinr_RRS < effective_sinr_PRS; exactly 0 under
    // OutageThreshold.
    std::uint64_t pathwise_dominance_violations = 0;

    std::vector<std::uint64_t> decoding_set_histogram;  // counts of |C| = 0..N

    // Sup-norm distance between the empirical CDF of the max-min selection
    // statistic and the analytic proactive e2e CDF (threshold independent,
    // so identical across grid points of one run).
    double ks_distance_prs = 0.0;
};

struct RunOptions {
    std::uint64_t n_trials = 100000;
    std::uint64_t master_seed = 1;
    std::vector<double> threshold_grid;  // linear, strictly positive
    unsigned n_threads = 0;              // 0 -> hardware concurrency
    bool compute_ks = true;
    // Optional SER map override; must be monotone nonincreasing with
    // value 1/2 at zero. Defaults to ser_map.
    std::function<double(double)> ser;
    // Progress callback (trials done, trials total); called from worker
    // threads under a lock.
    std::function<void(std::uint64_t, std::uint64_t)> progress;
};

// Runs the trial engine: one channel realization per trial, evaluated
// against every grid threshold with common random numbers across strategies
// and grid points. Results are a pure function of (master_seed, params,
// grid) -- bytewise identical for any thread count, achieved by fixed-size
// trial chunks reduced in index order.
std::vector<TrialReport> run_trials(const NetworkParams& params, const RunOptions& options);

std::vector<TrialReport> run_trials(const NetworkParams& params, std::uint64_t n_trials,
                                    std::uint64_t master_seed,
                                    const std::vector<double>& threshold_grid);

}  // namespace relaysel
