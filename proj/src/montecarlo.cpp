#include "relaysel/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "relaysel/analytic.hpp"
#include "relaysel/network.hpp"

namespace relaysel {

double ser_map(double sinr) {
    assert(sinr >= 0.0);
    // Q(sqrt(2*g)) = erfc(sqrt(g)) / 2
    return 0.5 * std::erfc(std::sqrt(sinr));
}

Estimate wilson_interval(std::uint64_t successes, std::uint64_t trials) {
    if (trials == 0) throw std::invalid_argument("wilson_interval: trials must be >= 1");
    constexpr double z = 1.959963984540054;  // 97.5% normal quantile
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2.0 * n)) / denom;
    const double radius = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    return Estimate{p, std::max(0.0, center - radius), std::min(1.0, center + radius)};
}

double ks_statistic(const std::vector<double>& sorted_samples,
                    const std::function<double(double)>& cdf) {
    if (sorted_samples.empty()) throw std::invalid_argument("ks_statistic: empty sample");
    assert(std::is_sorted(sorted_samples.begin(), sorted_samples.end()));
    const double n = static_cast<double>(sorted_samples.size());
    double sup = 0.0;
    for (std::size_t i = 0; i < sorted_samples.size(); ++i) {
        const double f = cdf(sorted_samples[i]);
        const double lower = f - static_cast<double>(i) / n;
        const double upper = static_cast<double>(i + 1) / n - f;
        sup = std::max({sup, lower, upper});
    }
    return sup;
}

namespace {

// Per-threshold accumulator for one chunk of trials. Sums are reduced in
// fixed chunk order so results do not depend on the thread count.
struct GridAccum {
    std::uint64_t outage_rrs = 0;
    std::uint64_t outage_prs = 0;
    std::uint64_t prs_only = 0;
    std::uint64_t rrs_only = 0;
    std::uint64_t violations = 0;
    double ser_rrs_sum = 0.0;
    double ser_rrs_sumsq = 0.0;
    double ser_prs_sum = 0.0;
    double ser_prs_sumsq = 0.0;
    std::vector<std::uint64_t> set_size_hist;
};

constexpr std::uint64_t kChunkTrials = 4096;

double standard_error(long double sum, long double sumsq, std::uint64_t n) {
    if (n < 2) return 0.0;
    const long double mean = sum / n;
    long double var = (sumsq - static_cast<long double>(n) * mean * mean) / (n - 1);
    if (var < 0.0L) var = 0.0L;
    return static_cast<double>(std::sqrt(var / n));
}

}  // namespace

std::vector<TrialReport> run_trials(const NetworkParams& params, const RunOptions& options) {
    validate(params);
    if (options.n_trials < 1) throw std::invalid_argument("n_trials must be >= 1");
    if (options.threshold_grid.empty())
        throw std::invalid_argument("threshold_grid must be nonempty");
    for (double g : options.threshold_grid)
        if (!(std::isfinite(g) && g > 0.0))
            throw std::invalid_argument("threshold_grid values must be finite and > 0");

    const auto ser = options.ser ? options.ser : ser_map;
    const int n_branches = params.n_branches;
    const std::size_t n_grid = options.threshold_grid.size();
    const std::uint64_t n_trials = options.n_trials;
    const std::uint64_t n_chunks = (n_trials + kChunkTrials - 1) / kChunkTrials;

    std::vector<std::vector<GridAccum>> partials(n_chunks);
    std::vector<double> max_min(n_trials);

    std::atomic<std::uint64_t> next_chunk{0};
    std::atomic<std::uint64_t> trials_done{0};
    std::mutex progress_mutex;

    auto worker = [&]() {
        ChannelRealization real;
        DecisionDraws draws;
        std::vector<int> dec_set;
        dec_set.reserve(n_branches);
        for (;;) {
            const std::uint64_t chunk = next_chunk.fetch_add(1, std::memory_order_relaxed);
            if (chunk >= n_chunks) break;
            const std::uint64_t lo = chunk * kChunkTrials;
            const std::uint64_t hi = std::min(n_trials, lo + kChunkTrials);

            auto& acc = partials[chunk];
            acc.resize(n_grid);
            for (auto& a : acc) a.set_size_hist.assign(n_branches + 1, 0);

            for (std::uint64_t t = lo; t < hi; ++t) {
                TrialRng rng(options.master_seed, t);
                realize_channel(params, rng, real);
                draw_decision_uniforms(n_branches, rng, draws);
                max_min[t] = max_min_sinr(real);

                for (std::size_t g = 0; g < n_grid; ++g) {
                    const double threshold = options.threshold_grid[g];
                    decoding_set(real, params, draws, threshold, dec_set);
                    const SelectionOutcome rrs = select_rrs(real, dec_set, threshold);
                    const SelectionOutcome prs = select_prs(real, params, draws, threshold);

                    GridAccum& a = acc[g];
                    a.outage_rrs += rrs.outage;
                    a.outage_prs += prs.outage;
                    a.prs_only += (prs.outage && !rrs.outage);
                    a.rrs_only += (rrs.outage && !prs.outage);
                    a.violations += (rrs.effective_sinr < prs.effective_sinr);
                    const double sr = ser(rrs.effective_sinr);
                    const double sp = ser(prs.effective_sinr);
                    a.ser_rrs_sum += sr;
                    a.ser_rrs_sumsq += sr * sr;
                    a.ser_prs_sum += sp;
                    a.ser_prs_sumsq += sp * sp;
                    a.set_size_hist[dec_set.size()] += 1;
                }
            }

            if (options.progress) {
                const std::uint64_t done =
                    trials_done.fetch_add(hi - lo, std::memory_order_relaxed) + (hi - lo);
                std::lock_guard<std::mutex> lock(progress_mutex);
                options.progress(done, n_trials);
            }
        }
    };

    unsigned n_threads = options.n_threads;
    if (n_threads == 0) n_threads = std::max(1u, std::thread::hardware_concurrency());
    n_threads = static_cast<unsigned>(
        std::min<std::uint64_t>(n_threads, n_chunks));

    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (unsigned i = 0; i < n_threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    // Deterministic reduction: chunk partials in index order, extended
    // precision for the SER moments.
    std::vector<TrialReport> reports(n_grid);
    for (std::size_t g = 0; g < n_grid; ++g) {
        std::uint64_t outage_rrs = 0, outage_prs = 0, prs_only = 0, rrs_only = 0,
                      violations = 0;
        long double ser_rrs_sum = 0.0L, ser_rrs_sumsq = 0.0L;
        long double ser_prs_sum = 0.0L, ser_prs_sumsq = 0.0L;
        std::vector<std::uint64_t> hist(n_branches + 1, 0);
        for (std::uint64_t c = 0; c < n_chunks; ++c) {
            const GridAccum& a = partials[c][g];
            outage_rrs += a.outage_rrs;
            outage_prs += a.outage_prs;
            prs_only += a.prs_only;
            rrs_only += a.rrs_only;
            violations += a.violations;
            ser_rrs_sum += a.ser_rrs_sum;
            ser_rrs_sumsq += a.ser_rrs_sumsq;
            ser_prs_sum += a.ser_prs_sum;
            ser_prs_sumsq += a.ser_prs_sumsq;
            for (int k = 0; k <= n_branches; ++k) hist[k] += a.set_size_hist[k];
        }
        TrialReport& r = reports[g];
        r.n_trials = n_trials;
        r.threshold = options.threshold_grid[g];
        r.outage_rrs = wilson_interval(outage_rrs, n_trials);
        r.outage_prs = wilson_interval(outage_prs, n_trials);
        r.ser_rrs = static_cast<double>(ser_rrs_sum / n_trials);
        r.ser_prs = static_cast<double>(ser_prs_sum / n_trials);
        r.ser_rrs_se = standard_error(ser_rrs_sum, ser_rrs_sumsq, n_trials);
        r.ser_prs_se = standard_error(ser_prs_sum, ser_prs_sumsq, n_trials);
        r.outage_prs_only = prs_only;
        r.outage_rrs_only = rrs_only;
        r.pathwise_outage_mismatches = prs_only + rrs_only;
        r.pathwise_dominance_violations = violations;
        r.decoding_set_histogram = std::move(hist);
    }

    if (options.compute_ks) {
        std::sort(max_min.begin(), max_min.end());
        const CdfEvaluator eval = make_cdf_evaluator(params);
        const double ks =
            ks_statistic(max_min, [&](double x) { return e2e_cdf_prs(eval, x); });
        for (auto& r : reports) r.ks_distance_prs = ks;
    }

    return reports;
}

std::vector<TrialReport> run_trials(const NetworkParams& params, std::uint64_t n_trials,
                                    std::uint64_t master_seed,
                                    const std::vector<double>& threshold_grid) {
    RunOptions options;
    options.n_trials = n_trials;
    options.master_seed = master_seed;
    options.threshold_grid = threshold_grid;
    return run_trials(params, options);
}

}  // namespace relaysel
