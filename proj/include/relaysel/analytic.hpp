#pragma once

#include <stdexcept>
#include <vector>

#include "relaysel/params.hpp"

namespace relaysel {

// Single Nakagami-faded link: the instantaneous SNR is Gamma distributed
// with the given shape and mean. Closed-form entry points additionally
// require an integer shape; the quadrature path accepts any shape >= 0.5.
struct LinkFading {
    double shape = 1.0;
    double mean_snr = 1.0;
};

// Aggregate co-channel interference: `count` i.i.d. interferers, each Gamma
// with `shape` and `mean_inr`; the aggregate INR is Gamma with shape
// count * shape. count == 0 means no interference (mean_inr ignored).
struct InterferenceProfile {
    int count = 0;
    double shape = 1.0;
    double mean_inr = 0.0;
};

// Raised when the adaptive quadrature cannot certify the requested accuracy.
struct QuadratureError : std::runtime_error {
    double achieved_error;
    QuadratureError(const std::string& msg, double achieved)
        : std::runtime_error(msg), achieved_error(achieved) {}
};

// True when `shape` is a positive integer (within a tiny tolerance), i.e.
// eligible for the finite-series closed forms.
bool integer_shape(double shape);

// Gamma density of the instantaneous link SNR:
// (m/gbar)^m g^(m-1) exp(-m g / gbar) / Gamma(m). Throws on negative gamma.
double snr_pdf(const LinkFading& link, double gamma);

// Link SNR CDF as a finite series, integer shapes only:
// 1 - sum_{i<m} (m g/gbar)^i exp(-m g/gbar) / i!.
// Throws std::domain_error for non-integer shapes, directing the caller to
// snr_cdf_any_shape / the quadrature path.
double snr_cdf(const LinkFading& link, double gamma);

// Link SNR CDF via the regularized lower incomplete Gamma; any shape >= 0.5.
double snr_cdf_any_shape(const LinkFading& link, double gamma);

// Density of the aggregate INR (sum of `count` i.i.d. Gamma INRs):
// Gamma with shape count*m_I and rate m_I/mean_inr. Throws std::domain_error
// when count == 0 (the aggregate is degenerate at zero; callers must branch).
double interference_sum_pdf(const InterferenceProfile& interf, double y);

// CDF of the per-link SINR gamma_link / (1 + Y) with Y the aggregate INR,
// as a finite closed-form series (binomial expansion of (1+y)^i integrated
// against the Gamma density of Y). Integer link shape required; count == 0
// delegates to snr_cdf. Matches sinr_cdf_quadrature to <= 1e-9 relative.
double sinr_cdf_closed(const LinkFading& link, const InterferenceProfile& interf, double gamma);

// Independent oracle for the same CDF: adaptive quadrature of
// int_0^inf P(gamma_link < gamma (1+y)) f_Y(y) dy. Accepts any real shapes
// >= 0.5. Throws QuadratureError when the requested accuracy (1e-12) cannot
// be certified.
double sinr_cdf_quadrature(const LinkFading& link, const InterferenceProfile& interf, double gamma);

// End-to-end outage CDF family for the N-branch selection network.
//
// e2e_cdf(g) = [F_S(g) + F_D(g) - F_S(g) F_D(g)]^N, with F_S / F_D the
// first/second hop SINR CDFs. Note the threshold-tied semantics: for the
// reactive strategy this is the outage probability at threshold g when the
// relays' decoding threshold also equals g, not the CDF of a fixed random
// variable. For the proactive strategy the same expression is the genuine
// CDF of max_n min(first-hop SINR, second-hop SINR).
class CdfEvaluator {
public:
    enum class HopRoute {
        Auto,        // closed form when the hop shape is integer, else quadrature
        ClosedForm,  // force the series (throws on non-integer shapes)
        Quadrature,  // force the quadrature oracle
    };

    CdfEvaluator(LinkFading first_hop, LinkFading second_hop, InterferenceProfile interf,
                 int n_branches, HopRoute route = HopRoute::Auto);

    double first_hop_cdf(double gamma) const { return first_.eval(gamma); }
    double second_hop_cdf(double gamma) const { return second_.eval(gamma); }
    double e2e_cdf(double gamma) const;

    int n_branches() const { return n_branches_; }

private:
    struct HopCdf {
        LinkFading link;
        InterferenceProfile interf;
        bool closed = true;
        // Precomputed series terms: F(g) = 1 - sum_k exp(log_coeff[k]
        // + snr_power[k]*log(x) - decay_power[k]*log(x + irate) - x),
        // x = rate * g.
        std::vector<double> log_coeff;
        std::vector<int> snr_power;
        std::vector<double> decay_power;
        double rate = 1.0;
        double irate = 0.0;

        double eval(double gamma) const;
    };

    static HopCdf make_hop(const LinkFading& link, const InterferenceProfile& interf,
                           HopRoute route);

    HopCdf first_;
    HopCdf second_;
    int n_branches_;
};

inline double e2e_cdf_rrs(const CdfEvaluator& eval, double gamma) { return eval.e2e_cdf(gamma); }
inline double e2e_cdf_prs(const CdfEvaluator& eval, double gamma) { return eval.e2e_cdf(gamma); }

// Evaluator for a validated parameter set (first hop, second hop, shared
// interference profile, N branches).
CdfEvaluator make_cdf_evaluator(const NetworkParams& params,
                                CdfEvaluator::HopRoute route = CdfEvaluator::HopRoute::Auto);

}  // namespace relaysel
