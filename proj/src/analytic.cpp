#include "relaysel/analytic.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <limits>
#include <stdexcept>

namespace relaysel {

namespace {

void check_link(const LinkFading& link) {
    if (!(std::isfinite(link.shape) && link.shape >= 0.5))
        throw std::invalid_argument("link shape must be finite and >= 0.5");
    if (!(std::isfinite(link.mean_snr) && link.mean_snr > 0.0))
        throw std::invalid_argument("link mean_snr must be finite and > 0");
}

void check_interf(const InterferenceProfile& interf) {
    if (interf.count < 0) throw std::invalid_argument("interference count must be >= 0");
    if (interf.count == 0) return;
    if (!(std::isfinite(interf.shape) && interf.shape >= 0.5))
        throw std::invalid_argument("interference shape must be finite and >= 0.5");
    if (!(std::isfinite(interf.mean_inr) && interf.mean_inr > 0.0))
        throw std::invalid_argument("interference mean_inr must be finite and > 0");
}

void check_gamma_nonnegative(double gamma) {
    if (!(gamma >= 0.0)) throw std::domain_error("gamma must be >= 0");
}

double clamp_unit(double p) { return p < 0.0 ? 0.0 : (p > 1.0 ? 1.0 : p); }

}  // namespace

bool integer_shape(double shape) {
    if (!(shape >= 1.0)) return false;
    return std::fabs(shape - std::round(shape)) <= 1e-9 * shape;
}

double snr_pdf(const LinkFading& link, double gamma) {
    check_link(link);
    check_gamma_nonnegative(gamma);
    const double m = link.shape;
    const double rate = m / link.mean_snr;
    if (gamma == 0.0) {
        if (m > 1.0) return 0.0;
        if (m == 1.0) return rate;
        return std::numeric_limits<double>::infinity();
    }
    return std::exp(m * std::log(rate) + (m - 1.0) * std::log(gamma) - rate * gamma -
                    std::lgamma(m));
}

double snr_cdf(const LinkFading& link, double gamma) {
    check_link(link);
    check_gamma_nonnegative(gamma);
    if (!integer_shape(link.shape))
        throw std::domain_error(
            "snr_cdf: closed series requires an integer shape; "
            "use snr_cdf_any_shape or the quadrature path");
    const int m = static_cast<int>(std::round(link.shape));
    const double x = static_cast<double>(m) / link.mean_snr * gamma;
    if (x == 0.0) return 0.0;
    // Complement sum exp(-x) * sum_{i<m} x^i / i!, accumulated in extended
    // precision so the 1 - sum step keeps relative accuracy for small CDFs.
    long double sum = 0.0L;
    const double lx = std::log(x);
    for (int i = 0; i < m; ++i)
        sum += std::exp(static_cast<long double>(i * lx - x - std::lgamma(i + 1.0)));
    return clamp_unit(static_cast<double>(1.0L - sum));
}

double snr_cdf_any_shape(const LinkFading& link, double gamma) {
    check_link(link);
    check_gamma_nonnegative(gamma);
    if (gamma == 0.0) return 0.0;
    return boost::math::gamma_p(link.shape, link.shape / link.mean_snr * gamma);
}

double interference_sum_pdf(const InterferenceProfile& interf, double y) {
    check_interf(interf);
    if (interf.count == 0)
        throw std::domain_error(
            "interference_sum_pdf: no interferers; the aggregate INR is degenerate at 0");
    if (!(y >= 0.0)) throw std::domain_error("y must be >= 0");
    const double a = interf.shape * interf.count;
    const double b = interf.shape / interf.mean_inr;
    if (y == 0.0) {
        if (a > 1.0) return 0.0;
        if (a == 1.0) return b;
        return std::numeric_limits<double>::infinity();
    }
    return std::exp(a * std::log(b) + (a - 1.0) * std::log(y) - b * y - std::lgamma(a));
}

double sinr_cdf_closed(const LinkFading& link, const InterferenceProfile& interf, double gamma) {
    check_link(link);
    check_interf(interf);
    check_gamma_nonnegative(gamma);
    if (interf.count == 0) return snr_cdf(link, gamma);
    if (!integer_shape(link.shape))
        throw std::domain_error(
            "sinr_cdf_closed: closed series requires an integer link shape; "
            "use sinr_cdf_quadrature");
    const int m = static_cast<int>(std::round(link.shape));
    if (gamma == 0.0) return 0.0;

    // F(g) = 1 - sum_{i<m} sum_{j<=i} x^i exp(-x) / (j! (i-j)!)
    //            * b^a Gamma(j+a) / Gamma(a) * (x+b)^-(j+a)
    // with x = m g / gbar, a the aggregate interference shape, b its rate.
    // Obtained by expanding (1+y)^i binomially inside the average of the
    // conditional link CDF over the aggregate INR.
    const double a = interf.shape * interf.count;
    const double b = interf.shape / interf.mean_inr;
    const double x = static_cast<double>(m) / link.mean_snr * gamma;
    const double lx = std::log(x);
    const double lxb = std::log(x + b);
    const double base = a * std::log(b) - std::lgamma(a) - x;
    long double sum = 0.0L;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j <= i; ++j) {
            const double log_term = base + i * lx - std::lgamma(j + 1.0) -
                                    std::lgamma(i - j + 1.0) + std::lgamma(j + a) -
                                    (j + a) * lxb;
            sum += std::exp(static_cast<long double>(log_term));
        }
    }
    return clamp_unit(static_cast<double>(1.0L - sum));
}

double sinr_cdf_quadrature(const LinkFading& link, const InterferenceProfile& interf,
                           double gamma) {
    check_link(link);
    check_interf(interf);
    check_gamma_nonnegative(gamma);
    if (interf.count == 0) return snr_cdf_any_shape(link, gamma);
    if (gamma == 0.0) return 0.0;

    const double m = link.shape;
    const double rate = m / link.mean_snr;
    const double a = interf.shape * interf.count;
    const double b = interf.shape / interf.mean_inr;
    const double log_norm = a * std::log(b) - std::lgamma(a);

    auto integrand = [&](double y) {
        const double log_density = log_norm + (a - 1.0) * std::log(y) - b * y;
        return boost::math::gamma_p(m, rate * gamma * (1.0 + y)) * std::exp(log_density);
    };

    static thread_local boost::math::quadrature::exp_sinh<double> integrator;
    double error = 0.0, l1 = 0.0;
    const double value = integrator.integrate(integrand, 1e-12, &error, &l1);
    // The integrand is nonnegative, so l1 == value; `error` is the
    // integrator's relative error estimate.
    if (!(error <= 1e-9)) {
        throw QuadratureError("sinr_cdf_quadrature: accuracy not certified; achieved " +
                                  std::to_string(error),
                              error);
    }
    return clamp_unit(value);
}

CdfEvaluator::HopCdf CdfEvaluator::make_hop(const LinkFading& link,
                                            const InterferenceProfile& interf, HopRoute route) {
    check_link(link);
    check_interf(interf);
    HopCdf hop;
    hop.link = link;
    hop.interf = interf;
    hop.rate = link.shape / link.mean_snr;
    switch (route) {
        case HopRoute::Auto: hop.closed = integer_shape(link.shape); break;
        case HopRoute::ClosedForm:
            if (!integer_shape(link.shape))
                throw std::domain_error("CdfEvaluator: closed route requires integer shapes");
            hop.closed = true;
            break;
        case HopRoute::Quadrature: hop.closed = false; break;
    }
    if (!hop.closed) return hop;

    const int m = static_cast<int>(std::round(link.shape));
    hop.rate = static_cast<double>(m) / link.mean_snr;
    if (interf.count == 0) {
        // Pure-SNR series: coefficient x^i / i!.
        for (int i = 0; i < m; ++i) {
            hop.log_coeff.push_back(-std::lgamma(i + 1.0));
            hop.snr_power.push_back(i);
            hop.decay_power.push_back(0.0);
        }
        hop.irate = 0.0;
        return hop;
    }
    const double a = interf.shape * interf.count;
    const double b = interf.shape / interf.mean_inr;
    hop.irate = b;
    const double base = a * std::log(b) - std::lgamma(a);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j <= i; ++j) {
            hop.log_coeff.push_back(base - std::lgamma(j + 1.0) - std::lgamma(i - j + 1.0) +
                                    std::lgamma(j + a));
            hop.snr_power.push_back(i);
            hop.decay_power.push_back(j + a);
        }
    }
    return hop;
}

double CdfEvaluator::HopCdf::eval(double gamma) const {
    check_gamma_nonnegative(gamma);
    if (!closed) return sinr_cdf_quadrature(link, interf, gamma);
    if (gamma == 0.0) return 0.0;
    const double x = rate * gamma;
    const double lx = std::log(x);
    const double lxb = interf.count == 0 ? 0.0 : std::log(x + irate);
    long double sum = 0.0L;
    for (std::size_t k = 0; k < log_coeff.size(); ++k) {
        sum += std::exp(static_cast<long double>(log_coeff[k] + snr_power[k] * lx -
                                                 decay_power[k] * lxb - x));
    }
    return clamp_unit(static_cast<double>(1.0L - sum));
}

CdfEvaluator::CdfEvaluator(LinkFading first_hop, LinkFading second_hop,
                           InterferenceProfile interf, int n_branches, HopRoute route)
    : first_(make_hop(first_hop, interf, route)),
      second_(make_hop(second_hop, interf, route)),
      n_branches_(n_branches) {
    if (n_branches < 1) throw std::invalid_argument("n_branches must be >= 1");
}

double CdfEvaluator::e2e_cdf(double gamma) const {
    const double fs = first_.eval(gamma);
    const double fd = second_.eval(gamma);
    const double per_branch = fs + fd - fs * fd;
    double result = 1.0;
    for (int i = 0; i < n_branches_; ++i) result *= per_branch;
    return result;
}

CdfEvaluator make_cdf_evaluator(const NetworkParams& params, CdfEvaluator::HopRoute route) {
    validate(params);
    return CdfEvaluator(LinkFading{params.m_first, params.avg_snr_first},
                        LinkFading{params.m_second, params.avg_snr_second},
                        InterferenceProfile{params.n_interferers, params.m_interf, params.avg_inr},
                        params.n_branches, route);
}

}  // namespace relaysel
