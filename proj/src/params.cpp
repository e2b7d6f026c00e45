#include "relaysel/params.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace relaysel {

const char* to_string(DecodingPolicy policy) {
    switch (policy) {
        case DecodingPolicy::OutageThreshold: return "outage_threshold";
        case DecodingPolicy::MldProxy: return "mld_proxy";
    }
    return "?";
}

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

void require_shape(double value, const char* field) {
    require(std::isfinite(value) && value >= 0.5,
            std::string(field) + " must be finite and >= 0.5");
}

}  // namespace

void validate(const NetworkParams& p) {
    require(p.n_branches >= 1, "n_branches must be >= 1");
    require(p.n_interferers >= 0, "n_interferers must be >= 0");
    require_shape(p.m_first, "m_first");
    require_shape(p.m_second, "m_second");
    require_shape(p.m_interf, "m_interf");
    require(std::isfinite(p.avg_snr_first) && p.avg_snr_first > 0.0,
            "avg_snr_first must be finite and > 0");
    require(std::isfinite(p.avg_snr_second) && p.avg_snr_second > 0.0,
            "avg_snr_second must be finite and > 0");
    require(std::isfinite(p.avg_inr) && p.avg_inr >= 0.0,
            "avg_inr must be finite and >= 0");
    require(p.n_interferers == 0 || p.avg_inr > 0.0,
            "avg_inr must be > 0 when n_interferers >= 1");
    require(std::isfinite(p.outage_threshold) && p.outage_threshold > 0.0,
            "outage_threshold must be finite and > 0");
    require(p.mld_packet_symbols >= 1, "mld_packet_symbols must be >= 1");
}

double db_to_linear(double x_db) {
    if (!std::isfinite(x_db)) throw std::invalid_argument("db_to_linear: input must be finite");
    // The division is done in extended precision so that x and x+10 map to
    // ratios of exactly 10 at double precision.
    return static_cast<double>(std::pow(10.0L, static_cast<long double>(x_db) / 10.0L));
}

}  // namespace relaysel
