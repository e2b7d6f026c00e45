#pragma once

namespace relaysel {

// How the set of relays that decoded the first hop is determined.
enum class DecodingPolicy {
    // A relay decodes iff its first-hop SINR strictly exceeds the threshold.
    OutageThreshold,
    // Bernoulli decoding success with probability 1 - PER(first-hop SINR),
    // where PER is a union-bound packet error proxy (see packet_error_rate).
    MldProxy,
};

const char* to_string(DecodingPolicy policy);

// Full parameterization of a multi-branch dual-hop decode-and-forward network.
// All mean SNR/INR values are linear scale; fading shapes follow the
// Nakagami-m convention (channel power gains are Gamma distributed with the
// given shape and the stated mean). Links are i.i.d. across branches and
// across interferers.
//
// Immutable by convention after validation; freely shareable across threads.
struct NetworkParams {
    int n_branches = 1;             // number of single-relay branches
    int n_interferers = 0;          // co-channel interferers at each relay and at the destination
    double m_first = 1.0;           // fading shape of source -> relay links
    double m_second = 1.0;          // fading shape of relay -> destination links
    double m_interf = 1.0;          // fading shape of interferer links
    double avg_snr_first = 1.0;     // mean per-link SNR of the first hop
    double avg_snr_second = 1.0;    // mean per-link SNR of the second hop
    double avg_inr = 0.0;           // mean INR per interferer (0 only when n_interferers == 0)
    double outage_threshold = 1.0;  // SINR outage threshold
    DecodingPolicy decoding_policy = DecodingPolicy::OutageThreshold;
    int mld_packet_symbols = 128;   // packet length used by the MldProxy PER model
};

// Throws std::invalid_argument naming the offending field if any constraint
// is violated: n_branches >= 1, n_interferers >= 0, shapes >= 0.5, mean
// SNRs and the threshold strictly positive, and avg_inr strictly positive
// unless n_interferers == 0.
void validate(const NetworkParams& params);

// 10^(x/10). Strictly increasing; a 10 dB step scales the result by exactly
// one decade to within 2 ulp. Throws std::invalid_argument on non-finite
// input.
double db_to_linear(double x_db);

}  // namespace relaysel
