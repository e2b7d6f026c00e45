#include "relaysel/network.hpp"

#include <cassert>
#include <cmath>

namespace relaysel {

void realize_channel(const NetworkParams& params, TrialRng& rng, ChannelRealization& out) {
    const int n = params.n_branches;
    const int l = params.n_interferers;

    out.first_hop_snr.resize(n);
    out.second_hop_snr.resize(n);
    out.relay_inr_sum.assign(n, 0.0);
    out.first_hop_sinr.resize(n);
    out.second_hop_sinr.resize(n);

    const GammaSampler first(params.m_first, params.avg_snr_first);
    const GammaSampler second(params.m_second, params.avg_snr_second);

    for (int i = 0; i < n; ++i) out.first_hop_snr[i] = first.sample(rng);
    for (int i = 0; i < n; ++i) out.second_hop_snr[i] = second.sample(rng);

    out.dest_inr_sum = 0.0;
    if (l > 0) {
        const GammaSampler interf(params.m_interf, params.avg_inr);
        for (int i = 0; i < n; ++i) {
            double sum = 0.0;
            for (int j = 0; j < l; ++j) sum += interf.sample(rng);
            out.relay_inr_sum[i] = sum;
        }
        for (int j = 0; j < l; ++j) out.dest_inr_sum += interf.sample(rng);
    }

    for (int i = 0; i < n; ++i) {
        out.first_hop_sinr[i] = out.first_hop_snr[i] / (1.0 + out.relay_inr_sum[i]);
        out.second_hop_sinr[i] = out.second_hop_snr[i] / (1.0 + out.dest_inr_sum);
    }
}

ChannelRealization realize_channel(const NetworkParams& params, TrialRng& rng) {
    ChannelRealization out;
    realize_channel(params, rng, out);
    return out;
}

void draw_decision_uniforms(int n_branches, TrialRng& rng, DecisionDraws& out) {
    out.relay_success.resize(n_branches);
    for (int i = 0; i < n_branches; ++i) out.relay_success[i] = rng.next_unit();
}

double packet_error_rate(double sinr, int packet_symbols) {
    // Q(sqrt(2*g)) = erfc(sqrt(g)) / 2
    const double symbol_error = 0.5 * std::erfc(std::sqrt(sinr));
    return std::min(1.0, packet_symbols * symbol_error);
}

namespace {

bool relay_decodes(const ChannelRealization& real, const NetworkParams& params,
                   const DecisionDraws& draws, double threshold, int branch) {
    if (params.decoding_policy == DecodingPolicy::OutageThreshold)
        return real.first_hop_sinr[branch] > threshold;
    const double per = packet_error_rate(real.first_hop_sinr[branch], params.mld_packet_symbols);
    return draws.relay_success[branch] < 1.0 - per;
}

}  // namespace

void decoding_set(const ChannelRealization& real, const NetworkParams& params,
                  const DecisionDraws& draws, double threshold, std::vector<int>& out) {
    out.clear();
    for (int i = 0; i < params.n_branches; ++i)
        if (relay_decodes(real, params, draws, threshold, i)) out.push_back(i);
}

std::vector<int> decoding_set(const ChannelRealization& real, const NetworkParams& params,
                              const DecisionDraws& draws, double threshold) {
    std::vector<int> out;
    decoding_set(real, params, draws, threshold, out);
    return out;
}

SelectionOutcome select_rrs(const ChannelRealization& real,
                            const std::vector<int>& decoding_set, double threshold) {
    SelectionOutcome outcome;
    outcome.strategy = Strategy::RRS;
    outcome.decoding_set_size = static_cast<int>(decoding_set.size());
    if (decoding_set.empty()) {
        outcome.effective_sinr = 0.0;
        outcome.outage = true;
        return outcome;
    }
    int best = decoding_set.front();
    for (int r : decoding_set)
        if (real.second_hop_sinr[r] > real.second_hop_sinr[best]) best = r;
    outcome.chosen_relay = best;
    outcome.effective_sinr = real.second_hop_sinr[best];
    outcome.outage = !(outcome.effective_sinr > threshold);
    return outcome;
}

SelectionOutcome select_prs(const ChannelRealization& real, const NetworkParams& params,
                            const DecisionDraws& draws, double threshold) {
    SelectionOutcome outcome;
    outcome.strategy = Strategy::PRS;
    const int n = params.n_branches;
    assert(n >= 1);
    int best = 0;
    double best_min = std::min(real.first_hop_sinr[0], real.second_hop_sinr[0]);
    for (int i = 1; i < n; ++i) {
        const double m = std::min(real.first_hop_sinr[i], real.second_hop_sinr[i]);
        if (m > best_min) {
            best_min = m;
            best = i;
        }
    }
    outcome.chosen_relay = best;
    const bool decoded = relay_decodes(real, params, draws, threshold, best);
    outcome.decoding_set_size = decoded ? 1 : 0;
    outcome.effective_sinr = decoded ? real.second_hop_sinr[best] : 0.0;
    outcome.outage = !(outcome.effective_sinr > threshold);
    return outcome;
}

double max_min_sinr(const ChannelRealization& real) {
    double best = 0.0;
    const std::size_t n = real.first_hop_sinr.size();
    for (std::size_t i = 0; i < n; ++i) {
        const double m = std::min(real.first_hop_sinr[i], real.second_hop_sinr[i]);
        if (i == 0 || m > best) best = m;
    }
    return best;
}

}  // namespace relaysel
