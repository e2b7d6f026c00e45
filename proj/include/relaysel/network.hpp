#pragma once

#include <optional>
#include <vector>

#include "relaysel/fading.hpp"
#include "relaysel/params.hpp"

namespace relaysel {

// One trial's channel power gains and the per-hop SINRs derived from them.
// sinr = snr / (1 + aggregate interference), so every SINR entry is bounded
// by its SNR entry, with equality iff the relevant interference sum is zero.
struct ChannelRealization {
    std::vector<double> first_hop_snr;    // source -> relay, per branch
    std::vector<double> second_hop_snr;   // relay -> destination, per branch
    std::vector<double> relay_inr_sum;    // aggregate INR at each relay
    double dest_inr_sum = 0.0;            // aggregate INR at the destination
    std::vector<double> first_hop_sinr;
    std::vector<double> second_hop_sinr;
};

enum class Strategy { RRS, PRS };

struct SelectionOutcome {
    Strategy strategy = Strategy::RRS;
    // Branch index of the selected relay; absent for RRS when the decoding
    // set is empty. PRS always selects one of the N branches.
    std::optional<int> chosen_relay;
    // End-to-end SINR used for outage and SER accounting: the selected
    // relay's second-hop SINR when it decoded the first hop, 0 otherwise.
    double effective_sinr = 0.0;
    bool outage = true;
    // RRS: |C|. PRS: 1 if the chosen relay decoded the first hop, else 0.
    int decoding_set_size = 0;
};

// Per-trial decoding uniforms, one per relay, shared by both strategies so
// that the reactive/proactive comparison is paired (common random numbers).
// Consumed only under DecodingPolicy::MldProxy.
struct DecisionDraws {
    std::vector<double> relay_success;
};

// Draws all channel power gains for one trial and fills the derived SINRs.
// The draw order is fixed: first-hop gains (branch 0..N-1), second-hop gains,
// relay interference (branch-major, interferer-minor), destination
// interference. Requires validated params.
void realize_channel(const NetworkParams& params, TrialRng& rng, ChannelRealization& out);
ChannelRealization realize_channel(const NetworkParams& params, TrialRng& rng);

// One uniform per relay, drawn after the channel gains.
void draw_decision_uniforms(int n_branches, TrialRng& rng, DecisionDraws& out);

// Union-bound packet error proxy: min(1, M * Q(sqrt(2 * sinr))) for a packet
// of M symbols.
double packet_error_rate(double sinr, int packet_symbols);

// Decoding set under the configured policy, branch indices ascending.
// OutageThreshold: relays whose first-hop SINR strictly exceeds `threshold`.
// MldProxy: relay n succeeds iff draws.relay_success[n] < 1 - PER(sinr_n);
// the threshold is not consulted.
void decoding_set(const ChannelRealization& real, const NetworkParams& params,
                  const DecisionDraws& draws, double threshold, std::vector<int>& out);
std::vector<int> decoding_set(const ChannelRealization& real, const NetworkParams& params,
                              const DecisionDraws& draws, double threshold);

// Reactive selection: the decoding-set relay with the highest second-hop
// SINR (ties broken toward the lowest branch index). Empty set means outage
// with effective SINR 0. Outage convention here and in select_prs: outage
// iff NOT(effective_sinr > threshold), the exact complement of the decoding
// success rule, so the comparison between strategies is boundary-exact.
SelectionOutcome select_rrs(const ChannelRealization& real,
                            const std::vector<int>& decoding_set, double threshold);

// Proactive (max-min) selection: the branch maximizing
// min(first-hop SINR, second-hop SINR), ties toward the lowest index. The
// chosen relay's decoding success is judged by the same policy and, under
// MldProxy, the same uniform used for the decoding set.
SelectionOutcome select_prs(const ChannelRealization& real, const NetworkParams& params,
                            const DecisionDraws& draws, double threshold);

// max_n min(first_hop_sinr[n], second_hop_sinr[n]) -- the PRS selection
// statistic.
double max_min_sinr(const ChannelRealization& real);

}  // namespace relaysel
