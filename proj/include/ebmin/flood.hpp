#pragma once

#include <numbers>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ebmin/pathloss.hpp"
#include "ebmin/topology.hpp"

namespace ebmin {

// FLOOD(Eb1, Eb2) design point. Energies are per bit in units of N0; eb2 = 0
// means relays never transmit (one-shot scheme).
struct FloodParams {
    double eb1 = 0.0;
    double eb2 = 0.0;
    int max_slots = 1; // T
};

// Per-node history of one flood run. Slot indices are 1-based; the source has
// decode_slot 0 and transmits in slot 1. accum_energy is the received energy
// per bit, frozen at the slot a node decodes (or at the last simulated slot
// for nodes that never decode).
struct FloodTrace {
    std::vector<std::optional<int>> decode_slot;
    std::vector<std::optional<int>> transmit_slot;
    std::vector<double> accum_energy;
    double total_energy_per_bit = 0.0;
    bool covered = false;

    int size() const { return static_cast<int>(decode_slot.size()); }
};

// Time-slotted energy-accumulation flood. Slot 1: the source transmits eb1.
// At the end of each slot every not-yet-decoded node sums the energy received
// from all transmissions so far and decodes once the sum strictly exceeds
// ln2. A node that decodes in slot t retransmits eb2 in slot t+1 (if eb2 > 0
// and t+1 <= T). Transmissions on separate wide bands add energy and never
// interfere. Deterministic; the run stops at slot T or as soon as no further
// decode is possible (nothing pending, or every node has already decoded), so
// retransmissions that could no longer help anyone are not spent.
inline FloodTrace simulate_flood(const Network& net, const PathLossModel& model,
                                 const FloodParams& params) {
    if (!(params.eb1 > 0.0))
        throw std::invalid_argument("simulate_flood: eb1 must be positive");
    if (!(params.eb2 >= 0.0))
        throw std::invalid_argument("simulate_flood: eb2 must be nonnegative");
    if (params.max_slots < 1)
        throw std::invalid_argument("simulate_flood: need at least one slot");
    if (net.size() < 2)
        throw std::invalid_argument("simulate_flood: network needs at least two nodes");

    const int k = net.size();
    constexpr double threshold = std::numbers::ln2;

    FloodTrace trace;
    trace.decode_slot.assign(static_cast<std::size_t>(k), std::nullopt);
    trace.transmit_slot.assign(static_cast<std::size_t>(k), std::nullopt);
    trace.accum_energy.assign(static_cast<std::size_t>(k), 0.0);
    trace.decode_slot[0] = 0;
    trace.transmit_slot[0] = 1;

    std::vector<int> undecoded;
    undecoded.reserve(static_cast<std::size_t>(k) - 1);
    for (int j = 1; j < k; ++j) undecoded.push_back(j);

    struct Tx {
        int node;
        double energy;
    };
    std::vector<Tx> current{{0, params.eb1}};
    std::vector<int> just_decoded;
    int relay_count = 0;

    for (int t = 1; t <= params.max_slots && !current.empty(); ++t) {
        for (const Tx& tx : current) {
            const Vec2 p = net.nodes[tx.node];
            for (int j : undecoded) {
                const double dx = net.nodes[j].x - p.x;
                const double dy = net.nodes[j].y - p.y;
                trace.accum_energy[j] += tx.energy * model.gain_sq(dx * dx + dy * dy);
            }
        }
        just_decoded.clear();
        std::size_t keep = 0;
        for (std::size_t r = 0; r < undecoded.size(); ++r) {
            const int j = undecoded[r];
            if (trace.accum_energy[j] > threshold) {
                trace.decode_slot[j] = t;
                just_decoded.push_back(j);
            } else {
                undecoded[keep++] = j;
            }
        }
        undecoded.resize(keep);
        current.clear();
        if (undecoded.empty()) break; // nothing left to decode; pending retransmissions are dropped
        if (params.eb2 > 0.0 && t + 1 <= params.max_slots) {
            for (int j : just_decoded) {
                trace.transmit_slot[j] = t + 1;
                current.push_back({j, params.eb2});
                ++relay_count;
            }
        }
    }

    trace.covered = undecoded.empty();
    trace.total_energy_per_bit = params.eb1 + params.eb2 * relay_count;
    return trace;
}

// decoded non-source nodes over k-1
inline double coverage_fraction(const FloodTrace& trace) {
    const int k = trace.size();
    int decoded = 0;
    for (int j = 1; j < k; ++j)
        if (trace.decode_slot[j]) ++decoded;
    return static_cast<double>(decoded) / static_cast<double>(k - 1);
}

} // namespace ebmin
