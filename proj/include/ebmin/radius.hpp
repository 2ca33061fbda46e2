#pragma once

#include <algorithm>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ebmin/pathloss.hpp"
#include "ebmin/topology.hpp"

namespace ebmin {

// Converse-side result. lower_bound_ebn0 = ln2 / G in units of N0, where G is
// the effective network radius of the destination set.
struct BoundReport {
    double effective_radius = 0.0; // G
    double lower_bound_ebn0 = 0.0; // ln2 / G
    int destination_count = 0;
    int argmax_node = -1; // transmitter attaining the max gain sum
};

enum class TightenStrategy { exhaustive, heuristic };

namespace detail {

inline void validate_destinations(const Network& net, const std::vector<int>& dest) {
    if (dest.empty())
        throw std::invalid_argument("destination set must be nonempty");
    std::vector<int> sorted = dest;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.front() < 1 || sorted.back() >= net.size())
        throw std::out_of_range("destination index outside 1..k-1");
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("destination set contains duplicates");
}

// unchecked core of the gain sum; excludes j == from (a node never hears itself)
inline double gain_sum(const Network& net, const PathLossModel& model, int from,
                       const std::vector<int>& dest) {
    const Vec2 p = net.nodes[from];
    double sum = 0.0;
    for (int j : dest) {
        if (j == from) continue;
        const double dx = net.nodes[j].x - p.x;
        const double dy = net.nodes[j].y - p.y;
        sum += model.gain_sq(dx * dx + dy * dy);
    }
    return sum;
}

// unchecked core: G = (1/|R|) max over all nodes of the gain sum into R,
// ties broken toward the smallest node index
inline std::pair<double, int> effective_radius_core(const Network& net, const PathLossModel& model,
                                                    const std::vector<int>& dest) {
    double best = -1.0;
    int best_node = -1;
    for (int i = 0; i < net.size(); ++i) {
        const double sum = gain_sum(net, model, i, dest);
        if (sum > best) {
            best = sum;
            best_node = i;
        }
    }
    return {best / static_cast<double>(dest.size()), best_node};
}

inline BoundReport report_for(const Network& net, const PathLossModel& model,
                              const std::vector<int>& dest) {
    const auto [g, argmax] = effective_radius_core(net, model, dest);
    if (!(g > 0.0))
        throw std::domain_error("effective radius is zero; the energy requirement is unbounded");
    BoundReport rep;
    rep.effective_radius = g;
    rep.lower_bound_ebn0 = std::numbers::ln2 / g;
    rep.destination_count = static_cast<int>(dest.size());
    rep.argmax_node = argmax;
    return rep;
}

} // namespace detail

inline double total_gain_from(const Network& net, const PathLossModel& model, int from,
                              const std::vector<int>& dest) {
    detail::validate_destinations(net, dest);
    if (from < 0 || from >= net.size())
        throw std::out_of_range("total_gain_from: node index out of range");
    return detail::gain_sum(net, model, from, dest);
}

inline std::pair<double, int> effective_radius(const Network& net, const PathLossModel& model,
                                               const std::vector<int>& dest) {
    detail::validate_destinations(net, dest);
    return detail::effective_radius_core(net, model, dest);
}

inline BoundReport lower_bound_ebn0(const Network& net, const PathLossModel& model,
                                    const std::vector<int>& dest) {
    detail::validate_destinations(net, dest);
    return detail::report_for(net, model, dest);
}

inline std::vector<int> all_destinations(const Network& net) {
    std::vector<int> dest(static_cast<std::size_t>(net.size() - 1));
    for (int j = 1; j < net.size(); ++j) dest[j - 1] = j;
    return dest;
}

// Tighter converse: maximize ln2/G over subsets of the destination set.
// exhaustive walks all 2^|R|-1 nonempty subsets (refused above |R| = 20);
// heuristic walks R itself, every singleton, and the prefixes of R ordered by
// distance from the source. The heuristic family contains R, so its result
// never falls below the plain bound.
inline BoundReport tightened_lower_bound(const Network& net, const PathLossModel& model,
                                         const std::vector<int>& dest, TightenStrategy strategy) {
    detail::validate_destinations(net, dest);
    std::vector<int> base = dest;
    std::sort(base.begin(), base.end());
    const int m = static_cast<int>(base.size());

    BoundReport best = detail::report_for(net, model, base);
    auto consider = [&](const std::vector<int>& subset) {
        const BoundReport rep = detail::report_for(net, model, subset);
        if (rep.lower_bound_ebn0 > best.lower_bound_ebn0) best = rep;
    };

    if (strategy == TightenStrategy::exhaustive) {
        if (m > 20)
            throw std::invalid_argument(
                "tightened_lower_bound: exhaustive search refused for |R| > 20");
        std::vector<int> subset;
        subset.reserve(static_cast<std::size_t>(m));
        const std::uint64_t end = 1ull << m;
        for (std::uint64_t mask = 1; mask < end; ++mask) {
            subset.clear();
            for (int b = 0; b < m; ++b)
                if (mask & (1ull << b)) subset.push_back(base[b]);
            consider(subset);
        }
        return best;
    }

    for (int j : base) consider({j});
    std::vector<int> by_distance = base;
    std::stable_sort(by_distance.begin(), by_distance.end(), [&](int a, int b) {
        return pair_distance(net, 0, a) < pair_distance(net, 0, b);
    });
    std::vector<int> prefix;
    prefix.reserve(by_distance.size());
    for (int j : by_distance) {
        prefix.push_back(j);
        consider(prefix);
    }
    return best;
}

} // namespace ebmin
