#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "ebmin/rng.hpp"
#include "ebmin/topology.hpp"

namespace ebmin {

enum class PlacementEvent { dense_good, extended_good, no_empty_cell };

// Parameters of one placement event. cell_side is the grid side (dense_good,
// no_empty_cell); beta/delta apply where the event definition uses them.
struct EventSpec {
    PlacementEvent kind = PlacementEvent::dense_good;
    double cell_side = 0.0;
    double beta = 0.0;
    double delta = 0.0;
};

// Random-network generator a Monte Carlo run draws from.
struct GeneratorSpec {
    NetworkClass cls = NetworkClass::dense;
    int k = 2;
    double area = 0.0;   // dense
    double lambda = 0.0; // extended
};

struct McResult {
    long trials = 0;
    long failures = 0; // event complement occurred
    double frequency = 0.0;
    double standard_error = 0.0;
    double analytic_bound = 0.0;
};

// Dense good placement: every cell count (source included) lies in
// [(1-delta) m, (1+delta) m + 1) with m = (k-1) s^2 / A_k.
inline bool check_dense_good(const Network& net, double s, double delta) {
    if (!(delta > 0.0) || !(delta < 1.0))
        throw std::invalid_argument("check_dense_good: delta must lie in (0, 1)");
    const CellGrid grid = cell_grid(net, s);
    const double area = net.area_side * net.area_side;
    const double mean = (net.size() - 1) * s * s / area;
    const double lo = (1.0 - delta) * mean;
    const double hi = (1.0 + delta) * mean + 1.0;
    for (int c : grid.counts)
        if (c < lo || c >= hi) return false;
    return true;
}

// Chernoff union bound on the dense good-placement complement:
// (2 A_k / s^2) exp(-delta^2 (1-delta) (k-1) s^2 / (2 A_k)). May exceed 1;
// vacuous values are returned as-is.
inline double dense_good_bound(int k, double area, double s, double delta) {
    if (k < 2 || !(area > 0.0) || !(s > 0.0) || !(delta > 0.0) || !(delta < 1.0))
        throw std::invalid_argument("dense_good_bound: bad parameters");
    const double cells = 2.0 * area / (s * s);
    const double exponent = -delta * delta * (1.0 - delta) * (k - 1) * s * s / (2.0 * area);
    return cells * std::exp(exponent);
}

// Good non-origin cells on the lambda^(-1/2) grid: exactly one node, inside
// the centered window of side beta * lambda^(-1/2).
inline int count_good_cells(const Network& net, double lambda, double beta) {
    if (!(lambda > 0.0))
        throw std::invalid_argument("count_good_cells: lambda must be positive");
    const double s = 1.0 / std::sqrt(lambda);
    const WindowOccupancy occ = window_occupancy(net, s, beta);
    int good = 0;
    const std::size_t cells = occ.in_window.size();
    for (std::size_t c = 1; c < cells; ++c) // cell 0 holds the origin
        if (occ.in_window[c] == 1 && occ.out_window[c] == 0) ++good;
    return good;
}

// E[good cells] = beta^2 (k-1)^k / k^(k-1), evaluated in the log domain.
inline double expected_good_cells(int k, double beta) {
    if (k < 2)
        throw std::invalid_argument("expected_good_cells: k must be at least 2");
    if (!(beta >= 0.0) || beta > 1.0)
        throw std::invalid_argument("expected_good_cells: beta must lie in [0, 1]");
    if (beta == 0.0) return 0.0;
    const double kd = static_cast<double>(k);
    return std::exp(2.0 * std::log(beta) + kd * std::log(kd - 1.0) - (kd - 1.0) * std::log(kd));
}

// McDiarmid bound on the extended good-placement complement:
// 2 exp(-delta^2 beta^4 (k-1)^(2k-1) / (2 k^(2k-2))); the power ratio is
// evaluated in the log domain so it never overflows.
inline double extended_good_bound(int k, double beta, double delta) {
    if (k < 2)
        throw std::invalid_argument("extended_good_bound: k must be at least 2");
    if (!(beta >= 0.0) || beta > 1.0 || !(delta > 0.0))
        throw std::invalid_argument("extended_good_bound: bad beta or delta");
    const double kd = static_cast<double>(k);
    const double log_ratio = (2.0 * kd - 1.0) * std::log(kd - 1.0) - (2.0 * kd - 2.0) * std::log(kd);
    const double exponent = -0.5 * delta * delta * std::pow(beta, 4.0) * std::exp(log_ratio);
    return 2.0 * std::exp(exponent);
}

// Extended good placement: at least (1-delta) of the expected good cells.
inline bool check_extended_good(const Network& net, double lambda, double beta, double delta) {
    if (!(delta > 0.0) || !(delta < 1.0))
        throw std::invalid_argument("check_extended_good: delta must lie in (0, 1)");
    return count_good_cells(net, lambda, beta) >= (1.0 - delta) * expected_good_cells(net.size(), beta);
}

inline bool check_no_empty_cell(const Network& net, double cell_side) {
    return cell_grid(net, cell_side).min_count() >= 1;
}

// Union bound over the non-origin cells being empty:
// (A_k / s^2 - 1) (1 - s^2 / A_k)^(k-1).
inline double empty_cell_union_bound(int k, double area, double cell_side) {
    if (k < 2 || !(area > 0.0) || !(cell_side > 0.0))
        throw std::invalid_argument("empty_cell_union_bound: bad parameters");
    const double frac = cell_side * cell_side / area;
    if (!(frac < 1.0))
        throw std::invalid_argument("empty_cell_union_bound: need cell_side^2 < area");
    return (1.0 / frac - 1.0) * std::pow(1.0 - frac, k - 1);
}

namespace detail {

inline Network generate_trial(const GeneratorSpec& gen, std::uint64_t seed) {
    switch (gen.cls) {
    case NetworkClass::dense: return generate_dense(gen.k, gen.area, seed);
    case NetworkClass::extended: return generate_extended(gen.k, gen.lambda, seed);
    default:
        throw std::invalid_argument("mc_estimate: generator must be dense or extended");
    }
}

inline double generator_area(const GeneratorSpec& gen) {
    return gen.cls == NetworkClass::dense ? gen.area : static_cast<double>(gen.k) / gen.lambda;
}

inline double generator_lambda(const GeneratorSpec& gen) {
    return gen.cls == NetworkClass::extended ? gen.lambda : static_cast<double>(gen.k) / gen.area;
}

} // namespace detail

// Monte Carlo estimate of an event-complement frequency against its analytic
// bound. Trial i uses trial_seed(master_seed, i), so runs reproduce exactly
// and trials could be evaluated in any order.
inline McResult mc_estimate(const EventSpec& event, const GeneratorSpec& gen, long trials,
                            std::uint64_t master_seed) {
    if (trials < 1)
        throw std::invalid_argument("mc_estimate: need at least one trial");

    McResult res;
    res.trials = trials;
    for (long t = 0; t < trials; ++t) {
        const Network net = detail::generate_trial(gen, trial_seed(master_seed, static_cast<std::uint64_t>(t)));
        bool holds = false;
        switch (event.kind) {
        case PlacementEvent::dense_good:
            holds = check_dense_good(net, event.cell_side, event.delta);
            break;
        case PlacementEvent::extended_good:
            holds = check_extended_good(net, detail::generator_lambda(gen), event.beta, event.delta);
            break;
        case PlacementEvent::no_empty_cell:
            holds = check_no_empty_cell(net, event.cell_side);
            break;
        }
        if (!holds) ++res.failures;
    }
    res.frequency = static_cast<double>(res.failures) / static_cast<double>(trials);
    res.standard_error = std::sqrt(res.frequency * (1.0 - res.frequency) / static_cast<double>(trials));
    switch (event.kind) {
    case PlacementEvent::dense_good:
        res.analytic_bound =
            dense_good_bound(gen.k, detail::generator_area(gen), event.cell_side, event.delta);
        break;
    case PlacementEvent::extended_good:
        res.analytic_bound = extended_good_bound(gen.k, event.beta, event.delta);
        break;
    case PlacementEvent::no_empty_cell:
        res.analytic_bound =
            empty_cell_union_bound(gen.k, detail::generator_area(gen), event.cell_side);
        break;
    }
    return res;
}

} // namespace ebmin
