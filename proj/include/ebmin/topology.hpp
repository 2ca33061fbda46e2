#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ebmin/rng.hpp"

namespace ebmin {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

enum class NetworkClass { dense, extended, regular };

// A geometric network realization. Node 0 is the source; for generated
// dense/extended networks it sits at the origin, for regular networks it sits
// in the window of the origin cell. All coordinates lie in [0, area_side]^2.
struct Network {
    std::vector<Vec2> nodes; // node 0 first
    double area_side = 0.0;  // sqrt of the network area
    NetworkClass cls = NetworkClass::dense;

    int size() const { return static_cast<int>(nodes.size()); }
};

inline double pair_distance(const Network& net, int i, int j) {
    if (i < 0 || j < 0 || i >= net.size() || j >= net.size())
        throw std::out_of_range("pair_distance: node index out of range");
    const double dx = net.nodes[i].x - net.nodes[j].x;
    const double dy = net.nodes[i].y - net.nodes[j].y;
    return std::sqrt(dx * dx + dy * dy);
}

// Occupancy counts on the s-partition of [0, area_side]^2. Cells are
// half-open [x, x+s) x [y, y+s); the top/right boundary of the area belongs
// to the last cell so the partition is exhaustive.
struct CellGrid {
    double cell_side = 0.0;
    int grid_dim = 0;
    std::vector<int> counts; // row-major: counts[cy * grid_dim + cx]

    int count(int cx, int cy) const { return counts[static_cast<std::size_t>(cy) * grid_dim + cx]; }
    int min_count() const {
        int m = counts.empty() ? 0 : counts[0];
        for (int c : counts) m = std::min(m, c);
        return m;
    }
    int total() const {
        int t = 0;
        for (int c : counts) t += c;
        return t;
    }
};

// Per-cell split of the occupancy into nodes inside/outside the centered
// window of side beta * s. Window boundary is closed (edge nodes count as in).
struct WindowOccupancy {
    int grid_dim = 0;
    std::vector<int> in_window;
    std::vector<int> out_window;
};

enum class PlacementPolicy { center, uniform_in_window, corner_adversarial };

struct RegularSpec {
    int k = 4;            // square integer, k >= 4
    double cell_side = 1; // s
    double beta = 0;      // window fraction in [0, 1)
    PlacementPolicy policy = PlacementPolicy::center;
};

namespace detail {

inline int grid_dim_checked(double area_side, double s) {
    if (!(s > 0.0))
        throw std::invalid_argument("cell side must be positive");
    const double ratio = area_side / s;
    const double rounded = std::round(ratio);
    if (rounded < 1.0 || std::abs(ratio - rounded) > 1e-9 * std::max(1.0, ratio))
        throw std::invalid_argument("cell side does not divide the area side; adjust s");
    return static_cast<int>(rounded);
}

inline int cell_axis_index(double coord, double s, int dim) {
    int i = static_cast<int>(std::floor(coord / s));
    if (i < 0) i = 0;
    if (i >= dim) i = dim - 1; // closed top/right boundary
    return i;
}

} // namespace detail

// uniform node draws on [0, side)^2; node 0 pinned to the origin, remaining
// nodes drawn in index order, x before y
inline Network scatter_uniform(int k, double area, std::uint64_t seed, NetworkClass cls) {
    if (k < 2)
        throw std::invalid_argument("network generation requires k >= 2");
    if (!(area > 0.0))
        throw std::invalid_argument("network generation requires a positive area");
    Network net;
    net.cls = cls;
    net.area_side = std::sqrt(area);
    net.nodes.resize(static_cast<std::size_t>(k));
    net.nodes[0] = {0.0, 0.0};
    SplitMix64 rng(seed);
    for (int i = 1; i < k; ++i) {
        net.nodes[i].x = rng.uniform01() * net.area_side;
        net.nodes[i].y = rng.uniform01() * net.area_side;
    }
    return net;
}

inline Network generate_dense(int k, double area, std::uint64_t seed) {
    return scatter_uniform(k, area, seed, NetworkClass::dense);
}

// Area rule A_k = a * k / (ln k)^b conforms to the dense model iff b > 1.
inline bool validate_dense_sequence(double a, double b) {
    if (!(a > 0.0))
        throw std::invalid_argument("validate_dense_sequence: a must be positive");
    return b > 1.0;
}

inline double dense_area(int k, double a, double b) {
    if (k < 3)
        throw std::invalid_argument("dense_area: rule needs k >= 3 so ln k > 1");
    const double lk = std::log(static_cast<double>(k));
    return a * static_cast<double>(k) / std::pow(lk, b);
}

inline Network generate_extended(int k, double lambda, std::uint64_t seed) {
    if (!(lambda > 0.0))
        throw std::invalid_argument("generate_extended: density must be positive");
    return scatter_uniform(k, static_cast<double>(k) / lambda, seed, NetworkClass::extended);
}

// One node per cell, confined to the centered window of side beta * s. Nodes
// are laid out row-major from the origin cell, so node 0 is the source in
// C(0,0). corner_adversarial pushes every node to the window corner farthest
// from the origin.
inline Network generate_regular(const RegularSpec& spec, std::uint64_t seed) {
    const int dim = static_cast<int>(std::round(std::sqrt(static_cast<double>(spec.k))));
    if (dim < 2 || dim * dim != spec.k)
        throw std::invalid_argument("generate_regular: k must be a square integer >= 4");
    if (!(spec.beta >= 0.0) || !(spec.beta < 1.0))
        throw std::invalid_argument("generate_regular: beta must lie in [0, 1)");
    if (!(spec.cell_side > 0.0))
        throw std::invalid_argument("generate_regular: cell side must be positive");

    Network net;
    net.cls = NetworkClass::regular;
    net.area_side = dim * spec.cell_side;
    net.nodes.reserve(static_cast<std::size_t>(spec.k));
    SplitMix64 rng(seed);
    const double s = spec.cell_side;
    const double half_window = 0.5 * spec.beta * s;
    for (int cy = 0; cy < dim; ++cy) {
        for (int cx = 0; cx < dim; ++cx) {
            const double ccx = (cx + 0.5) * s;
            const double ccy = (cy + 0.5) * s;
            Vec2 p;
            switch (spec.policy) {
            case PlacementPolicy::center:
                p = {ccx, ccy};
                break;
            case PlacementPolicy::uniform_in_window:
                p.x = ccx - half_window + rng.uniform01() * spec.beta * s;
                p.y = ccy - half_window + rng.uniform01() * spec.beta * s;
                break;
            case PlacementPolicy::corner_adversarial:
                p = {ccx + half_window, ccy + half_window};
                break;
            }
            net.nodes.push_back(p);
        }
    }
    return net;
}

inline CellGrid cell_grid(const Network& net, double s) {
    CellGrid grid;
    grid.cell_side = s;
    grid.grid_dim = detail::grid_dim_checked(net.area_side, s);
    grid.counts.assign(static_cast<std::size_t>(grid.grid_dim) * grid.grid_dim, 0);
    for (const Vec2& p : net.nodes) {
        const int cx = detail::cell_axis_index(p.x, s, grid.grid_dim);
        const int cy = detail::cell_axis_index(p.y, s, grid.grid_dim);
        ++grid.counts[static_cast<std::size_t>(cy) * grid.grid_dim + cx];
    }
    return grid;
}

inline WindowOccupancy window_occupancy(const Network& net, double s, double beta) {
    // beta = 1 is allowed here: the window then fills the whole cell
    if (!(beta >= 0.0) || beta > 1.0)
        throw std::invalid_argument("window_occupancy: beta must lie in [0, 1]");
    WindowOccupancy occ;
    occ.grid_dim = detail::grid_dim_checked(net.area_side, s);
    const std::size_t n_cells = static_cast<std::size_t>(occ.grid_dim) * occ.grid_dim;
    occ.in_window.assign(n_cells, 0);
    occ.out_window.assign(n_cells, 0);
    // closed window boundary; the tolerance absorbs rounding at exact corners
    const double tol = 1e-9 * s;
    const double lo = 0.5 * (1.0 - beta) * s - tol;
    const double hi = 0.5 * (1.0 + beta) * s + tol;
    for (const Vec2& p : net.nodes) {
        const int cx = detail::cell_axis_index(p.x, s, occ.grid_dim);
        const int cy = detail::cell_axis_index(p.y, s, occ.grid_dim);
        const double lx = p.x - cx * s;
        const double ly = p.y - cy * s;
        const bool inside = lx >= lo && lx <= hi && ly >= lo && ly <= hi;
        const std::size_t cell = static_cast<std::size_t>(cy) * occ.grid_dim + cx;
        if (inside)
            ++occ.in_window[cell];
        else
            ++occ.out_window[cell];
    }
    return occ;
}

inline std::string to_string(NetworkClass cls) {
    switch (cls) {
    case NetworkClass::dense: return "dense";
    case NetworkClass::extended: return "extended";
    case NetworkClass::regular: return "regular";
    }
    return "unknown";
}

inline NetworkClass network_class_from_string(const std::string& name) {
    if (name == "dense") return NetworkClass::dense;
    if (name == "extended") return NetworkClass::extended;
    if (name == "regular") return NetworkClass::regular;
    throw std::invalid_argument("unknown network class: " + name);
}

inline std::string to_string(PlacementPolicy p) {
    switch (p) {
    case PlacementPolicy::center: return "center";
    case PlacementPolicy::uniform_in_window: return "uniformInWindow";
    case PlacementPolicy::corner_adversarial: return "cornerAdversarial";
    }
    return "unknown";
}

inline PlacementPolicy placement_policy_from_string(const std::string& name) {
    if (name == "center") return PlacementPolicy::center;
    if (name == "uniformInWindow" || name == "uniform") return PlacementPolicy::uniform_in_window;
    if (name == "cornerAdversarial" || name == "corner") return PlacementPolicy::corner_adversarial;
    throw std::invalid_argument("unknown placement policy: " + name);
}

} // namespace ebmin
