#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>

#include "ebmin/flood.hpp"
#include "ebmin/pathloss.hpp"
#include "ebmin/topology.hpp"

namespace ebmin {

// Riemann zeta for real s > 1: partial sum plus the integral bracket on the
// tail sum_{n>=N} n^-s, which lies in [N^(1-s), (N-1)^(1-s)] / (s-1). N is
// grown until the bracket is narrower than 1e-10 and the midpoint is returned,
// so the absolute error stays below 1e-10.
inline double riemann_zeta(double s) {
    if (!(s > 1.0 + 1e-6))
        throw std::domain_error("riemann_zeta: argument must exceed 1");
    const double target = 1e-10;
    auto bracket_width = [s](double n) {
        return (std::pow(n - 1.0, 1.0 - s) - std::pow(n, 1.0 - s)) / (s - 1.0);
    };
    double n_tail = 4.0;
    while (bracket_width(n_tail) >= target) {
        n_tail *= 2.0;
        // the partial sum needs ~1e10^(1/s) terms; refuse where that explodes
        if (n_tail > 2.7e8)
            throw std::domain_error("riemann_zeta: cannot reach 1e-10 for s this close to 1");
    }
    double partial = 0.0;
    for (double n = n_tail - 1.0; n >= 1.0; n -= 1.0) // ascending magnitude
        partial += std::pow(n, -s);
    const double tail_lo = std::pow(n_tail, 1.0 - s) / (s - 1.0);
    const double tail_hi = std::pow(n_tail - 1.0, 1.0 - s) / (s - 1.0);
    return partial + 0.5 * (tail_lo + tail_hi);
}

enum class DensityRegime { not_applicable, low, high };

// Scaling constants of the class theorems: c1 multiplies the converse unit,
// c2 the achievability unit.
struct TheoremConstants {
    double c1 = 0.0;
    double c2 = 0.0;
    DensityRegime regime = DensityRegime::not_applicable;
};

// Theorem-prescribed flood parameterization for one network instance.
struct SchemeConfig {
    NetworkClass cls = NetworkClass::dense;
    std::optional<int> case_id;     // regular networks only: 1, 2 or 3
    FloodParams params;
    double cell_side = 0.0;         // grid side actually used by the scheme
    std::optional<int> step_radius; // regular case 3: L
};

// Largest grid side that is <= target and divides the area side exactly, so
// cell statistics stay on whole cells. Shrinking the cells only raises the
// per-hop gain, which keeps the prescribed energies sufficient.
inline double divisor_cell_side(double area_side, double target) {
    if (!(area_side > 0.0) || !(target > 0.0))
        throw std::invalid_argument("divisor_cell_side: sides must be positive");
    double cells = std::ceil(area_side / target - 1e-9);
    if (cells < 1.0) cells = 1.0;
    return area_side / cells;
}

// Dense prescription: cells of side r0/sqrt(8), source energy ln2 * r0^alpha,
// relay energy (1+eps2) * 8 * A_k * r0^(alpha-2) * ln2 / (k-1), slot budget
// ceil(sqrt(8 A_k) / r0) = the cell-path diagonal bound.
inline SchemeConfig dense_params(int k, double area, const PathLossModel& model, double eps1,
                                 double eps2) {
    if (k < 2)
        throw std::invalid_argument("dense_params: k must be at least 2");
    if (!(area > 0.0) || model.r0() * model.r0() > 8.0 * area)
        throw std::invalid_argument("dense_params: model requires r0^2 <= 8 * area");
    if (!(eps1 > 0.0) || !(eps2 > 0.0))
        throw std::invalid_argument("dense_params: epsilons must be positive");

    const double alpha = model.alpha();
    const double r0 = model.r0();
    const double side = std::sqrt(area);
    const double s_used = divisor_cell_side(side, r0 / std::sqrt(8.0));
    const int path_cells = static_cast<int>(std::llround(side / s_used));
    const int t_formula = static_cast<int>(std::ceil(std::sqrt(8.0 * area) / r0 - 1e-12));

    SchemeConfig cfg;
    cfg.cls = NetworkClass::dense;
    cfg.cell_side = s_used;
    cfg.params.eb1 = std::numbers::ln2 * std::pow(r0, alpha) + eps1;
    cfg.params.eb2 =
        (1.0 + eps2) * 8.0 * area * std::pow(r0, alpha - 2.0) * std::numbers::ln2 / (k - 1);
    cfg.params.max_slots = std::max(t_formula, path_cells);
    return cfg;
}

inline TheoremConstants dense_constants(const PathLossModel& model) {
    const double alpha = model.alpha();
    const double r0 = model.r0();
    TheoremConstants c;
    c.c1 = 2.0 * std::numbers::ln2 /
           (49.0 * model.gbar() * r0 * r0 +
            std::pow(2.0, alpha + 2.0) / (alpha - 2.0) * 3.0 / std::pow(r0, alpha - 2.0));
    c.c2 = 24.0 * std::pow(r0, alpha - 2.0) * std::numbers::ln2;
    c.regime = DensityRegime::not_applicable;
    return c;
}

namespace detail {

// raw extended cell side before rounding to a divisor of the area side
inline double extended_raw_cell_side(int k, double lambda, double delta) {
    const double area = static_cast<double>(k) / lambda;
    const double la = std::log(area);
    if (!(la > 0.0)) return 0.0; // area <= 1: the window formula is vacuous
    return std::sqrt((2.0 + delta) * la / lambda);
}

inline double extended_used_cell_side(int k, double lambda, double delta) {
    const double raw = extended_raw_cell_side(k, lambda, delta);
    if (!(raw > 0.0)) return 0.0;
    return divisor_cell_side(std::sqrt(static_cast<double>(k) / lambda), raw);
}

} // namespace detail

// Extended prescription: cells of side s_k with s_k^2 = (2+delta) ln(A_k) /
// lambda (rounded down to divide sqrt(A_k)), both energies ln2 / g(sqrt(8)
// s_k) + eps/k, slot budget = cells per side. Fails for k too small for
// sqrt(8) s_k to clear the near field; the error names the smallest usable k.
inline SchemeConfig extended_params(int k, double lambda, const PathLossModel& model, double eps,
                                    double delta) {
    if (k < 2)
        throw std::invalid_argument("extended_params: k must be at least 2");
    if (!(lambda > 0.0) || !(eps > 0.0) || !(delta > 0.0))
        throw std::invalid_argument("extended_params: lambda, eps and delta must be positive");

    const double s_used = detail::extended_used_cell_side(k, lambda, delta);
    if (!(std::sqrt(8.0) * s_used >= model.r0())) {
        int k_min = -1;
        for (int trial = std::max(2, k); trial <= (1 << 24); ++trial) {
            if (std::sqrt(8.0) * detail::extended_used_cell_side(trial, lambda, delta) >=
                model.r0()) {
                k_min = trial;
                break;
            }
        }
        throw std::invalid_argument(
            "extended_params: sqrt(8)*s_k below r0 at k=" + std::to_string(k) +
            (k_min > 0 ? "; smallest usable k is " + std::to_string(k_min)
                       : "; no usable k found up to 2^24"));
    }

    const double side = std::sqrt(static_cast<double>(k) / lambda);
    SchemeConfig cfg;
    cfg.cls = NetworkClass::extended;
    cfg.cell_side = s_used;
    const double eb = std::numbers::ln2 / model.gain(std::sqrt(8.0) * s_used) + eps / k;
    cfg.params.eb1 = eb;
    cfg.params.eb2 = eb;
    cfg.params.max_slots = static_cast<int>(std::llround(side / s_used));
    return cfg;
}

inline TheoremConstants extended_constants(const PathLossModel& model, double lambda) {
    if (!(lambda > 0.0))
        throw std::invalid_argument("extended_constants: lambda must be positive");
    const double alpha = model.alpha();
    const double r0 = model.r0();
    TheoremConstants c;
    if (lambda < 1.0 / (9.0 * r0 * r0)) {
        c.regime = DensityRegime::low;
        c.c1 = std::numbers::ln2 * std::pow(lambda, -alpha / 2.0) /
               (16.0 * std::pow(3.0, alpha + 2.0) * std::numbers::e * riemann_zeta(alpha - 1.0));
    } else {
        c.regime = DensityRegime::high;
        c.c1 = std::numbers::ln2 /
               (32.0 * 27.0 *
                (model.gbar() * r0 * r0 +
                 1.0 / ((alpha - 2.0) * std::pow(6.0, alpha) * std::pow(r0, alpha - 2.0))) *
                lambda);
    }
    c.c2 = 3.0 * std::pow(2.0, 2.0 * alpha - 1.0) * std::numbers::ln2 * std::pow(lambda, -alpha / 2.0);
    return c;
}

// Regular prescription, one of three cases:
//   case 2 if (k-1) s^2 < r0^2: one-shot FLOOD(ln2 / g(2 r0), 0), T = 1
//   case 1 if r0 < (1-beta) s:  FLOOD(ln2 / g(sqrt(8) s), same), T = sqrt(k)
//   case 3 otherwise: L = floor(r0 / ((1-beta) s)) rings feed each new cell,
//     eb1 = ln2 / g(2 sqrt(2) s L), eb2 = ln2 / sum_{l=1..L} l g(2 sqrt(2) s l),
//     T = sqrt(k) - L + 1 (at least 1; the source alone covers L steps).
// When cases 1 and 2 overlap the cheaper one-shot case 2 wins.
inline SchemeConfig regular_params(int k, double s, double beta, const PathLossModel& model,
                                   double eps1) {
    const int dim = static_cast<int>(std::round(std::sqrt(static_cast<double>(k))));
    if (dim < 2 || dim * dim != k)
        throw std::invalid_argument("regular_params: k must be a square integer >= 4");
    if (!(beta >= 0.0) || !(beta < 1.0))
        throw std::invalid_argument("regular_params: beta must lie in [0, 1)");
    if (!(s > 0.0) || !(eps1 > 0.0))
        throw std::invalid_argument("regular_params: s and eps1 must be positive");

    const double r0 = model.r0();
    SchemeConfig cfg;
    cfg.cls = NetworkClass::regular;
    cfg.cell_side = s;

    if ((k - 1) * s * s < r0 * r0) {
        cfg.case_id = 2;
        cfg.params.eb1 = std::numbers::ln2 / model.gain(2.0 * r0) + eps1;
        cfg.params.eb2 = 0.0;
        cfg.params.max_slots = 1;
        return cfg;
    }
    if (r0 < (1.0 - beta) * s) {
        cfg.case_id = 1;
        const double eb = std::numbers::ln2 / model.gain(std::sqrt(8.0) * s) + eps1;
        cfg.params.eb1 = eb;
        cfg.params.eb2 = eb;
        cfg.params.max_slots = dim;
        return cfg;
    }
    cfg.case_id = 3;
    const int ring_radius = static_cast<int>(std::floor(r0 / ((1.0 - beta) * s) + 1e-12));
    cfg.step_radius = ring_radius;
    double ring_sum = 0.0;
    for (int l = 1; l <= ring_radius; ++l)
        ring_sum += l * model.gain(2.0 * std::sqrt(2.0) * s * l);
    cfg.params.eb1 = std::numbers::ln2 / model.gain(2.0 * std::sqrt(2.0) * s * ring_radius) + eps1;
    cfg.params.eb2 = std::numbers::ln2 / ring_sum + eps1;
    cfg.params.max_slots = std::max(1, dim - ring_radius + 1);
    return cfg;
}

// Theorem bound on flood-over-converse for regular networks; independent of k
// and s. Three-term max mirroring the three scheme cases.
inline double regular_ratio_bound(const PathLossModel& model, double beta) {
    if (!(beta >= 0.0) || !(beta < 1.0))
        throw std::invalid_argument("regular_ratio_bound: beta must lie in [0, 1)");
    const double alpha = model.alpha();
    const double r0 = model.r0();
    const double one_minus = 1.0 - beta;
    const double t1 =
        std::pow(2.0, 1.5 * alpha + 4.0) * riemann_zeta(alpha - 1.0) / std::pow(one_minus, alpha);
    const double t2 = std::pow(2.0 * r0, alpha) * model.gbar();
    const double t3 = std::pow(2.0, 1.5 * alpha + 3.0) * std::pow(r0, alpha) /
                      std::pow(one_minus, alpha + 2.0) *
                      (model.gbar() + std::pow(2.0, alpha - 2.0) / ((alpha - 2.0) * std::pow(r0, alpha))) *
                      (1.0 + 4.0 * one_minus * one_minus);
    return std::max(t1, std::max(t2, t3));
}

} // namespace ebmin
