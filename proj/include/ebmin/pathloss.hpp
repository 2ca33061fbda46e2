#pragma once

#include <cmath>
#include <stdexcept>

namespace ebmin {

// Expected-power-gain map between nodes: g(r) = r^-alpha beyond the cutoff
// r0, clamped at gbar in the near field, g(0) = gbar. Monotone nonincreasing
// and continuous at r0 because construction requires gbar >= r0^-alpha.
class PathLossModel {
public:
    PathLossModel(double alpha, double r0, double gbar)
        : alpha_(alpha), r0_(r0), gbar_(gbar), r0_sq_(r0 * r0) {
        if (!(alpha > 2.0))
            throw std::invalid_argument("PathLossModel: alpha must be strictly greater than 2");
        if (!(r0 > 0.0))
            throw std::invalid_argument("PathLossModel: r0 must be positive");
        if (!(gbar >= std::pow(r0, -alpha)))
            throw std::invalid_argument("PathLossModel: gbar must be at least r0^-alpha");
        if (alpha == 4.0)
            kind_ = Exponent::four;
        else if (alpha == 3.0)
            kind_ = Exponent::three;
        else
            kind_ = Exponent::generic;
    }

    double alpha() const { return alpha_; }
    double r0() const { return r0_; }
    double gbar() const { return gbar_; }

    double gain(double r) const { return gain_sq(r * r); }

    // same map evaluated from a squared distance (hot path in the simulators)
    double gain_sq(double r_sq) const {
        if (r_sq >= r0_sq_)
            return power_law(r_sq); // <= gbar by the construction invariant
        if (r_sq <= 0.0)
            return gbar_;
        return std::min(gbar_, power_law(r_sq));
    }

private:
    enum class Exponent { generic, three, four };

    double power_law(double r_sq) const {
        switch (kind_) {
        case Exponent::four: return 1.0 / (r_sq * r_sq);
        case Exponent::three: return 1.0 / (r_sq * std::sqrt(r_sq));
        default: return std::pow(r_sq, -0.5 * alpha_);
        }
    }

    double alpha_;
    double r0_;
    double gbar_;
    double r0_sq_;
    Exponent kind_;
};

} // namespace ebmin
