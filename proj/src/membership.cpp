#include "fmlp/membership.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fmlp {

s_membership_params::s_membership_params(double a_, double b_) : a(a_), b(b_) {
    if (!(std::isfinite(a) && std::isfinite(b))) {
        throw std::invalid_argument("s_membership_params: extremes must be finite");
    }
    if (!(a < b)) {
        throw std::invalid_argument("s_membership_params: need a < b, got a=" +
                                    std::to_string(a) + " b=" + std::to_string(b));
    }
}

double s_membership(double x, const s_membership_params& p) {
    if (!std::isfinite(x)) {
        throw std::invalid_argument("s_membership: non-finite input");
    }
    if (x <= p.a) {
        return 0.0;
    }
    if (x >= p.b) {
        return 1.0;
    }
    const double mid = p.midpoint();
    const double width = p.b - p.a;
    if (x < mid) {
        const double t = (x - p.a) / width;
        const double v = 2.0 * t * t;
        // One rounding in mid can land the quadratic a hair past 0.5 just
        // below the midpoint; clamping keeps the curve nondecreasing.
        return v < 0.5 ? v : 0.5;
    }
    if (x > mid) {
        const double t = (x - p.b) / width;
        const double v = 1.0 - 2.0 * t * t;
        return v > 0.5 ? v : 0.5;
    }
    return 0.5;
}

} // namespace fmlp
