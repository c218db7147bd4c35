#pragma once

namespace fmlp {

// Extremes of the sloped portion of the S-shaped (spline) membership curve.
// a < b strictly; a degenerate interval has no defined slope and is rejected.
struct s_membership_params {
    s_membership_params(double a, double b);

    double a;
    double b;

    double midpoint() const { return 0.5 * (a + b); }
};

// Piecewise-quadratic S-curve: 0 below a, 2*((x-a)/(b-a))^2 on the rising
// half, 1 - 2*((x-b)/(b-a))^2 on the falling-curvature half, 1 above b.
// Continuous, nondecreasing, exactly 0.5 at the midpoint. Throws on
// non-finite x.
double s_membership(double x, const s_membership_params& p);

} // namespace fmlp
