#pragma once

#include <cmath>

namespace fmlp {

// Binary sigmoid 1/(1+exp(-x)). The branch keeps exp's argument nonpositive
// so large |x| saturates to 0/1 instead of overflowing.
inline double sigmoid(double x) {
    if (x >= 0.0) {
        return 1.0 / (1.0 + std::exp(-x));
    }
    const double e = std::exp(x);
    return e / (1.0 + e);
}

// Derivative of the sigmoid expressed through the already-computed activation
// f = sigmoid(x): f' = f * (1 - f). Peaks at 0.25 when f = 0.5.
inline double sigmoid_derivative_from_activation(double f) {
    return f * (1.0 - f);
}

} // namespace fmlp
