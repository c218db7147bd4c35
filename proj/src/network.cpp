#include "fmlp/network.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <string>

#include "fmlp/activation.hpp"
#include "fmlp/rng.hpp"

namespace fmlp {

std::size_t default_hidden_units(std::size_t inputs) {
    return (3 * inputs + 1) / 2;
}

void validate_shape(const network_shape& shape) {
    if (shape.inputs == 0 || shape.hidden == 0) {
        throw std::invalid_argument("network_shape: layer sizes must be positive");
    }
}

bool shape_exceeds_guideline(const network_shape& shape) {
    return shape.hidden > 2 * shape.inputs + 1;
}

network_weights init_weights(const network_shape& shape, std::uint64_t seed,
                             double init_scale) {
    validate_shape(shape);
    if (!(init_scale > 0.0)) {
        throw std::invalid_argument("init_weights: init_scale must be positive");
    }
    const std::size_t n = shape.inputs;
    const std::size_t m = shape.hidden;

    network_weights weights;
    weights.v = matrix(n, m);
    weights.w.resize(m);
    weights.b1.resize(m);
    weights.dv_prev = matrix(n, m, 0.0);
    weights.dw_prev.assign(m, 0.0);

    std::mt19937_64 gen(seed);
    for (std::size_t i = 0; i < n; ++i) {
        double* row = weights.v.row(i);
        for (std::size_t j = 0; j < m; ++j) {
            row[j] = uniform_symmetric(gen, init_scale);
        }
    }
    for (std::size_t j = 0; j < m; ++j) {
        weights.w[j] = uniform_symmetric(gen, init_scale);
    }
    for (std::size_t j = 0; j < m; ++j) {
        weights.b1[j] = uniform_symmetric(gen, init_scale);
    }
    weights.b2 = uniform_symmetric(gen, init_scale);
    return weights;
}

namespace {

// Shared by forward() and train(); writes hidden activations into z and
// returns the output. Counts the n*m net-input multiply-accumulates.
double forward_into(const network_weights& weights, const double* x, double* z,
                    std::uint64_t* mac) {
    const std::size_t n = weights.inputs();
    const std::size_t m = weights.hidden();

    for (std::size_t j = 0; j < m; ++j) {
        z[j] = weights.b1[j];
    }
    for (std::size_t i = 0; i < n; ++i) {
        const double xi = x[i];
        const double* vrow = weights.v.row(i);
        for (std::size_t j = 0; j < m; ++j) {
            z[j] += xi * vrow[j];
        }
    }
    double y_in = weights.b2;
    for (std::size_t j = 0; j < m; ++j) {
        z[j] = sigmoid(z[j]);
        y_in += z[j] * weights.w[j];
    }
    if (mac != nullptr) {
        *mac += static_cast<std::uint64_t>(n) * m;
    }
    return sigmoid(y_in);
}

// Update body with caller-provided scratch for the hidden-layer gradient
// terms, so train() does not allocate per pattern.
double step_into(network_weights& weights, const double* x, const double* z,
                 double y, double target, const train_config& cfg, double* h,
                 std::uint64_t* mac) {
    const std::size_t n = weights.inputs();
    const std::size_t m = weights.hidden();

    const double error = target - y;
    const double g = cfg.alpha * error * sigmoid_derivative_from_activation(y);

    // Hidden-layer gradient terms read the pre-update W: both delta sets are
    // fully determined before any weight moves.
    for (std::size_t j = 0; j < m; ++j) {
        h[j] = g * weights.w[j] * sigmoid_derivative_from_activation(z[j]);
    }
    for (std::size_t j = 0; j < m; ++j) {
        const double dw = g * z[j] + cfg.mu * weights.dw_prev[j];
        weights.w[j] += dw;
        weights.dw_prev[j] = dw;
    }
    weights.b2 += g;
    for (std::size_t i = 0; i < n; ++i) {
        const double xi = x[i];
        double* vrow = weights.v.row(i);
        double* drow = weights.dv_prev.row(i);
        for (std::size_t j = 0; j < m; ++j) {
            const double dv = h[j] * xi + cfg.mu * drow[j];
            vrow[j] += dv;
            drow[j] = dv;
        }
    }
    for (std::size_t j = 0; j < m; ++j) {
        weights.b1[j] += h[j];
    }
    if (mac != nullptr) {
        *mac += 2 * static_cast<std::uint64_t>(n) * m;
    }
    return error;
}

bool all_finite(const network_weights& weights) {
    for (double v : weights.v.data()) {
        if (!std::isfinite(v)) return false;
    }
    for (double v : weights.w) {
        if (!std::isfinite(v)) return false;
    }
    for (double v : weights.b1) {
        if (!std::isfinite(v)) return false;
    }
    return std::isfinite(weights.b2);
}

} // namespace

std::pair<std::vector<double>, double> forward(const network_weights& weights,
                                               std::span<const double> x) {
    if (x.size() != weights.inputs()) {
        throw std::invalid_argument("forward: input has " + std::to_string(x.size()) +
                                    " components, network expects " +
                                    std::to_string(weights.inputs()));
    }
    std::vector<double> z(weights.hidden());
    const double y = forward_into(weights, x.data(), z.data(), nullptr);
    if (!std::isfinite(y)) {
        throw divergence_error("forward: non-finite output", 0);
    }
    return {std::move(z), y};
}

double predict(const network_weights& weights, std::span<const double> x) {
    return forward(weights, x).second;
}

double backprop_step(network_weights& weights, std::span<const double> x,
                     std::span<const double> z, double y, double target,
                     const train_config& cfg, std::uint64_t* mac) {
    if (x.size() != weights.inputs() || z.size() != weights.hidden()) {
        throw std::invalid_argument("backprop_step: dimension mismatch");
    }
    std::vector<double> h(weights.hidden());
    const double error = step_into(weights, x.data(), z.data(), y, target, cfg,
                                   h.data(), mac);
    if (!std::isfinite(error)) {
        throw divergence_error("backprop_step: non-finite error", 0);
    }
    return error;
}

train_trace train(network_weights& weights, const matrix& x,
                  std::span<const double> targets, const train_config& cfg) {
    const std::size_t n = weights.inputs();
    const std::size_t m = weights.hidden();
    const std::size_t patterns = x.rows();
    if (x.cols() != n) {
        throw std::invalid_argument("train: patterns have " + std::to_string(x.cols()) +
                                    " attributes, network expects " + std::to_string(n));
    }
    if (targets.size() != patterns) {
        throw std::invalid_argument("train: pattern/target count mismatch");
    }
    for (std::size_t p = 0; p < patterns; ++p) {
        if (!(targets[p] > 0.0 && targets[p] < 1.0)) {
            throw std::invalid_argument("train: target " + std::to_string(targets[p]) +
                                        " at pattern " + std::to_string(p) +
                                        " outside (0,1)");
        }
    }

    train_trace trace;
    trace.mse_per_epoch.reserve(cfg.epochs);
    std::vector<double> z(m);
    std::vector<double> h(m);

    const auto start = std::chrono::steady_clock::now();
    for (std::size_t epoch = 0; epoch < cfg.epochs; ++epoch) {
        if (!all_finite(weights)) {
            throw divergence_error("train: non-finite weight entering epoch " +
                                   std::to_string(epoch), epoch);
        }
        double squared_error_sum = 0.0;
        for (std::size_t p = 0; p < patterns; ++p) {
            const double* xp = x.row(p);
            const double y = forward_into(weights, xp, z.data(), &trace.mac_count);
            const double error = step_into(weights, xp, z.data(), y, targets[p],
                                           cfg, h.data(), &trace.mac_count);
            if (!std::isfinite(error)) {
                throw divergence_error("train: non-finite error at epoch " +
                                       std::to_string(epoch) + ", pattern " +
                                       std::to_string(p), epoch);
            }
            squared_error_sum += error * error;
        }
        const double mse = patterns > 0 ? squared_error_sum / static_cast<double>(patterns)
                                        : 0.0;
        if (!std::isfinite(mse)) {
            throw divergence_error("train: non-finite epoch MSE at epoch " +
                                   std::to_string(epoch), epoch);
        }
        trace.mse_per_epoch.push_back(mse);
    }
    const auto stop = std::chrono::steady_clock::now();

    trace.elapsed_seconds = std::chrono::duration<double>(stop - start).count();
    trace.epochs_run = trace.mse_per_epoch.size();
    trace.min_mse = std::numeric_limits<double>::infinity();
    for (double mse : trace.mse_per_epoch) {
        if (mse < trace.min_mse) {
            trace.min_mse = mse;
        }
    }
    return trace;
}

} // namespace fmlp
