#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fmlp/matrix.hpp"

namespace fmlp {

struct network_shape {
    std::size_t inputs = 0;  // n
    std::size_t hidden = 0;  // m
};

// Harness default: m = ceil(3n/2).
std::size_t default_hidden_units(std::size_t inputs);

// Throws std::invalid_argument on zero-sized layers.
void validate_shape(const network_shape& shape);

// True when the hidden layer exceeds the 2n+1 sizing guideline; callers
// surface this as a warning, never an error.
bool shape_exceeds_guideline(const network_shape& shape);

// One-hidden-layer net with a single sigmoid output. dv_prev/dw_prev hold the
// previous step's full deltas for the momentum terms; biases carry none.
struct network_weights {
    matrix v;                     // n x m input->hidden
    std::vector<double> w;        // m hidden->output
    std::vector<double> b1;       // m hidden biases
    double b2 = 0.0;              // output bias
    matrix dv_prev;               // n x m
    std::vector<double> dw_prev;  // m

    std::size_t inputs() const { return v.rows(); }
    std::size_t hidden() const { return v.cols(); }
};

struct train_config {
    double alpha = 0.25;        // learning rate, (0, 1]
    double mu = 0.50;           // momentum factor, [0, 1)
    std::size_t epochs = 100;   // fixed budget, sole termination criterion
    std::uint64_t seed = 0;
    double init_scale = 0.5;    // uniform init half-width
};

struct train_trace {
    std::vector<double> mse_per_epoch;
    double min_mse = 0.0;        // +inf when no epochs ran
    double elapsed_seconds = 0.0;
    std::size_t epochs_run = 0;
    // Multiply-accumulates executed in the input<->hidden O(n*m) loop nests
    // (forward net-input accumulation plus hidden-weight delta computation);
    // the quantity the complexity scaling checks measure.
    std::uint64_t mac_count = 0;
};

// Training aborted because a value went non-finite.
struct divergence_error : std::runtime_error {
    divergence_error(const std::string& what, std::size_t epoch_index)
        : std::runtime_error(what), epoch(epoch_index) {}
    std::size_t epoch;
};

// All weights and biases drawn independently from uniform
// [-init_scale, +init_scale); delta buffers zeroed. Draw order is pinned
// (V row-major, W, b1, b2) so one (shape, seed, init_scale) triple yields
// bit-identical weights everywhere.
network_weights init_weights(const network_shape& shape, std::uint64_t seed,
                             double init_scale = 0.5);

// z_in_j = b1_j + sum_i x_i V_ij, z_j = sigmoid(z_in_j);
// y_in = b2 + sum_j z_j W_j, y = sigmoid(y_in).
// Returns hidden activations (needed by backprop) and the output.
std::pair<std::vector<double>, double> forward(const network_weights& weights,
                                               std::span<const double> x);

// Output only.
double predict(const network_weights& weights, std::span<const double> x);

// One online update for pattern x with forward results (z, y):
//   dW_j  = alpha*E*f'(y)*z_j + mu*dW_old_j        db2   = alpha*E*f'(y)
//   dV_ij = alpha*E*f'(y)*W_j*f'(z_j)*x_i + mu*dV_old_ij
//   db1_j = alpha*E*f'(y)*W_j*f'(z_j)
// with E = target - y and the pre-update W feeding the hidden-layer terms.
// New deltas become dW_old/dV_old. Returns E. mac, when non-null, accumulates
// the O(n*m) multiply-accumulate count.
double backprop_step(network_weights& weights, std::span<const double> x,
                     std::span<const double> z, double y, double target,
                     const train_config& cfg, std::uint64_t* mac = nullptr);

// Runs cfg.epochs full passes over the patterns in stored order, one
// forward + backprop_step per pattern; epoch MSE is the mean of the squared
// errors those steps return. Throws divergence_error (tagged with the epoch)
// if anything goes non-finite. Targets must lie in the open interval (0,1).
train_trace train(network_weights& weights, const matrix& x,
                  std::span<const double> targets, const train_config& cfg);

} // namespace fmlp
