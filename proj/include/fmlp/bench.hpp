#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fmlp/dataset.hpp"

namespace fmlp {

inline const std::vector<double>& default_alphas() {
    static const std::vector<double> alphas = {0.05, 0.10, 0.25, 0.40,
                                               0.55, 0.70, 0.85, 0.99};
    return alphas;
}

struct sweep_config {
    std::vector<double> alphas = default_alphas();
    double mu = 0.50;
    std::size_t epochs = 100;
    std::size_t repeats = 5;
    std::uint64_t base_seed = 0;
    std::optional<std::size_t> hidden_override;
    std::size_t workers = 1;
};

enum class model_kind { mlp, fuzzy };

std::string_view model_name(model_kind kind); // "mlp" / "fuzzy"

// One learning-rate row of a paired sweep. min-MSE and time columns are means
// over repeats; trajectories are per-epoch means over repeats.
struct sweep_row {
    double alpha = 0.0;
    double min_mse_mlp = 0.0;
    double min_mse_fuzzy = 0.0;
    double gain = 0.0;
    double time_mlp_s = 0.0;
    double time_fuzzy_s = 0.0;
    std::vector<double> trajectory_mlp;
    std::vector<double> trajectory_fuzzy;
};

struct sweep_result {
    std::string dataset;
    std::size_t hidden_units = 0;
    std::size_t epochs = 0;
    std::vector<sweep_row> rows;
};

// Relative reduction of the variant's minimum MSE against the baseline:
// (min_mse_mlp - min_mse_fuzzy) / min_mse_mlp. Requires min_mse_mlp > 0 and
// min_mse_fuzzy >= 0; negative when the variant is worse.
double convergence_gain(double min_mse_mlp, double min_mse_fuzzy);

// Deterministic per-run seed from the run coordinates; any component change
// yields an unrelated seed.
std::uint64_t derive_run_seed(std::uint64_t base_seed, std::string_view dataset,
                              std::size_t alpha_index, std::size_t repeat,
                              model_kind kind);

// Trains one plain-input and one fuzzified-input network per (alpha, repeat),
// hidden = ceil(3n/2) unless overridden, and aggregates rows per alpha.
// Membership fitting happens once, outside the timed sections. Training
// failures are rethrown tagged with (alpha, repeat, model). workers > 1 runs
// the independent (alpha, repeat, model) tasks on a thread pool; outputs are
// identical to the serial order.
sweep_result run_sweep(const dataset& ds, const sweep_config& cfg);

// Per-alpha arithmetic means across datasets (gain and both time columns).
// Every result must cover the same alpha grid.
struct summary_row {
    double alpha = 0.0;
    double mean_gain = 0.0;
    double mean_time_mlp_s = 0.0;
    double mean_time_fuzzy_s = 0.0;
};
std::vector<summary_row> summarize(const std::vector<sweep_result>& results);

// Writes results_<dataset>.csv (one row per alpha: alpha, min_mse_mlp,
// min_mse_fuzzy, gain, time_mlp_s, time_fuzzy_s) and
// trajectory_<dataset>_<model>.csv (epoch index plus one MSE column per
// alpha). All reals printed with 5 decimals.
void emit_reports(const sweep_result& result, const std::filesystem::path& out_dir);

// Writes summary.csv (alpha, mean_gain, mean_time_mlp_s, mean_time_fuzzy_s).
void emit_summary(const std::vector<summary_row>& summary,
                  const std::filesystem::path& out_dir);

// Reads a results_<dataset>.csv back; dataset name taken from the filename.
sweep_result read_results_csv(const std::filesystem::path& path);

} // namespace fmlp
