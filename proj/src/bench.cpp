#include "fmlp/bench.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "fmlp/fuzzifier.hpp"
#include "fmlp/network.hpp"
#include "fmlp/rng.hpp"

namespace fmlp {

std::string_view model_name(model_kind kind) {
    return kind == model_kind::mlp ? "mlp" : "fuzzy";
}

double convergence_gain(double min_mse_mlp, double min_mse_fuzzy) {
    if (!(min_mse_mlp > 0.0)) {
        throw std::invalid_argument("convergence_gain: baseline min MSE must be positive");
    }
    if (!(min_mse_fuzzy >= 0.0)) {
        throw std::invalid_argument("convergence_gain: variant min MSE must be nonnegative");
    }
    return (min_mse_mlp - min_mse_fuzzy) / min_mse_mlp;
}

std::uint64_t derive_run_seed(std::uint64_t base_seed, std::string_view dataset,
                              std::size_t alpha_index, std::size_t repeat,
                              model_kind kind) {
    std::uint64_t s = splitmix64(base_seed);
    s = splitmix64(s ^ fnv1a64(dataset));
    s = splitmix64(s ^ static_cast<std::uint64_t>(alpha_index));
    s = splitmix64(s ^ static_cast<std::uint64_t>(repeat));
    s = splitmix64(s ^ static_cast<std::uint64_t>(kind == model_kind::fuzzy ? 1 : 0));
    return s;
}

namespace {

struct run_task {
    std::size_t alpha_index = 0;
    std::size_t repeat = 0;
    model_kind kind = model_kind::mlp;
};

std::string format_real(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.5f", value);
    return buf;
}

} // namespace

sweep_result run_sweep(const dataset& ds, const sweep_config& cfg) {
    if (cfg.alphas.empty()) {
        throw std::invalid_argument("run_sweep: empty alpha list");
    }
    if (cfg.repeats == 0) {
        throw std::invalid_argument("run_sweep: repeats must be positive");
    }
    const std::size_t hidden =
        cfg.hidden_override ? *cfg.hidden_override : default_hidden_units(ds.n);
    const network_shape shape{ds.n, hidden};
    validate_shape(shape);

    // Fitting and fuzzification happen once, outside any timed region; the
    // two models then differ only in which matrix feeds train().
    const fuzzifier_model membership = fit_fuzzifier(ds.x);
    const matrix fuzzified = fuzzify_matrix(membership, ds.x);

    std::vector<run_task> tasks;
    tasks.reserve(cfg.alphas.size() * cfg.repeats * 2);
    for (std::size_t ai = 0; ai < cfg.alphas.size(); ++ai) {
        for (std::size_t r = 0; r < cfg.repeats; ++r) {
            tasks.push_back({ai, r, model_kind::mlp});
            tasks.push_back({ai, r, model_kind::fuzzy});
        }
    }
    std::vector<train_trace> traces(tasks.size());

    auto run_one = [&](const run_task& task) {
        train_config tc;
        tc.alpha = cfg.alphas[task.alpha_index];
        tc.mu = cfg.mu;
        tc.epochs = cfg.epochs;
        tc.seed = derive_run_seed(cfg.base_seed, ds.descriptor.name, task.alpha_index,
                                  task.repeat, task.kind);
        network_weights weights = init_weights(shape, tc.seed);
        const matrix& inputs = task.kind == model_kind::mlp ? ds.x : fuzzified;
        try {
            return train(weights, inputs, ds.t, tc);
        } catch (const divergence_error& e) {
            std::ostringstream msg;
            msg << "training diverged (alpha=" << tc.alpha << ", repeat=" << task.repeat
                << ", model=" << model_name(task.kind) << "): " << e.what();
            throw std::runtime_error(msg.str());
        }
    };

    if (cfg.workers <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) {
            traces[i] = run_one(tasks[i]);
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        auto worker = [&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= tasks.size()) {
                    return;
                }
                try {
                    traces[i] = run_one(tasks[i]);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) {
                        failure = std::current_exception();
                    }
                }
            }
        };
        const std::size_t pool = std::min(cfg.workers, tasks.size());
        std::vector<std::thread> threads;
        threads.reserve(pool);
        for (std::size_t i = 0; i < pool; ++i) {
            threads.emplace_back(worker);
        }
        for (auto& t : threads) {
            t.join();
        }
        if (failure) {
            std::rethrow_exception(failure);
        }
    }

    sweep_result result;
    result.dataset = ds.descriptor.name;
    result.hidden_units = hidden;
    result.epochs = cfg.epochs;
    result.rows.resize(cfg.alphas.size());
    for (std::size_t ai = 0; ai < cfg.alphas.size(); ++ai) {
        sweep_row& row = result.rows[ai];
        row.alpha = cfg.alphas[ai];
        row.trajectory_mlp.assign(cfg.epochs, 0.0);
        row.trajectory_fuzzy.assign(cfg.epochs, 0.0);
    }
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        const run_task& task = tasks[i];
        const train_trace& trace = traces[i];
        sweep_row& row = result.rows[task.alpha_index];
        const double weight = 1.0 / static_cast<double>(cfg.repeats);
        auto& trajectory =
            task.kind == model_kind::mlp ? row.trajectory_mlp : row.trajectory_fuzzy;
        for (std::size_t e = 0; e < trace.mse_per_epoch.size(); ++e) {
            trajectory[e] += trace.mse_per_epoch[e] * weight;
        }
        if (task.kind == model_kind::mlp) {
            row.min_mse_mlp += trace.min_mse * weight;
            row.time_mlp_s += trace.elapsed_seconds * weight;
        } else {
            row.min_mse_fuzzy += trace.min_mse * weight;
            row.time_fuzzy_s += trace.elapsed_seconds * weight;
        }
    }
    for (sweep_row& row : result.rows) {
        row.gain = convergence_gain(row.min_mse_mlp, row.min_mse_fuzzy);
    }
    return result;
}

std::vector<summary_row> summarize(const std::vector<sweep_result>& results) {
    if (results.empty()) {
        throw std::invalid_argument("summarize: no results");
    }
    const std::vector<sweep_row>& reference = results.front().rows;
    std::vector<summary_row> summary(reference.size());
    for (std::size_t i = 0; i < reference.size(); ++i) {
        summary[i].alpha = reference[i].alpha;
    }
    for (const sweep_result& result : results) {
        if (result.rows.size() != reference.size()) {
            throw std::invalid_argument("summarize: result for '" + result.dataset +
                                        "' covers a different alpha grid");
        }
        for (std::size_t i = 0; i < reference.size(); ++i) {
            if (result.rows[i].alpha != reference[i].alpha) {
                throw std::invalid_argument("summarize: alpha grids differ at row " +
                                            std::to_string(i));
            }
            summary[i].mean_gain += result.rows[i].gain;
            summary[i].mean_time_mlp_s += result.rows[i].time_mlp_s;
            summary[i].mean_time_fuzzy_s += result.rows[i].time_fuzzy_s;
        }
    }
    const double count = static_cast<double>(results.size());
    for (summary_row& row : summary) {
        row.mean_gain /= count;
        row.mean_time_mlp_s /= count;
        row.mean_time_fuzzy_s /= count;
    }
    return summary;
}

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    return out;
}

void write_trajectories(const sweep_result& result, model_kind kind,
                        const std::filesystem::path& path) {
    std::ofstream out = open_out(path);
    out << "epoch";
    for (const sweep_row& row : result.rows) {
        out << ",alpha_" << format_real(row.alpha);
    }
    out << "\n";
    for (std::size_t e = 0; e < result.epochs; ++e) {
        out << e;
        for (const sweep_row& row : result.rows) {
            const auto& trajectory =
                kind == model_kind::mlp ? row.trajectory_mlp : row.trajectory_fuzzy;
            out << "," << format_real(trajectory[e]);
        }
        out << "\n";
    }
    if (!out.good()) {
        throw std::runtime_error("short write to " + path.string());
    }
}

} // namespace

void emit_reports(const sweep_result& result, const std::filesystem::path& out_dir) {
    std::filesystem::create_directories(out_dir);
    const auto results_path = out_dir / ("results_" + result.dataset + ".csv");
    {
        std::ofstream out = open_out(results_path);
        out << "alpha,min_mse_mlp,min_mse_fuzzy,gain,time_mlp_s,time_fuzzy_s\n";
        for (const sweep_row& row : result.rows) {
            out << format_real(row.alpha) << "," << format_real(row.min_mse_mlp) << ","
                << format_real(row.min_mse_fuzzy) << "," << format_real(row.gain) << ","
                << format_real(row.time_mlp_s) << "," << format_real(row.time_fuzzy_s)
                << "\n";
        }
        if (!out.good()) {
            throw std::runtime_error("short write to " + results_path.string());
        }
    }
    write_trajectories(result, model_kind::mlp,
                       out_dir / ("trajectory_" + result.dataset + "_mlp.csv"));
    write_trajectories(result, model_kind::fuzzy,
                       out_dir / ("trajectory_" + result.dataset + "_fuzzy.csv"));
}

void emit_summary(const std::vector<summary_row>& summary,
                  const std::filesystem::path& out_dir) {
    std::filesystem::create_directories(out_dir);
    const auto path = out_dir / "summary.csv";
    std::ofstream out = open_out(path);
    out << "alpha,mean_gain,mean_time_mlp_s,mean_time_fuzzy_s\n";
    for (const summary_row& row : summary) {
        out << format_real(row.alpha) << "," << format_real(row.mean_gain) << ","
            << format_real(row.mean_time_mlp_s) << "," << format_real(row.mean_time_fuzzy_s)
            << "\n";
    }
    if (!out.good()) {
        throw std::runtime_error("short write to " + path.string());
    }
}

sweep_result read_results_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot read " + path.string());
    }
    sweep_result result;
    std::string stem = path.stem().string();
    constexpr std::string_view prefix = "results_";
    result.dataset = stem.rfind(prefix, 0) == 0 ? stem.substr(prefix.size()) : stem;

    std::string line;
    if (!std::getline(in, line)) {
        throw std::runtime_error(path.string() + ": empty file");
    }
    if (line != "alpha,min_mse_mlp,min_mse_fuzzy,gain,time_mlp_s,time_fuzzy_s") {
        throw std::runtime_error(path.string() + ": unexpected header '" + line + "'");
    }
    std::size_t line_number = 1;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.empty()) {
            continue;
        }
        sweep_row row;
        char trailing = '\0';
        const int got = std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf,%lf,%lf%c",
                                    &row.alpha, &row.min_mse_mlp, &row.min_mse_fuzzy,
                                    &row.gain, &row.time_mlp_s, &row.time_fuzzy_s,
                                    &trailing);
        if (got != 6) {
            throw std::runtime_error(path.string() + ": malformed row at line " +
                                     std::to_string(line_number));
        }
        result.rows.push_back(std::move(row));
    }
    if (result.rows.empty()) {
        throw std::runtime_error(path.string() + ": no data rows");
    }
    return result;
}

} // namespace fmlp
