#include <cstdio>
#include <exception>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fmlp/bench.hpp"
#include "fmlp/dataset.hpp"
#include "fmlp/network.hpp"

namespace {

struct run_options {
    std::string dataset;
    std::string descriptor_file;
    std::vector<double> alphas = fmlp::default_alphas();
    double mu = 0.50;
    std::size_t epochs = 100;
    std::size_t repeats = 5;
    std::uint64_t seed = 0;
    std::optional<std::size_t> hidden;
    std::size_t workers = 1;
    std::string out_dir;
    std::string data_dir = "data";
};

// Resolve what to load: a catalog name uses the bundled descriptor and the
// default file under --data-dir; anything else is a path and needs
// --descriptor to explain its layout.
std::pair<fmlp::dataset_descriptor, std::filesystem::path>
resolve_dataset(const run_options& opt) {
    if (!opt.descriptor_file.empty()) {
        fmlp::dataset_descriptor descriptor =
            fmlp::descriptor_from_json(opt.descriptor_file);
        std::filesystem::path file = opt.dataset;
        if (opt.dataset.empty() && !descriptor.default_filename.empty()) {
            file = std::filesystem::path(opt.data_dir) / descriptor.default_filename;
        }
        if (file.empty()) {
            throw std::runtime_error("no data file: pass --dataset <path> or set "
                                     "default_filename in the descriptor");
        }
        return {std::move(descriptor), file};
    }
    for (const auto& descriptor : fmlp::dataset_catalog()) {
        if (descriptor.name == opt.dataset) {
            return {descriptor,
                    std::filesystem::path(opt.data_dir) / descriptor.default_filename};
        }
    }
    if (std::filesystem::exists(opt.dataset)) {
        throw std::runtime_error("'" + opt.dataset + "' looks like a file; describe its "
                                 "layout with --descriptor <file.json>");
    }
    fmlp::find_descriptor(opt.dataset); // throws with the known-name list
    throw std::logic_error("unreachable");
}

int cmd_run(const run_options& opt) {
    const auto [descriptor, file] = resolve_dataset(opt);
    if (!std::filesystem::exists(file)) {
        throw std::runtime_error("data file " + file.string() +
                                 " not found (scripts/fetch_datasets.py downloads the "
                                 "bundled benchmark datasets)");
    }
    const fmlp::dataset ds = fmlp::load_csv(file, descriptor);

    fmlp::sweep_config cfg;
    cfg.alphas = opt.alphas;
    cfg.mu = opt.mu;
    cfg.epochs = opt.epochs;
    cfg.repeats = opt.repeats;
    cfg.base_seed = opt.seed;
    cfg.hidden_override = opt.hidden;
    cfg.workers = opt.workers;

    const std::size_t hidden =
        cfg.hidden_override ? *cfg.hidden_override : fmlp::default_hidden_units(ds.n);
    if (fmlp::shape_exceeds_guideline({ds.n, hidden})) {
        std::cerr << "warning: hidden layer of " << hidden << " exceeds the 2n+1 = "
                  << 2 * ds.n + 1 << " sizing guideline\n";
    }
    if (cfg.workers > 1) {
        std::cerr << "warning: workers > 1 can skew the timing columns; use "
                     "--workers 1 for timing comparisons\n";
    }

    const fmlp::sweep_result result = fmlp::run_sweep(ds, cfg);
    fmlp::emit_reports(result, opt.out_dir);

    std::cout << "dataset " << result.dataset << ": " << ds.x.rows() << " patterns, "
              << ds.n << " attributes, " << ds.class_count << " classes";
    if (ds.dropped_rows > 0) {
        std::cout << " (" << ds.dropped_rows << " rows dropped for missing values)";
    }
    std::cout << "\nhidden units " << result.hidden_units << ", " << cfg.epochs
              << " epochs, " << cfg.repeats << " repeats\n";
    for (const auto& row : result.rows) {
        std::printf("alpha %.5f  min_mse mlp %.5f  fuzzy %.5f  gain %.5f\n", row.alpha,
                    row.min_mse_mlp, row.min_mse_fuzzy, row.gain);
    }
    std::cout << "reports written to " << opt.out_dir << "\n";
    return 0;
}

int cmd_summarize(const std::string& in_dir, const std::string& out_dir) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(in_dir)) {
        const std::string name = entry.path().filename().string();
        if (entry.is_regular_file() && name.rfind("results_", 0) == 0 &&
            entry.path().extension() == ".csv") {
            files.push_back(entry.path());
        }
    }
    if (files.empty()) {
        throw std::runtime_error("no results_*.csv files in " + in_dir);
    }
    std::sort(files.begin(), files.end());
    std::vector<fmlp::sweep_result> results;
    results.reserve(files.size());
    for (const auto& file : files) {
        results.push_back(fmlp::read_results_csv(file));
    }
    fmlp::emit_summary(fmlp::summarize(results), out_dir);
    std::cout << "summary over " << results.size() << " dataset(s) written to "
              << (std::filesystem::path(out_dir) / "summary.csv").string() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Paired plain/fuzzified-input MLP convergence benchmark"};
    app.require_subcommand(1);

    run_options opt;
    auto* run = app.add_subcommand("run", "Run a learning-rate sweep on one dataset");
    run->add_option("--dataset", opt.dataset,
                    "catalog name (iris, abalone, bcw, glass, soybean, wine) or a CSV "
                    "path when --descriptor is given");
    run->add_option("--descriptor", opt.descriptor_file,
                    "JSON layout descriptor for a non-catalog CSV");
    run->add_option("--alphas", opt.alphas, "learning rates to sweep")
        ->delimiter(',')
        ->check(CLI::Range(1e-9, 1.0));
    run->add_option("--mu", opt.mu, "momentum factor")->check(CLI::Range(0.0, 0.999999));
    run->add_option("--epochs", opt.epochs, "epochs per training run");
    run->add_option("--repeats", opt.repeats, "averaging repeats per (alpha, model)");
    run->add_option("--seed", opt.seed, "base seed for run-seed derivation");
    run->add_option("--hidden", opt.hidden, "hidden units (default ceil(3n/2))");
    run->add_option("--workers", opt.workers, "parallel training workers");
    run->add_option("--out", opt.out_dir, "output directory for CSV reports")->required();
    run->add_option("--data-dir", opt.data_dir, "directory holding the dataset files");

    std::string in_dir;
    std::string out_dir;
    auto* summarize =
        app.add_subcommand("summarize", "Average gains/times across result CSVs");
    summarize->add_option("--in", in_dir, "directory with results_*.csv files")
        ->required();
    summarize->add_option("--out", out_dir, "output directory for summary.csv")
        ->required();

    double mse_mlp = 0.0;
    double mse_fuzzy = 0.0;
    auto* gain = app.add_subcommand("gain", "Print the convergence gain for a MSE pair");
    gain->add_option("mse_mlp", mse_mlp, "baseline minimum MSE")->required();
    gain->add_option("mse_fuzzy", mse_fuzzy, "variant minimum MSE")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            if (opt.dataset.empty() && opt.descriptor_file.empty()) {
                throw std::runtime_error("run needs --dataset (and --descriptor for "
                                         "non-catalog files)");
            }
            return cmd_run(opt);
        }
        if (summarize->parsed()) {
            return cmd_summarize(in_dir, out_dir);
        }
        std::printf("%.5f\n", fmlp::convergence_gain(mse_mlp, mse_fuzzy));
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
