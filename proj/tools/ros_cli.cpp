// Command-line front end: solve, pretrain, generate, perturb, bench.

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ros/alloc.hpp"
#include "ros/bench.hpp"
#include "ros/error.hpp"
#include "ros/generate.hpp"
#include "ros/graph_io.hpp"
#include "ros/relax.hpp"
#include "ros/rng.hpp"
#include "ros/solve.hpp"
#include "ros/train.hpp"

namespace fs = std::filesystem;

namespace {

struct SolveArgs {
    std::string input;
    std::string format = "gset";
    std::size_t k = 2;
    std::string method = "md";
    std::string model;
    std::size_t samples = 100;
    std::uint64_t seed = 0;
    std::size_t restarts = 1;
    std::string out;
    std::string dump_relaxed;
    std::string trace;
    bool oracle = false;
    bool no_timings = false;
    bool no_labels = false;
    double timeout = 0.0;
    ros::SolveOptions options;
};

struct PretrainArgs {
    std::string data;
    std::string format = "gset";
    std::size_t k = 2;
    std::uint64_t seed = 0;
    std::string out;
    ros::GnnArchitecture arch;
    ros::TrainConfig train;
};

struct GenerateArgs {
    std::size_t n = 100;
    std::size_t r = 3;
    std::size_t count = 1;
    std::uint64_t seed = 0;
    std::string outdir = ".";
    std::string prefix = "rr";
};

struct PerturbArgs {
    std::string input;
    std::string format = "gset";
    double low = 1.0;
    double high = 1.0;
    std::uint64_t seed = 0;
    std::string out;
};

struct BenchArgs {
    std::string suite;
    std::string out;
    bool no_timings = false;
};

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
    } else {
        ros::write_text_file(path, text);
    }
}

int run_solve(SolveArgs& a) {
    auto options = a.options;
    options.k = a.k;
    options.method = ros::parse_method(a.method);
    options.samples = a.samples;
    options.seed = a.seed;
    options.restarts = a.restarts;
    options.oracle = a.oracle;
    if (a.timeout > 0.0) options.timeout_seconds = a.timeout;
    std::optional<fs::path> model;
    if (!a.model.empty()) model = a.model;

    auto report = ros::solve_file(a.input, ros::parse_format(a.format), options, model);
    const std::string json = report_to_json(report, !a.no_timings, !a.no_labels).dump(2) + "\n";
    std::cout << json;
    if (!a.out.empty()) ros::write_text_file(a.out, json);
    if (!a.dump_relaxed.empty()) ros::write_text_file(a.dump_relaxed, ros::serialize_assignment(report.relaxed));
    if (!a.trace.empty()) {
        if (options.method != ros::Method::md) throw ros::Error(ros::ErrorKind::argument, "--trace is only available for md");
        // Rerun of the winning restart to collect its trace.
        auto md = options.md;
        md.seed = ros::derive_seed(ros::derive_seed(options.seed, report.best_restart), 0);
        auto g = ros::load_graph(a.input, ros::parse_format(a.format));
        auto r = ros::solve_md(g, options.k, md);
        std::string csv = "iter,f\n";
        char buf[64];
        for (std::size_t i = 0; i < r.trace.size(); ++i) {
            auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, r.trace[i]);
            csv += std::to_string(i) + "," + std::string(buf, ptr) + "\n";
        }
        ros::write_text_file(a.trace, csv);
    }
    return ros::kExitOk;
}

int run_pretrain(PretrainArgs& a) {
    const auto format = ros::parse_format(a.format);
    if (!fs::is_directory(a.data)) throw ros::Error(ros::ErrorKind::io, "'" + a.data + "' is not a directory");
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(a.data)) {
        if (entry.is_regular_file()) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) throw ros::Error(ros::ErrorKind::io, "dataset directory '" + a.data + "' is empty");

    std::vector<ros::WeightedGraph> dataset;
    std::vector<std::string> failures;
    for (const auto& f : files) {
        try {
            dataset.push_back(ros::load_graph(f, format));
        } catch (const ros::Error& e) {
            failures.push_back(f.string() + ": " + e.what());
        }
    }
    if (!failures.empty()) {
        std::string msg = "unreadable dataset files:";
        for (const auto& f : failures) msg += "\n  " + f;
        throw ros::Error(ros::ErrorKind::parse, msg);
    }

    a.arch.output_dim = a.k;
    a.train.seed = a.seed;
    auto result = ros::pretrain(dataset, a.arch, a.train);
    const std::size_t m = result.losses.size();
    for (std::size_t i = 0; i < m; ++i) {
        if ((i + 1) % 10 == 0 || i + 1 == m) {
            std::fprintf(stderr, "step %zu/%zu loss %.6g running_mean %.6g\n", i + 1, m, result.losses[i],
                         result.running_mean[i]);
        }
    }
    ros::save_model(result.params, a.arch, a.out);
    std::fprintf(stderr, "wrote %s (%zu parameters)\n", a.out.c_str(), result.params.size());
    return ros::kExitOk;
}

int run_generate(const GenerateArgs& a) {
    fs::create_directories(a.outdir);
    for (std::size_t i = 0; i < a.count; ++i) {
        auto g = ros::generate_random_regular(a.n, a.r, ros::derive_seed(a.seed, i));
        char name[256];
        std::snprintf(name, sizeof name, "%s_n%zu_r%zu_%04zu.gset", a.prefix.c_str(), a.n, a.r, i);
        ros::write_text_file(fs::path(a.outdir) / name, ros::serialize_gset(g));
        std::cout << (fs::path(a.outdir) / name).string() << "\n";
    }
    return ros::kExitOk;
}

int run_perturb(const PerturbArgs& a) {
    auto g = ros::load_graph(a.input, ros::parse_format(a.format));
    write_output(a.out, ros::serialize_gset(ros::perturb_weights(g, a.low, a.high, a.seed)));
    return ros::kExitOk;
}

int run_bench(const BenchArgs& a) {
    const fs::path suite_path(a.suite);
    auto suite = ros::parse_bench_suite(ros::read_text_file(suite_path), suite_path.parent_path());
    auto rows = ros::run_bench(suite);
    write_output(a.out, ros::bench_to_csv(rows, !a.no_timings));
    return ros::kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    ros::retain_freed_memory();
    CLI::App app{"Max-k-Cut by relaxation, optimization and categorical sampling"};
    app.require_subcommand(1);

    SolveArgs solve;
    auto* cmd_solve = app.add_subcommand("solve", "Solve one instance and print a JSON report");
    cmd_solve->add_option("--input", solve.input, "Instance file")->required();
    cmd_solve->add_option("--format", solve.format, "gset | dimacs | edgelist")->capture_default_str();
    cmd_solve->add_option("--k", solve.k, "Number of partitions")->capture_default_str();
    cmd_solve->add_option("--method", solve.method, "ros | ros-vanilla | md")->capture_default_str();
    cmd_solve->add_option("--model", solve.model, "Pre-trained model (method ros)");
    cmd_solve->add_option("--samples", solve.samples, "Sampling trials T")->capture_default_str();
    cmd_solve->add_option("--seed", solve.seed, "Base seed")->capture_default_str();
    cmd_solve->add_option("--restarts", solve.restarts, "Independent optimize+sample runs; best is kept")
        ->capture_default_str();
    cmd_solve->add_option("--out", solve.out, "Also write the report here");
    cmd_solve->add_option("--dump-relaxed", solve.dump_relaxed, "Write the relaxed matrix (text block)");
    cmd_solve->add_option("--trace", solve.trace, "Write the MD objective trace as CSV iter,f");
    cmd_solve->add_flag("--oracle", solve.oracle, "Add the brute-force optimum to the report");
    cmd_solve->add_flag("--no-timings", solve.no_timings, "Omit wall-clock timings");
    cmd_solve->add_flag("--no-labels", solve.no_labels, "Omit the label vector");
    cmd_solve->add_option("--timeout", solve.timeout, "Seconds before the solve is abandoned");
    cmd_solve->add_option("--lr", solve.options.train.learning_rate, "Adam learning rate")->capture_default_str();
    cmd_solve->add_option("--tolerance", solve.options.train.tolerance, "Early-stopping tolerance")
        ->capture_default_str();
    cmd_solve->add_option("--patience", solve.options.train.patience, "Early-stopping patience")
        ->capture_default_str();
    cmd_solve->add_option("--max-iters", solve.options.train.max_finetune_iters, "Fine-tune iteration cap")
        ->capture_default_str();
    cmd_solve->add_option("--input-dim", solve.options.arch.input_dim, "Embedding size (ros-vanilla)")
        ->capture_default_str();
    cmd_solve->add_option("--hidden-dim", solve.options.arch.hidden_dim, "Hidden size (ros-vanilla)")
        ->capture_default_str();
    cmd_solve->add_option("--layers", solve.options.arch.layers, "Layer count (ros-vanilla)")->capture_default_str();
    cmd_solve->add_option("--md-step", solve.options.md.step_size, "MD step size")->capture_default_str();
    cmd_solve->add_option("--md-max-iters", solve.options.md.max_iters, "MD iteration cap")->capture_default_str();
    cmd_solve->add_option("--md-tolerance", solve.options.md.tolerance, "MD relative stopping tolerance")
        ->capture_default_str();

    PretrainArgs pre;
    auto* cmd_pretrain = app.add_subcommand("pretrain", "Pre-train a model on a directory of graphs");
    cmd_pretrain->add_option("--data", pre.data, "Dataset directory")->required();
    cmd_pretrain->add_option("--format", pre.format, "gset | dimacs | edgelist")->capture_default_str();
    cmd_pretrain->add_option("--k", pre.k, "Number of partitions")->capture_default_str();
    cmd_pretrain->add_option("--epochs", pre.train.pretrain_epochs, "Passes over the dataset")->capture_default_str();
    cmd_pretrain->add_option("--lr", pre.train.learning_rate, "Adam learning rate")->capture_default_str();
    cmd_pretrain->add_option("--seed", pre.seed, "Seed")->capture_default_str();
    cmd_pretrain->add_option("--out", pre.out, "Model file")->required();
    cmd_pretrain->add_option("--input-dim", pre.arch.input_dim, "Embedding size")->capture_default_str();
    cmd_pretrain->add_option("--hidden-dim", pre.arch.hidden_dim, "Hidden size")->capture_default_str();
    cmd_pretrain->add_option("--layers", pre.arch.layers, "Layer count")->capture_default_str();

    GenerateArgs gen;
    auto* cmd_generate = app.add_subcommand("generate", "Write random regular graphs in Gset format");
    cmd_generate->add_option("--n", gen.n, "Nodes")->capture_default_str();
    cmd_generate->add_option("--r", gen.r, "Degree")->capture_default_str();
    cmd_generate->add_option("--count", gen.count, "Number of graphs")->capture_default_str();
    cmd_generate->add_option("--seed", gen.seed, "Base seed")->capture_default_str();
    cmd_generate->add_option("--outdir", gen.outdir, "Output directory")->capture_default_str();
    cmd_generate->add_option("--prefix", gen.prefix, "File name prefix")->capture_default_str();

    PerturbArgs perturb;
    auto* cmd_perturb = app.add_subcommand("perturb", "Scale every edge weight by U[low, high]");
    cmd_perturb->add_option("--input", perturb.input, "Instance file")->required();
    cmd_perturb->add_option("--format", perturb.format, "gset | dimacs | edgelist")->capture_default_str();
    cmd_perturb->add_option("--low", perturb.low, "Lower bound")->capture_default_str();
    cmd_perturb->add_option("--high", perturb.high, "Upper bound")->capture_default_str();
    cmd_perturb->add_option("--seed", perturb.seed, "Seed")->capture_default_str();
    cmd_perturb->add_option("--out", perturb.out, "Output Gset file (default stdout)");

    BenchArgs bench;
    auto* cmd_bench = app.add_subcommand("bench", "Run a benchmark suite and write CSV");
    cmd_bench->add_option("--suite", bench.suite, "Suite file")->required();
    cmd_bench->add_option("--out", bench.out, "CSV output (default stdout)");
    cmd_bench->add_flag("--no-timings", bench.no_timings, "Write '-' for timing columns");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? ros::kExitOk : ros::kExitConfig;
    }

    try {
        if (*cmd_solve) return run_solve(solve);
        if (*cmd_pretrain) return run_pretrain(pre);
        if (*cmd_generate) return run_generate(gen);
        if (*cmd_perturb) return run_perturb(perturb);
        if (*cmd_bench) return run_bench(bench);
    } catch (const ros::Error& e) {
        std::cerr << "error (" << ros::to_string(e.kind()) << "): " << e.what() << "\n";
        return ros::exit_code_for(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return ros::kExitRuntime;
    }
    return ros::kExitConfig;
}
