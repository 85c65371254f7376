#include "ros/solve.hpp"

#include <chrono>

#include "ros/oracle.hpp"
#include "ros/rng.hpp"
#include "ros/sample.hpp"

namespace ros {

Method parse_method(std::string_view name) {
    if (name == "ros") return Method::ros;
    if (name == "ros-vanilla") return Method::ros_vanilla;
    if (name == "md") return Method::md;
    throw Error(ErrorKind::argument, "unknown method '" + std::string(name) + "' (expected ros, ros-vanilla or md)");
}

const char* to_string(Method m) {
    switch (m) {
        case Method::ros: return "ros";
        case Method::ros_vanilla: return "ros-vanilla";
        case Method::md: return "md";
    }
    return "unknown";
}

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::parse:
        case ErrorKind::range:
        case ErrorKind::duplicate:
        case ErrorKind::io:
            return kExitInput;
        case ErrorKind::shape:
        case ErrorKind::format:
            return kExitShape;
        case ErrorKind::argument:
            return kExitConfig;
        case ErrorKind::generation:
        case ErrorKind::numeric:
        case ErrorKind::timeout:
            return kExitRuntime;
    }
    return kExitRuntime;
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
    return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

struct RestartOutcome {
    AssignmentMatrix relaxed;
    std::size_t iterations = 0;
};

}  // namespace

SolveReport solve_instance(const WeightedGraph& g, const SolveOptions& options, const LoadedModel* model) {
    if (options.k < 2) throw Error(ErrorKind::argument, "k must be at least 2");
    if (options.samples < 1) throw Error(ErrorKind::argument, "--samples must be at least 1");
    if (options.restarts < 1) throw Error(ErrorKind::argument, "--restarts must be at least 1");
    if (options.timeout_seconds && !(*options.timeout_seconds > 0.0)) {
        throw Error(ErrorKind::argument, "timeout must be positive");
    }

    GnnArchitecture arch = options.arch;
    if (options.method == Method::ros) {
        if (!model) throw Error(ErrorKind::argument, "method 'ros' requires a model file");
        if (model->arch.output_dim != options.k) {
            throw Error(ErrorKind::shape, "model was trained for k=" + std::to_string(model->arch.output_dim) +
                                              ", instance asks for k=" + std::to_string(options.k));
        }
        model->params.check_shape(model->arch);
        arch = model->arch;
    } else {
        arch.output_dim = options.k;
    }
    arch.validate();
    options.train.validate();
    options.md.validate();

    Deadline deadline;
    if (options.timeout_seconds) {
        deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                      std::chrono::duration<double>(*options.timeout_seconds));
    }

    SolveReport report;
    report.method = options.method;
    report.k = options.k;
    report.seed = options.seed;
    report.nodes = g.node_count();
    report.edges = g.edge_count();
    report.total_edge_weight = g.total_edge_weight();
    report.options = options;
    report.options.arch = arch;

    bool have_best = false;
    for (std::size_t restart = 0; restart < options.restarts; ++restart) {
        const std::uint64_t run_seed = derive_seed(options.seed, restart);
        auto start = Clock::now();
        RestartOutcome outcome;
        if (options.method == Method::md) {
            MdConfig md = options.md;
            md.seed = derive_seed(run_seed, 0);
            md.init.reset();
            md.deadline = deadline;
            auto r = solve_md(g, options.k, md);
            outcome = {std::move(r.x), r.iterations};
        } else {
            TrainConfig train = options.train;
            train.seed = derive_seed(run_seed, 1);
            train.deadline = deadline;
            const GnnParameters init = options.method == Method::ros
                                           ? model->params
                                           : GnnParameters::random(arch, derive_seed(run_seed, 0));
            auto r = finetune(init, arch, g, train);
            outcome = {std::move(r.x), r.iters_used};
        }
        report.timings.optimize_ms += elapsed_ms(start);

        start = Clock::now();
        if (deadline && Clock::now() > *deadline) throw Error(ErrorKind::timeout, "solve exceeded its deadline");
        SampleConfig sc{options.samples, derive_seed(run_seed, 2)};
        auto sampled = sample_best_of(outcome.relaxed, g, sc);
        report.timings.sample_ms += elapsed_ms(start);

        report.total_iterations += outcome.iterations;
        if (!have_best || sampled.f < report.sampled_f) {
            have_best = true;
            report.best_restart = restart;
            report.sampled_f = sampled.f;
            report.cut = sampled.cut;
            report.assignment = std::move(sampled.assignment);
            report.relaxed_f = objective_f(outcome.relaxed, g);
            report.iterations = outcome.iterations;
            report.relaxed = std::move(outcome.relaxed);
        }
    }

    if (options.oracle) report.oracle_cut = brute_force_oracle(g, options.k).cut;
    return report;
}

SolveReport solve_file(const std::filesystem::path& input, GraphFormat format, const SolveOptions& options,
                       const std::optional<std::filesystem::path>& model_path) {
    const auto start = Clock::now();
    ParseStats stats;
    const WeightedGraph g = load_graph(input, format, &stats);
    std::optional<LoadedModel> model;
    if (options.method == Method::ros) {
        if (!model_path) throw Error(ErrorKind::argument, "method 'ros' requires --model");
        try {
            model = load_model(*model_path);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::io) throw;
            throw Error(ErrorKind::shape, e.what());
        }
    }
    const double load_ms = elapsed_ms(start);

    SolveReport report = solve_instance(g, options, model ? &*model : nullptr);
    report.instance = input.string();
    report.collapsed_duplicates = stats.collapsed_duplicates;
    report.timings.load_ms = load_ms;
    if (model_path && options.method == Method::ros) report.model_path = model_path->string();
    return report;
}

nlohmann::ordered_json report_to_json(const SolveReport& r, bool include_timings, bool include_labels) {
    nlohmann::ordered_json j;
    j["instance"] = r.instance;
    j["method"] = to_string(r.method);
    j["k"] = r.k;
    j["seed"] = r.seed;
    j["nodes"] = r.nodes;
    j["edges"] = r.edges;
    j["total_edge_weight"] = r.total_edge_weight;
    j["collapsed_duplicates"] = r.collapsed_duplicates;
    j["cut"] = r.cut;
    j["relaxed_f"] = r.relaxed_f;
    j["sampled_f"] = r.sampled_f;
    j["iterations"] = r.iterations;
    j["total_iterations"] = r.total_iterations;
    j["best_restart"] = r.best_restart;
    if (r.oracle_cut) j["oracle_cut"] = *r.oracle_cut;
    if (include_timings) {
        j["timings_ms"] = {{"load", r.timings.load_ms},
                           {"optimize", r.timings.optimize_ms},
                           {"sample", r.timings.sample_ms},
                           {"total", r.timings.total_ms()}};
    }
    const auto& o = r.options;
    nlohmann::ordered_json config;
    config["samples"] = o.samples;
    config["restarts"] = o.restarts;
    if (r.method == Method::md) {
        config["md_step_size"] = o.md.step_size;
        config["md_max_iters"] = o.md.max_iters;
        config["md_tolerance"] = o.md.tolerance;
        config["md_init_noise"] = o.md.init_noise;
    } else {
        config["layers"] = o.arch.layers;
        config["input_dim"] = o.arch.input_dim;
        config["hidden_dim"] = o.arch.hidden_dim;
        config["activation"] = to_string(o.arch.activation);
        config["graph_norm"] = o.arch.graph_norm;
        config["learning_rate"] = o.train.learning_rate;
        config["tolerance"] = o.train.tolerance;
        config["patience"] = o.train.patience;
        config["max_finetune_iters"] = o.train.max_finetune_iters;
        if (!r.model_path.empty()) config["model"] = r.model_path;
    }
    if (o.timeout_seconds) config["timeout_s"] = *o.timeout_seconds;
    j["config"] = config;
    if (include_labels) j["labels"] = r.assignment.labels;
    return j;
}

}  // namespace ros
