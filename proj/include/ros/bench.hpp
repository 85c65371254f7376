#ifndef ROS_BENCH_HPP
#define ROS_BENCH_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ros/graph_io.hpp"
#include "ros/solve.hpp"

namespace ros {

/// One [run] section of a suite file.
struct BenchRun {
    std::vector<std::string> instances;  // paths, resolved against the suite directory
    GraphFormat format = GraphFormat::gset;
    std::vector<std::size_t> ks{2};
    std::vector<Method> methods{Method::md};
    std::size_t repetitions = 1;
    std::uint64_t seed = 0;
    std::size_t samples = 100;
    std::size_t restarts = 1;
    std::optional<std::string> model;
};

struct BenchSuite {
    std::vector<BenchRun> runs;
    std::size_t threads = 0;  // 0 = ROS_THREADS or 1
    std::optional<double> timeout_seconds;
};

/**
 * Suite text, one `key = value` per line, `#` comments, sections opened by
 * `[run]`. Global keys (before the first section): threads, timeout.
 * Run keys: instances, format, k, methods, repetitions, seed, samples,
 * restarts, model. List values are comma-separated. Relative instance and
 * model paths are resolved against `base_dir`.
 */
BenchSuite parse_bench_suite(std::string_view text, const std::filesystem::path& base_dir = {});

struct BenchRow {
    std::string instance;
    Method method = Method::md;
    std::size_t k = 2;
    std::uint64_t seed = 0;
    std::string status;  // ok, load_error, model_error, config_error, timeout, runtime_error
    double cut = 0.0;
    double f = 0.0;
    PhaseTimings timings;
    std::string message;
};

/// Expands the suite into cells (run, instance, method, k, repetition order)
/// and solves them on a worker pool. Rows come back in suite order.
std::vector<BenchRow> run_bench(const BenchSuite& suite);

/// CSV rows followed by a `# summary` block with mean and sample std of cut
/// (and total_ms) per (method, k) over ok rows. Without timings, every timing
/// field is written as `-` so repeated runs give identical bytes.
std::string bench_to_csv(const std::vector<BenchRow>& rows, bool include_timings = true);

/// Worker count from ROS_THREADS (>= 1), default 1.
std::size_t threads_from_env();

}  // namespace ros

#endif  // ROS_BENCH_HPP
