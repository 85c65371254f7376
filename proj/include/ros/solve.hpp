#ifndef ROS_SOLVE_HPP
#define ROS_SOLVE_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "ros/error.hpp"
#include "ros/gnn.hpp"
#include "ros/graph.hpp"
#include "ros/graph_io.hpp"
#include "ros/mirror_descent.hpp"
#include "ros/relax.hpp"
#include "ros/train.hpp"

namespace ros {

enum class Method { ros, ros_vanilla, md };

Method parse_method(std::string_view name);
const char* to_string(Method m);

/// Process exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitInput = 2,    // unreadable or malformed instance / dataset
    kExitShape = 3,    // model file invalid or incompatible with the instance
    kExitConfig = 4,   // invalid flags or configuration
    kExitRuntime = 5,  // numerical failure, generation failure, timeout
};

int exit_code_for(ErrorKind kind);

struct SolveOptions {
    std::size_t k = 2;
    Method method = Method::md;
    std::size_t samples = 100;
    std::uint64_t seed = 0;
    std::size_t restarts = 1;
    GnnArchitecture arch;   // ros-vanilla only; output_dim is set from k
    TrainConfig train;      // seed field is overwritten per restart
    MdConfig md;            // seed and init fields are overwritten per restart
    std::optional<double> timeout_seconds;
    bool oracle = false;
};

struct PhaseTimings {
    double load_ms = 0.0;
    double optimize_ms = 0.0;
    double sample_ms = 0.0;
    double total_ms() const { return load_ms + optimize_ms + sample_ms; }
};

struct SolveReport {
    std::string instance;
    Method method = Method::md;
    std::size_t k = 2;
    std::uint64_t seed = 0;
    std::size_t nodes = 0;
    std::size_t edges = 0;
    double total_edge_weight = 0.0;
    std::size_t collapsed_duplicates = 0;
    double cut = 0.0;
    double relaxed_f = 0.0;   // f at the optimizer output of the winning restart
    double sampled_f = 0.0;   // best sampled f of the winning restart
    std::size_t iterations = 0;       // optimizer iterations of the winning restart
    std::size_t total_iterations = 0; // summed over restarts
    std::size_t best_restart = 0;
    IntegerAssignment assignment;
    AssignmentMatrix relaxed;         // optimizer output of the winning restart
    PhaseTimings timings;
    std::optional<double> oracle_cut;
    SolveOptions options;
    std::string model_path;
};

/// Runs the pipeline on an already loaded graph. `model` is required for
/// Method::ros; its output_dim must equal options.k (Error(shape) otherwise).
SolveReport solve_instance(const WeightedGraph& g, const SolveOptions& options, const LoadedModel* model = nullptr);

/// Loads graph (and model for ros), runs solve_instance and records load time.
SolveReport solve_file(const std::filesystem::path& input, GraphFormat format, const SolveOptions& options,
                       const std::optional<std::filesystem::path>& model_path);

/// Report as JSON. Timings are omitted when include_timings is false, which
/// makes reports of identical runs byte-identical.
nlohmann::ordered_json report_to_json(const SolveReport& report, bool include_timings = true,
                                      bool include_labels = true);

}  // namespace ros

#endif  // ROS_SOLVE_HPP
