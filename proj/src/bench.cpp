#include "ros/bench.hpp"

#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <map>
#include <sstream>
#include <thread>

#include "ros/rng.hpp"

namespace ros {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split_list(std::string_view value) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= value.size()) {
        auto end = value.find(',', start);
        if (end == std::string_view::npos) end = value.size();
        auto item = trim(value.substr(start, end - start));
        if (!item.empty()) out.emplace_back(item);
        start = end + 1;
    }
    return out;
}

std::uint64_t to_uint(std::string_view v, std::size_t line, std::string_view key) {
    std::uint64_t out = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size()) {
        throw ParseError(ErrorKind::argument, line, "'" + std::string(key) + "' expects a non-negative integer");
    }
    return out;
}

double to_double(std::string_view v, std::size_t line, std::string_view key) {
    double out = 0.0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size()) {
        throw ParseError(ErrorKind::argument, line, "'" + std::string(key) + "' expects a number");
    }
    return out;
}

std::string resolve(const std::filesystem::path& base, const std::string& p) {
    std::filesystem::path path(p);
    if (path.is_relative() && !base.empty()) path = base / path;
    return path.string();
}

std::string format_number(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string status_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::parse:
        case ErrorKind::range:
        case ErrorKind::duplicate:
        case ErrorKind::io:
            return "load_error";
        case ErrorKind::shape:
        case ErrorKind::format:
            return "model_error";
        case ErrorKind::argument:
            return "config_error";
        case ErrorKind::timeout:
            return "timeout";
        default:
            return "runtime_error";
    }
}

struct Cell {
    const BenchRun* run;
    std::string instance;
    Method method;
    std::size_t k;
    std::uint64_t seed;
};

}  // namespace

BenchSuite parse_bench_suite(std::string_view text, const std::filesystem::path& base_dir) {
    BenchSuite suite;
    BenchRun* current = nullptr;
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        ++number;
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) {
            if (end == text.size()) break;
            continue;
        }
        if (line == "[run]") {
            suite.runs.emplace_back();
            current = &suite.runs.back();
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ParseError(ErrorKind::argument, number, "expected 'key = value'");
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));

        if (!current) {
            if (key == "threads") {
                suite.threads = to_uint(value, number, key);
            } else if (key == "timeout") {
                suite.timeout_seconds = to_double(value, number, key);
                if (!(*suite.timeout_seconds > 0.0)) throw ParseError(ErrorKind::argument, number, "timeout must be > 0");
            } else {
                throw ParseError(ErrorKind::argument, number, "unknown global key '" + std::string(key) + "'");
            }
            continue;
        }
        auto& run = *current;
        try {
            if (key == "instances") {
                run.instances.clear();
                for (const auto& p : split_list(value)) run.instances.push_back(resolve(base_dir, p));
            } else if (key == "format") {
                run.format = parse_format(value);
            } else if (key == "k") {
                run.ks.clear();
                for (const auto& v : split_list(value)) run.ks.push_back(to_uint(v, number, key));
            } else if (key == "methods") {
                run.methods.clear();
                for (const auto& v : split_list(value)) run.methods.push_back(parse_method(v));
            } else if (key == "repetitions") {
                run.repetitions = to_uint(value, number, key);
                if (run.repetitions < 1) throw ParseError(ErrorKind::argument, number, "repetitions must be >= 1");
            } else if (key == "seed") {
                run.seed = to_uint(value, number, key);
            } else if (key == "samples") {
                run.samples = to_uint(value, number, key);
            } else if (key == "restarts") {
                run.restarts = to_uint(value, number, key);
            } else if (key == "model") {
                run.model = resolve(base_dir, std::string(value));
            } else {
                throw ParseError(ErrorKind::argument, number, "unknown run key '" + std::string(key) + "'");
            }
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(ErrorKind::argument, number, e.what());
        }
        if (end == text.size()) break;
    }
    if (suite.runs.empty()) throw Error(ErrorKind::argument, "suite has no [run] section");
    for (const auto& run : suite.runs) {
        if (run.instances.empty()) throw Error(ErrorKind::argument, "a [run] section lists no instances");
        if (run.ks.empty() || run.methods.empty()) throw Error(ErrorKind::argument, "a [run] section has no k or methods");
    }
    return suite;
}

std::size_t threads_from_env() {
    if (const char* env = std::getenv("ROS_THREADS")) {
        std::size_t n = 0;
        std::string_view s(env);
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
        if (ec == std::errc{} && ptr == s.data() + s.size() && n >= 1) return n;
    }
    return 1;
}

std::vector<BenchRow> run_bench(const BenchSuite& suite) {
    std::vector<Cell> cells;
    for (const auto& run : suite.runs) {
        for (const auto& instance : run.instances) {
            for (auto method : run.methods) {
                for (auto k : run.ks) {
                    for (std::size_t rep = 0; rep < run.repetitions; ++rep) {
                        cells.push_back({&run, instance, method, k, derive_seed(run.seed, rep)});
                    }
                }
            }
        }
    }

    std::vector<BenchRow> rows(cells.size());
    auto solve_cell = [&](std::size_t i) {
        const auto& cell = cells[i];
        auto& row = rows[i];
        row.instance = cell.instance;
        row.method = cell.method;
        row.k = cell.k;
        row.seed = cell.seed;
        try {
            SolveOptions options;
            options.k = cell.k;
            options.method = cell.method;
            options.samples = cell.run->samples;
            options.restarts = cell.run->restarts;
            options.seed = cell.seed;
            options.timeout_seconds = suite.timeout_seconds;
            std::optional<std::filesystem::path> model;
            if (cell.run->model) model = *cell.run->model;
            auto report = solve_file(cell.instance, cell.run->format, options, model);
            row.status = "ok";
            row.cut = report.cut;
            row.f = report.sampled_f;
            row.timings = report.timings;
        } catch (const Error& e) {
            row.status = status_for(e.kind());
            row.message = e.what();
        } catch (const std::exception& e) {
            row.status = "runtime_error";
            row.message = e.what();
        }
    };

    std::size_t workers = suite.threads > 0 ? suite.threads : threads_from_env();
    workers = std::max<std::size_t>(1, std::min(workers, cells.size()));
    if (workers == 1) {
        for (std::size_t i = 0; i < cells.size(); ++i) solve_cell(i);
        return rows;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < cells.size(); i = next++) solve_cell(i);
        });
    }
    for (auto& t : pool) t.join();
    return rows;
}

std::string bench_to_csv(const std::vector<BenchRow>& rows, bool include_timings) {
    auto timing = [&](double ms) { return include_timings ? format_number(ms) : std::string("-"); };
    std::ostringstream os;
    os << "instance,method,k,seed,status,cut,f,opt_ms,sample_ms,total_ms\n";
    for (const auto& r : rows) {
        os << csv_field(r.instance) << ',' << to_string(r.method) << ',' << r.k << ',' << r.seed << ','
           << r.status << ',';
        if (r.status == "ok") {
            os << format_number(r.cut) << ',' << format_number(r.f) << ',' << timing(r.timings.optimize_ms) << ','
               << timing(r.timings.sample_ms) << ',' << timing(r.timings.total_ms());
        } else {
            os << ",,,,";
        }
        os << '\n';
    }

    struct Group {
        std::vector<double> cuts;
        std::vector<double> totals;
    };
    std::vector<std::pair<std::string, std::size_t>> order;
    std::map<std::pair<std::string, std::size_t>, Group> groups;
    for (const auto& r : rows) {
        if (r.status != "ok") continue;
        auto key = std::pair{std::string(to_string(r.method)), r.k};
        auto [it, fresh] = groups.try_emplace(key);
        if (fresh) order.push_back(key);
        it->second.cuts.push_back(r.cut);
        it->second.totals.push_back(r.timings.total_ms());
    }
    auto mean_std = [](const std::vector<double>& v) {
        double mean = 0.0;
        for (double x : v) mean += x;
        mean /= static_cast<double>(v.size());
        double ss = 0.0;
        for (double x : v) ss += (x - mean) * (x - mean);
        const double sd = v.size() > 1 ? std::sqrt(ss / static_cast<double>(v.size() - 1)) : 0.0;
        return std::pair{mean, sd};
    };
    os << "# summary\n";
    os << "method,k,count,cut_mean,cut_std,total_ms_mean,total_ms_std\n";
    for (const auto& key : order) {
        const auto& g = groups[key];
        const auto [cm, cs] = mean_std(g.cuts);
        const auto [tm, ts] = mean_std(g.totals);
        os << key.first << ',' << key.second << ',' << g.cuts.size() << ',' << format_number(cm) << ','
           << format_number(cs) << ',' << timing(tm) << ',' << timing(ts) << '\n';
    }
    return os.str();
}

}  // namespace ros
