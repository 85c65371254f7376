#include "ros/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <utility>
#include <vector>

#include "ros/error.hpp"

namespace ros {

GraphFormat parse_format(std::string_view name) {
    if (name == "gset") return GraphFormat::gset;
    if (name == "dimacs") return GraphFormat::dimacs;
    if (name == "edgelist") return GraphFormat::edgelist;
    throw Error(ErrorKind::argument, "unknown graph format '" + std::string(name) + "'");
}

const char* to_string(GraphFormat format) {
    switch (format) {
        case GraphFormat::gset: return "gset";
        case GraphFormat::dimacs: return "dimacs";
        case GraphFormat::edgelist: return "edgelist";
    }
    return "unknown";
}

namespace {

struct Line {
    std::size_t number;
    std::string_view text;
};

// Splits on '\n', drops a trailing '\r'.
std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 1;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back({number++, line});
        if (end == text.size()) break;
        start = end + 1;
    }
    return lines;
}

bool is_separator(char c, bool commas) {
    return c == ' ' || c == '\t' || c == '\v' || c == '\f' || (commas && c == ',');
}

std::vector<std::string_view> tokenize(std::string_view line, bool commas = false) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && is_separator(line[i], commas)) ++i;
        std::size_t j = i;
        while (j < line.size() && !is_separator(line[j], commas)) ++j;
        if (j > i) tokens.push_back(line.substr(i, j - i));
        i = j;
    }
    return tokens;
}

bool is_blank(std::string_view line) {
    return std::all_of(line.begin(), line.end(), [](char c) { return is_separator(c, false); });
}

std::uint64_t parse_uint(std::string_view token, std::size_t line, const char* what) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError(ErrorKind::parse, line,
                         std::string("expected non-negative integer for ") + what + ", got '" +
                             std::string(token) + "'");
    }
    return value;
}

double parse_real(std::string_view token, std::size_t line) {
    // from_chars rejects a leading '+', which some generators emit.
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || !std::isfinite(value)) {
        throw ParseError(ErrorKind::parse, line, "expected finite real weight, got '" + std::string(token) + "'");
    }
    return value;
}

NodeId one_based(std::uint64_t index, std::uint64_t n, std::size_t line) {
    if (index < 1 || index > n) {
        std::ostringstream os;
        os << "node index " << index << " outside [1, " << n << "]";
        throw ParseError(ErrorKind::range, line, os.str());
    }
    return static_cast<NodeId>(index - 1);
}

std::pair<NodeId, NodeId> ordered(NodeId a, NodeId b) {
    return a < b ? std::pair{a, b} : std::pair{b, a};
}

void check_not_loop(NodeId a, NodeId b, std::size_t line) {
    if (a == b) throw ParseError(ErrorKind::parse, line, "self-loop on node " + std::to_string(a));
}

constexpr std::uint64_t kMaxNodes = std::uint64_t{1} << 31;

}  // namespace

WeightedGraph parse_gset(std::string_view text) {
    auto lines = split_lines(text);
    std::size_t cursor = 0;
    while (cursor < lines.size() && is_blank(lines[cursor].text)) ++cursor;
    if (cursor == lines.size()) throw ParseError(ErrorKind::parse, 0, "empty Gset input");

    const auto& header = lines[cursor++];
    auto head = tokenize(header.text);
    if (head.size() != 2) throw ParseError(ErrorKind::parse, header.number, "header must be 'N M'");
    const std::uint64_t n = parse_uint(head[0], header.number, "N");
    const std::uint64_t m = parse_uint(head[1], header.number, "M");
    if (n == 0) throw ParseError(ErrorKind::parse, header.number, "N must be positive");
    if (n > kMaxNodes) throw ParseError(ErrorKind::parse, header.number, "N too large");

    std::vector<Edge> edges;
    edges.reserve(m);
    std::map<std::pair<NodeId, NodeId>, std::size_t> seen;
    for (; cursor < lines.size() && edges.size() < m; ++cursor) {
        const auto& line = lines[cursor];
        auto tok = tokenize(line.text);
        if (tok.empty()) continue;
        if (tok.size() != 3) throw ParseError(ErrorKind::parse, line.number, "edge line must be 'i j w'");
        NodeId a = one_based(parse_uint(tok[0], line.number, "i"), n, line.number);
        NodeId b = one_based(parse_uint(tok[1], line.number, "j"), n, line.number);
        double w = parse_real(tok[2], line.number);
        check_not_loop(a, b, line.number);
        auto [it, fresh] = seen.emplace(ordered(a, b), line.number);
        if (!fresh) {
            throw ParseError(ErrorKind::duplicate, line.number,
                             "duplicate edge, first seen on line " + std::to_string(it->second));
        }
        edges.push_back({a, b, w});
    }
    if (edges.size() < m) {
        std::ostringstream os;
        os << "header declares " << m << " edges, found " << edges.size();
        throw ParseError(ErrorKind::parse, lines.back().number, os.str());
    }
    for (; cursor < lines.size(); ++cursor) {
        if (!is_blank(lines[cursor].text)) {
            throw ParseError(ErrorKind::parse, lines[cursor].number, "unexpected content after the declared edges");
        }
    }
    return WeightedGraph(n, std::move(edges));
}

WeightedGraph parse_dimacs_color(std::string_view text, ParseStats* stats) {
    std::uint64_t n = 0;
    bool have_header = false;
    std::vector<Edge> edges;
    std::map<std::pair<NodeId, NodeId>, std::size_t> seen;
    std::size_t collapsed = 0;

    for (const auto& line : split_lines(text)) {
        auto tok = tokenize(line.text);
        if (tok.empty() || tok[0] == "c") continue;
        if (tok[0] == "p") {
            if (have_header) throw ParseError(ErrorKind::parse, line.number, "second 'p' header");
            if (tok.size() != 4) throw ParseError(ErrorKind::parse, line.number, "header must be 'p edge N M'");
            if (tok[1] != "edge") {
                throw ParseError(ErrorKind::parse, line.number,
                                 "unsupported problem type '" + std::string(tok[1]) + "'");
            }
            n = parse_uint(tok[2], line.number, "N");
            parse_uint(tok[3], line.number, "M");
            if (n == 0) throw ParseError(ErrorKind::parse, line.number, "N must be positive");
            if (n > kMaxNodes) throw ParseError(ErrorKind::parse, line.number, "N too large");
            have_header = true;
        } else if (tok[0] == "e") {
            if (!have_header) throw ParseError(ErrorKind::parse, line.number, "edge before 'p edge' header");
            if (tok.size() != 3) throw ParseError(ErrorKind::parse, line.number, "edge line must be 'e i j'");
            NodeId a = one_based(parse_uint(tok[1], line.number, "i"), n, line.number);
            NodeId b = one_based(parse_uint(tok[2], line.number, "j"), n, line.number);
            check_not_loop(a, b, line.number);
            if (!seen.emplace(ordered(a, b), line.number).second) {
                ++collapsed;
                continue;
            }
            edges.push_back({a, b, 1.0});
        } else {
            throw ParseError(ErrorKind::parse, line.number, "unknown line type '" + std::string(tok[0]) + "'");
        }
    }
    if (!have_header) throw ParseError(ErrorKind::parse, 0, "missing 'p edge' header");
    if (stats) stats->collapsed_duplicates = collapsed;
    return WeightedGraph(n, std::move(edges));
}

WeightedGraph parse_edge_list(std::string_view text, ParseStats* stats) {
    std::vector<Edge> edges;
    std::map<std::pair<NodeId, NodeId>, std::pair<double, std::size_t>> seen;
    std::size_t collapsed = 0;
    std::uint64_t max_index = 0;

    for (const auto& line : split_lines(text)) {
        auto tok = tokenize(line.text, true);
        if (tok.empty() || tok[0].front() == '#' || tok[0].front() == '%') continue;
        if (tok.size() != 3) throw ParseError(ErrorKind::parse, line.number, "edge line must be 'i j w'");
        const std::uint64_t ia = parse_uint(tok[0], line.number, "i");
        const std::uint64_t ib = parse_uint(tok[1], line.number, "j");
        if (ia >= kMaxNodes || ib >= kMaxNodes) throw ParseError(ErrorKind::range, line.number, "node index too large");
        const double w = parse_real(tok[2], line.number);
        auto a = static_cast<NodeId>(ia);
        auto b = static_cast<NodeId>(ib);
        check_not_loop(a, b, line.number);
        auto [it, fresh] = seen.emplace(ordered(a, b), std::pair{w, line.number});
        if (!fresh) {
            if (it->second.first != w) {
                throw ParseError(ErrorKind::duplicate, line.number,
                                 "conflicting weight for edge first seen on line " +
                                     std::to_string(it->second.second));
            }
            ++collapsed;
            continue;
        }
        max_index = std::max({max_index, ia, ib});
        edges.push_back({a, b, w});
    }
    if (edges.empty()) throw ParseError(ErrorKind::parse, 0, "edge list is empty");
    if (stats) stats->collapsed_duplicates = collapsed;
    return WeightedGraph(max_index + 1, std::move(edges));
}

WeightedGraph parse_graph(std::string_view text, GraphFormat format, ParseStats* stats) {
    if (stats) *stats = ParseStats{};
    switch (format) {
        case GraphFormat::gset: return parse_gset(text);
        case GraphFormat::dimacs: return parse_dimacs_color(text, stats);
        case GraphFormat::edgelist: return parse_edge_list(text, stats);
    }
    throw Error(ErrorKind::argument, "unknown graph format");
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::io, "cannot open '" + path.string() + "'");
    std::ostringstream os;
    os << in.rdbuf();
    if (in.bad()) throw Error(ErrorKind::io, "read failed for '" + path.string() + "'");
    return os.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::io, "cannot write '" + path.string() + "'");
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw Error(ErrorKind::io, "write failed for '" + path.string() + "'");
}

WeightedGraph load_graph(const std::filesystem::path& path, GraphFormat format, ParseStats* stats) {
    return parse_graph(read_text_file(path), format, stats);
}

std::string serialize_gset(const WeightedGraph& g) {
    std::string out = std::to_string(g.node_count()) + " " + std::to_string(g.edge_count()) + "\n";
    char buf[64];
    for (const auto& e : g.edges()) {
        out += std::to_string(e.u + 1);
        out += ' ';
        out += std::to_string(e.v + 1);
        out += ' ';
        auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, e.weight);
        out.append(buf, ptr);
        out += '\n';
    }
    return out;
}

}  // namespace ros
