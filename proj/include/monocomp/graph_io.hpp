#pragma once

#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "monocomp/graph.hpp"

namespace monocomp {

/// Parse failure with the 1-based line number where it was detected.
struct ParseError : std::runtime_error {
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_number(line) {}
    std::size_t line_number;
};

struct ColoredGraphFile {
    Graph graph;
    EdgeColoring coloring;  // r == 0 means the file carried no colors
};

namespace detail {

inline bool io_next_line(std::istream& in, std::string& line, std::size_t& lineno) {
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t i = line.find_first_not_of(" \t\r");
        if (i == std::string::npos) continue;  // skip blank lines
        if (line[i] == '#') continue;          // skip comments
        return true;
    }
    return false;
}

inline std::vector<long long> io_fields(const std::string& line, std::size_t lineno) {
    std::istringstream ss(line);
    std::vector<long long> out;
    long long x;
    while (ss >> x) out.push_back(x);
    std::string rest;
    if (ss.clear(), ss >> rest)
        throw ParseError(lineno, "unexpected token '" + rest + "'");
    return out;
}

}  // namespace detail

/**
 * Reads the plain-text graph format:
 *   line 1:  n m r        (r = 0 means no colors follow)
 *   then m lines, sorted: u v c   (or just "u v" when r = 0)
 * Vertices are 0-based with u < v; colors are 1-based. Blank lines and
 * '#' comments are permitted anywhere. Edges must be strictly increasing
 * in (u, v) order, matching what write_colored_graph emits.
 */
inline ColoredGraphFile read_colored_graph(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    if (!detail::io_next_line(in, line, lineno))
        throw ParseError(lineno == 0 ? 1 : lineno, "missing header");
    auto header = detail::io_fields(line, lineno);
    if (header.size() != 3)
        throw ParseError(lineno, "header must be 'n m r'");
    long long n = header[0], m = header[1], r = header[2];
    if (n < 0 || m < 0 || r < 0 || n > UINT32_MAX || r > 65535)
        throw ParseError(lineno, "header values out of range");
    const bool colored = r > 0;

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    std::vector<std::uint16_t> colors;
    if (colored) colors.reserve(static_cast<std::size_t>(m));

    Edge prev{0, 0};
    for (long long i = 0; i < m; ++i) {
        if (!detail::io_next_line(in, line, lineno))
            throw ParseError(lineno + 1, "expected " + std::to_string(m) + " edges, got " +
                                             std::to_string(i));
        auto f = detail::io_fields(line, lineno);
        if (f.size() != (colored ? 3u : 2u))
            throw ParseError(lineno, colored ? "edge line must be 'u v c'"
                                             : "edge line must be 'u v'");
        long long u = f[0], v = f[1];
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError(lineno, "vertex out of range");
        if (u >= v)
            throw ParseError(lineno, "edges must satisfy u < v");
        Edge e{static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v)};
        if (i > 0) {
            if (e == prev) throw ParseError(lineno, "duplicate edge");
            if (e < prev) throw ParseError(lineno, "edges out of order");
        }
        prev = e;
        edges.push_back(e);
        if (colored) {
            long long c = f[2];
            if (c < 1 || c > r) throw ParseError(lineno, "color out of range");
            colors.push_back(static_cast<std::uint16_t>(c));
        }
    }
    if (detail::io_next_line(in, line, lineno))
        throw ParseError(lineno, "trailing content after edge list");

    ColoredGraphFile out{Graph(static_cast<std::uint32_t>(n), std::move(edges)),
                         EdgeColoring{static_cast<int>(r), std::move(colors)}};
    return out;
}

inline ColoredGraphFile read_colored_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_colored_graph(in);
}

/// Writes the format read_colored_graph parses; round-trips byte-exactly.
inline void write_colored_graph(std::ostream& out, const Graph& g, const EdgeColoring* coloring) {
    if (coloring != nullptr) check_coloring(g, *coloring);
    const int r = coloring ? coloring->r : 0;
    out << g.vertex_count() << ' ' << g.edge_count() << ' ' << r << '\n';
    for (std::uint64_t i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edges()[i];
        out << e.u << ' ' << e.v;
        if (coloring) out << ' ' << coloring->colors[i];
        out << '\n';
    }
}

inline std::string colored_graph_to_string(const Graph& g, const EdgeColoring* coloring) {
    std::ostringstream ss;
    write_colored_graph(ss, g, coloring);
    return ss.str();
}

}  // namespace monocomp
