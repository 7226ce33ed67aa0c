#pragma once

#include <charconv>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "nwd/colored_graph.hpp"
#include "nwd/errors.hpp"
#include "nwd/graph.hpp"

namespace nwd {

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

inline long long parse_int(std::string_view tok, int line) {
    long long value = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || p != tok.data() + tok.size())
        throw ParseError(line, "expected integer, got '" + std::string(tok) + "'");
    return value;
}

}  // namespace detail

// Edge-list text format: optional header `p <n> <m>`, then one `u v` pair per
// line (0-based, u != v, each edge once). DIMACS `.col` style (`p edge n m`,
// `e u v` 1-based, `c` comments) is auto-detected and converted.
inline Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool dimacs = false;
    bool have_header = false;
    long long n = -1, m_declared = -1;
    std::vector<std::pair<int, int>> edges;
    int max_seen = -1;

    while (std::getline(in, line)) {
        ++lineno;
        auto toks = detail::split_ws(line);
        if (toks.empty()) continue;
        if (toks[0] == "c" && dimacs) continue;
        if (toks[0] == "p") {
            if (have_header) throw ParseError(lineno, "duplicate header");
            if (!edges.empty()) throw ParseError(lineno, "header after edges");
            if (toks.size() == 4 && toks[1] == "edge") {
                dimacs = true;
                n = detail::parse_int(toks[2], lineno);
                m_declared = detail::parse_int(toks[3], lineno);
            } else if (toks.size() == 3) {
                n = detail::parse_int(toks[1], lineno);
                m_declared = detail::parse_int(toks[2], lineno);
            } else {
                throw ParseError(lineno, "malformed header");
            }
            if (n < 0 || m_declared < 0) throw ParseError(lineno, "negative header value");
            have_header = true;
            continue;
        }
        if (toks[0] == "c" && !have_header) {
            // DIMACS files may start with comments before the p line
            dimacs = true;
            continue;
        }
        long long u, v;
        if (dimacs) {
            if (toks.size() != 3 || toks[0] != "e") throw ParseError(lineno, "malformed edge line");
            u = detail::parse_int(toks[1], lineno) - 1;
            v = detail::parse_int(toks[2], lineno) - 1;
        } else {
            if (toks.size() != 2) throw ParseError(lineno, "malformed edge line");
            u = detail::parse_int(toks[0], lineno);
            v = detail::parse_int(toks[1], lineno);
        }
        if (u < 0 || v < 0) throw ParseError(lineno, "negative vertex id");
        if (u == v) throw ParseError(lineno, "self-loop");
        if (have_header && (u >= n || v >= n)) throw ParseError(lineno, "vertex id exceeds header");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        max_seen = std::max(max_seen, static_cast<int>(std::max(u, v)));
    }
    if (!have_header) n = max_seen + 1;
    if (m_declared >= 0 && m_declared != static_cast<long long>(edges.size()))
        throw ParseError(lineno, "edge count differs from header");
    // duplicate detection with line attribution
    {
        std::vector<std::pair<int, int>> canon;
        canon.reserve(edges.size());
        for (auto [u, v] : edges) canon.emplace_back(std::min(u, v), std::max(u, v));
        std::sort(canon.begin(), canon.end());
        auto dup = std::adjacent_find(canon.begin(), canon.end());
        if (dup != canon.end())
            throw ParseError(lineno, "duplicate edge " + std::to_string(dup->first) + " " +
                                         std::to_string(dup->second));
    }
    return Graph::from_edges(static_cast<int>(n), edges);
}

// Canonical form: header, then `u v` with u < v, sorted lexicographically.
inline std::string serialize_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "p " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

// Colour file: one `vertex color_index` pair per line.
inline std::vector<int> parse_colors(const std::string& text, int n) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::vector<int> colors(static_cast<std::size_t>(n), kUncolored);
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = detail::split_ws(line);
        if (toks.empty()) continue;
        if (toks.size() != 2) throw ParseError(lineno, "expected 'vertex color_index'");
        long long v = detail::parse_int(toks[0], lineno);
        long long c = detail::parse_int(toks[1], lineno);
        if (v < 0 || v >= n) throw ParseError(lineno, "vertex id out of range");
        if (c < 0) throw ParseError(lineno, "negative color index");
        if (colors[static_cast<std::size_t>(v)] != kUncolored)
            throw ParseError(lineno, "vertex colored twice");
        colors[static_cast<std::size_t>(v)] = static_cast<int>(c);
    }
    return colors;
}

}  // namespace nwd
