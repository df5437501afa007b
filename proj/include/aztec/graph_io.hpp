#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "aztec/graph.hpp"

namespace aztec {

/// Canonical text form. Vertices sorted by id, arcs lexicographically;
/// undirected graphs list each edge once with src <= dst.
inline std::string serialize(const LatticeGraph& g) {
    std::ostringstream os;
    os << "graph " << (g.directed ? "directed" : "undirected") << " " << g.n() << "\n";
    for (int i = 0; i < g.n(); ++i) {
        os << "v " << i;
        for (long c : g.verts[i].p.c) os << " " << c;
        if (g.verts[i].marked) os << " m";
        os << "\n";
    }
    for (const auto& [k, w] : g.arcs) {
        if (!g.directed && k.first > k.second) continue;
        os << "a " << k.first << " " << k.second << " " << w.get_num().get_str() << "/"
           << w.get_den().get_str() << "\n";
    }
    return os.str();
}

namespace detail {

[[noreturn]] inline void parse_fail(int line, int col, const std::string& msg) {
    std::ostringstream os;
    os << "parse error at line " << line << ", column " << col << ": " << msg;
    throw error(os.str());
}

}  // namespace detail

/// Parses the exchange format; `#` starts a comment. Errors carry
/// line/column diagnostics.
inline LatticeGraph parse(const std::string& text) {
    LatticeGraph g;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    bool header_seen = false;
    long declared = 0;
    std::vector<bool> has_vertex;

    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;

        if (!header_seen) {
            if (tok != "graph") detail::parse_fail(lineno, 1, "expected 'graph' header");
            std::string dir;
            if (!(ls >> dir >> declared) || (dir != "directed" && dir != "undirected") ||
                declared < 0)
                detail::parse_fail(lineno, 7, "malformed graph header");
            g.directed = dir == "directed";
            has_vertex.assign(declared, false);
            for (long i = 0; i < declared; ++i) g.add_vertex(LatticePoint(0, 0));
            header_seen = true;
            continue;
        }

        if (tok == "v") {
            long id = -1;
            if (!(ls >> id) || id < 0 || id >= declared)
                detail::parse_fail(lineno, 3, "vertex id out of range");
            if (has_vertex[id]) detail::parse_fail(lineno, 3, "duplicate vertex id");
            std::vector<long> coords;
            bool marked = false;
            std::string c;
            while (ls >> c) {
                if (c == "m") {
                    marked = true;
                    break;
                }
                try {
                    size_t used = 0;
                    long v = std::stol(c, &used);
                    if (used != c.size()) throw std::invalid_argument(c);
                    coords.push_back(v);
                } catch (const std::exception&) {
                    detail::parse_fail(lineno, 3, "bad coordinate '" + c + "'");
                }
            }
            if (coords.size() < 2) detail::parse_fail(lineno, 3, "vertex needs >= 2 coordinates");
            g.verts[id].p = LatticePoint(coords);
            g.verts[id].marked = marked;
            has_vertex[id] = true;
        } else if (tok == "a") {
            long u = -1, v = -1;
            std::string wtok;
            if (!(ls >> u >> v >> wtok)) detail::parse_fail(lineno, 3, "malformed arc line");
            if (u < 0 || u >= declared || v < 0 || v >= declared)
                detail::parse_fail(lineno, 3, "arc references unknown vertex id");
            if (wtok.find('/') == std::string::npos)
                detail::parse_fail(lineno, 3, "arc weight must be written p/q");
            Rat w;
            try {
                w = parse_rational(wtok);
            } catch (const error& e) {
                detail::parse_fail(lineno, 3, e.what());
            }
            if (w == 0) detail::parse_fail(lineno, 3, "zero-weight arcs may not be stored");
            if (g.directed)
                g.add_arc(static_cast<int>(u), static_cast<int>(v), w);
            else
                g.add_edge(static_cast<int>(u), static_cast<int>(v), w);
        } else {
            detail::parse_fail(lineno, 1, "unknown record '" + tok + "'");
        }
    }
    if (!header_seen) detail::parse_fail(lineno + 1, 1, "missing graph header");
    for (long i = 0; i < declared; ++i)
        if (!has_vertex[i])
            detail::parse_fail(lineno + 1, 1, "vertex " + std::to_string(i) + " not declared");
    if (!g.directed && !g.symmetric_weights())
        detail::parse_fail(lineno + 1, 1, "undirected graph with asymmetric weights");
    return g;
}

}  // namespace aztec
