#pragma once

#include <vector>

#include "aztec/graph.hpp"

namespace aztec {

/// Output of the matching factorization split: M(G) = 2^k M(g_plus) M(g_minus).
struct AxisSplit {
    LatticeGraph g_plus;
    LatticeGraph g_minus;
    int k = 0;
};

namespace detail {

inline SymmetryMap coordinate_h_map(const LatticeGraph& g) {
    SymmetryMap t;
    t.kind = SymmetryMap::Kind::h;
    t.perm.assign(g.n(), -1);
    std::map<LatticePoint, int> pos;
    for (int i = 0; i < g.n(); ++i) pos[g.verts[i].p] = i;
    for (int i = 0; i < g.n(); ++i) {
        auto it = pos.find(LatticePoint(g.verts[i].p.x(), -g.verts[i].p.y()));
        if (it == pos.end()) throw error("graph is not symmetric about the horizontal axis");
        t.perm[i] = it->second;
    }
    if (!is_automorphism(g, t.perm))
        throw error("horizontal reflection is not a weight-preserving automorphism");
    return t;
}

}  // namespace detail

/// The factorization-theorem split of a bipartite planar graph symmetric
/// about the horizontal axis y = 0 (callers transport other axes to this
/// frame first). Axis vertices labeled left to right a_1,b_1,...,a_k,b_k;
/// with the proper 2-coloring normalized so a_1 is white:
///   (i)  edges above the axis at white a_i / black b_j are removed,
///   (ii) edges below the axis at black a_i / white b_j are removed,
///   (iii) edges lying along the axis have their weight halved;
/// g_plus is induced by the upper vertices, black a_i's and white b_j's,
/// g_minus by the lower vertices, white a_i's and black b_j's.
inline AxisSplit factorization_split(const LatticeGraph& g, const SymmetryMap& axis) {
    if (g.directed) throw error("factorization split expects an undirected graph");
    if (axis.perm.size() != static_cast<size_t>(g.n()) || !is_automorphism(g, axis.perm))
        throw error("axis map is not an automorphism");
    for (int i = 0; i < g.n(); ++i) {
        bool fixed = axis.perm[i] == i;
        if (fixed != (g.verts[i].p.y() == 0))
            throw error("axis map must be the horizontal reflection (fixed set = y = 0)");
    }

    // axis vertices left to right
    std::vector<int> axis_ids;
    for (int i = 0; i < g.n(); ++i)
        if (g.verts[i].p.y() == 0) axis_ids.push_back(i);
    std::sort(axis_ids.begin(), axis_ids.end(),
              [&](int a, int b) { return g.verts[a].p.x() < g.verts[b].p.x(); });
    if (axis_ids.empty()) throw error("no vertices on the symmetry axis");
    if (axis_ids.size() % 2 != 0) throw error("odd number of axis vertices");
    const int k = static_cast<int>(axis_ids.size()) / 2;

    // the axis must be a cut set: no edge may cross it
    for (const auto& [key, w] : g.arcs) {
        (void)w;
        long yu = g.verts[key.first].p.y(), yv = g.verts[key.second].p.y();
        if ((yu > 0 && yv < 0) || (yu < 0 && yv > 0))
            throw error("axis vertices do not form a cut set");
    }

    auto coloring = bipartite_coloring(g);
    if (!coloring) throw error("factorization split requires a bipartite graph");
    std::vector<int> color = *coloring;
    // normalize: a_1 white (white = 0)
    if (color[axis_ids[0]] != 0)
        for (auto& c : color) c = 1 - c;
    // a_i at even positions, b_i at odd positions along the axis
    std::vector<char> is_a(g.n(), 0);
    for (size_t i = 0; i < axis_ids.size(); ++i)
        if (i % 2 == 0) is_a[axis_ids[i]] = 1;

    auto white = [&](int v) { return color[v] == 0; };
    auto on_axis = [&](int v) { return g.verts[v].p.y() == 0; };

    // G': drop rule (i)/(ii) edges, halve rule (iii) edges
    LatticeGraph gp = g;
    gp.arcs.clear();
    for (const auto& [key, w] : g.arcs) {
        int u = key.first, v = key.second;
        if (u > v) continue;  // handle each undirected edge once
        long yu = g.verts[u].p.y(), yv = g.verts[v].p.y();
        Rat wt = w;
        bool drop = false;
        for (int side = 0; side < 2; ++side) {
            int av = side == 0 ? u : v;
            int ov = side == 0 ? v : u;
            if (!on_axis(av)) continue;
            long oy = g.verts[ov].p.y();
            bool above = oy > 0, below = oy < 0;
            if (above && ((is_a[av] && white(av)) || (!is_a[av] && !white(av)))) drop = true;
            if (below && ((is_a[av] && !white(av)) || (!is_a[av] && white(av)))) drop = true;
        }
        if (yu == 0 && yv == 0 && u != v) wt /= 2;
        if (!drop) gp.add_edge(u, v, wt);
    }

    auto part = [&](bool plus) {
        std::vector<int> ids;
        for (int i = 0; i < g.n(); ++i) {
            long y = g.verts[i].p.y();
            if (plus ? y > 0 : y < 0) ids.push_back(i);
            if (y == 0) {
                bool take_plus = (is_a[i] && !white(i)) || (!is_a[i] && white(i));
                if (plus == take_plus) ids.push_back(i);
            }
        }
        return sort_canonical(induced_subgraph(gp, ids));
    };

    return AxisSplit{part(true), part(false), k};
}

/// Rotates a diagonally symmetric graph so the main diagonal becomes the
/// horizontal axis: (x, y) -> (x + y, y - x).
inline LatticeGraph rotate_diag_to_horizontal(const LatticeGraph& g) {
    return sort_canonical(transform_coords(g, [](const LatticePoint& p) {
        return LatticePoint(p.x() + p.y(), p.y() - p.x());
    }));
}

/// Rotates a vertically symmetric graph so the vertical axis becomes the
/// horizontal one: (x, y) -> (y, -x).
inline LatticeGraph rotate_vertical_to_horizontal(const LatticeGraph& g) {
    return sort_canonical(
        transform_coords(g, [](const LatticePoint& p) { return LatticePoint(p.y(), -p.x()); }));
}

/// Splits a graph across the main diagonal (transported to the horizontal
/// frame internally).
inline AxisSplit split_across_diagonal(const LatticeGraph& g) {
    LatticeGraph r = rotate_diag_to_horizontal(g);
    return factorization_split(r, detail::coordinate_h_map(r));
}

inline AxisSplit split_across_horizontal(const LatticeGraph& g) {
    return factorization_split(g, detail::coordinate_h_map(g));
}

inline AxisSplit split_across_vertical(const LatticeGraph& g) {
    LatticeGraph r = rotate_vertical_to_horizontal(g);
    return factorization_split(r, detail::coordinate_h_map(r));
}

}  // namespace aztec
