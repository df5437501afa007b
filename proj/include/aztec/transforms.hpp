#pragma once

#include <map>
#include <set>
#include <vector>

#include "aztec/graph.hpp"

namespace aztec {

/// Coordinate-induced symmetry of the bounding box: h/v reflections, the
/// quarter turn r, the half turn r2, and the diagonal reflection. Stored
/// coordinates are doubled, so bounding-box centers are exact integers.
inline SymmetryMap symmetry_map(const LatticeGraph& g, SymmetryMap::Kind kind) {
    if (g.n() == 0) return SymmetryMap{kind, {}};
    for (const auto& v : g.verts)
        if (v.p.dim() != 2) throw error("symmetry maps are 2D-only");
    long xmin = g.verts[0].p.x(), xmax = xmin, ymin = g.verts[0].p.y(), ymax = ymin;
    for (const auto& v : g.verts) {
        xmin = std::min(xmin, v.p.x());
        xmax = std::max(xmax, v.p.x());
        ymin = std::min(ymin, v.p.y());
        ymax = std::max(ymax, v.p.y());
    }
    const long sx = xmin + xmax, sy = ymin + ymax;  // twice the center
    auto image = [&](const LatticePoint& p) -> LatticePoint {
        long x = p.x(), y = p.y();
        switch (kind) {
            case SymmetryMap::Kind::h: return LatticePoint(x, sy - y);
            case SymmetryMap::Kind::v: return LatticePoint(sx - x, y);
            case SymmetryMap::Kind::r2: return LatticePoint(sx - x, sy - y);
            case SymmetryMap::Kind::r: {
                // quarter turn about the bbox center; requires sx, sy parity
                // compatible so images stay on the lattice
                long cx2 = sx, cy2 = sy;  // doubled center in stored scale
                return LatticePoint((cx2 - (2 * y - cy2)) / 2, (cy2 + (2 * x - cx2)) / 2);
            }
            case SymmetryMap::Kind::diag: {
                long cx2 = sx, cy2 = sy;
                return LatticePoint((cx2 + (2 * y - cy2)) / 2, (cy2 + (2 * x - cx2)) / 2);
            }
            default: throw error("unsupported symmetry kind");
        }
    };

    std::map<LatticePoint, int> pos;
    for (int i = 0; i < g.n(); ++i) pos[g.verts[i].p] = i;
    SymmetryMap t;
    t.kind = kind;
    t.perm.assign(g.n(), -1);
    for (int i = 0; i < g.n(); ++i) {
        LatticePoint q = image(g.verts[i].p);
        auto it = pos.find(q);
        if (it == pos.end())
            throw error("requested symmetry does not preserve the vertex set");
        t.perm[i] = it->second;
    }
    if (!is_automorphism(g, t.perm))
        throw error("requested symmetry is not a weight-preserving automorphism");
    return t;
}

/// Orbit graph of the group generated by the given automorphisms. Vertices
/// are orbits (represented by their smallest member, which also supplies the
/// coordinates); the weight from orbit O1 to orbit O2 sums the weights from
/// a fixed representative of O1 into all members of O2. The output is
/// undirected exactly when that weight map comes out symmetric.
inline LatticeGraph quotient_by_group(const LatticeGraph& g,
                                      const std::vector<SymmetryMap>& generators) {
    for (const auto& t : generators)
        if (t.perm.size() != static_cast<size_t>(g.n()) || !is_automorphism(g, t.perm))
            throw error("quotient generator is not an automorphism");

    // orbit partition
    std::vector<int> orbit(g.n(), -1);
    std::vector<int> reps;
    for (int s = 0; s < g.n(); ++s) {
        if (orbit[s] >= 0) continue;
        int id = static_cast<int>(reps.size());
        reps.push_back(s);
        std::vector<int> stack{s};
        orbit[s] = id;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (const auto& t : generators) {
                int v = t.perm[u];
                if (orbit[v] < 0) {
                    orbit[v] = id;
                    stack.push_back(v);
                }
            }
        }
    }

    LatticeGraph q;
    for (int r : reps) q.add_vertex(g.verts[r].p, g.verts[r].marked);
    std::map<std::pair<int, int>, Rat> w;
    for (size_t o = 0; o < reps.size(); ++o) {
        int rep = reps[o];
        for (auto& [v, wt] : g.out_neighbors(rep)) w[{static_cast<int>(o), orbit[v]}] += wt;
    }
    bool symmetric = true;
    for (const auto& [k, wt] : w) {
        auto it = w.find({k.second, k.first});
        if (it == w.end() || it->second != wt) {
            symmetric = false;
            break;
        }
    }
    q.directed = !symmetric;
    for (const auto& [k, wt] : w)
        if (wt != 0) q.add_arc(k.first, k.second, wt);
    return q;
}

namespace detail {

/// For an induced unit-grid subgraph: counts fully present unit cells and
/// checks (via Euler's formula, per connected component) that every bounded
/// face is a unit square. Returns the cell centers in stored coordinates.
inline std::vector<LatticePoint> grid_unit_cells_checked(const LatticeGraph& g) {
    if (g.directed) throw error("grid transforms expect an undirected graph");
    std::map<LatticePoint, int> pos;
    for (int i = 0; i < g.n(); ++i) {
        if (g.verts[i].p.dim() != 2) throw error("grid transforms are 2D-only");
        pos[g.verts[i].p] = i;
    }
    long edge_count = 0;
    for (const auto& [k, w] : g.arcs) {
        if (w != 1) throw error("grid transforms expect unit edge weights");
        if (k.first > k.second) continue;
        const auto& a = g.verts[k.first].p;
        const auto& b = g.verts[k.second].p;
        long dx = std::abs(a.x() - b.x()), dy = std::abs(a.y() - b.y());
        bool unit = (dx == 2 && dy == 0) || (dx == 0 && dy == 2);
        if (!unit) throw error("input is not a unit-grid subgraph");
        ++edge_count;
    }
    // induced: every unit-distance pair must be an edge
    for (int i = 0; i < g.n(); ++i) {
        const auto& p = g.verts[i].p;
        for (auto [dx, dy] : {std::pair<long, long>{2, 0}, {0, 2}}) {
            auto it = pos.find(LatticePoint(p.x() + dx, p.y() + dy));
            if (it != pos.end() && !g.has_arc(i, it->second))
                throw error("input is not an induced grid subgraph");
        }
    }
    std::vector<LatticePoint> cells;
    for (int i = 0; i < g.n(); ++i) {
        const auto& p = g.verts[i].p;  // cell with p as lower-left corner
        auto c1 = pos.find(LatticePoint(p.x() + 2, p.y()));
        auto c2 = pos.find(LatticePoint(p.x(), p.y() + 2));
        auto c3 = pos.find(LatticePoint(p.x() + 2, p.y() + 2));
        if (c1 != pos.end() && c2 != pos.end() && c3 != pos.end())
            cells.emplace_back(p.x() + 1, p.y() + 1);
    }
    // Euler per component: bounded faces = E - V + components; all unit iff
    // equal to the unit-cell count
    long components = static_cast<long>(connected_components(g).size());
    long bounded = edge_count - g.n() + components;
    if (bounded != static_cast<long>(cells.size()))
        throw error("a bounded face is not a unit square");
    return cells;
}

}  // namespace detail

/// Temperley refinement: original vertices, edge midpoints, and face centers
/// of a unit-grid subgraph, joined by the incidence half-steps. For the
/// n x n grid this is the (2n-1) x (2n-1) grid at half spacing.
inline LatticeGraph temperley_refinement(const LatticeGraph& g) {
    std::vector<LatticePoint> cells = detail::grid_unit_cells_checked(g);
    std::vector<LatticePoint> pts;
    for (const auto& v : g.verts) pts.push_back(v.p);
    for (const auto& [k, w] : g.arcs) {
        (void)w;
        if (k.first > k.second) continue;
        const auto& a = g.verts[k.first].p;
        const auto& b = g.verts[k.second].p;
        pts.emplace_back((a.x() + b.x()) / 2, (a.y() + b.y()) / 2);
    }
    for (const auto& c : cells) pts.push_back(c);
    // incidences are exactly the unit steps of the refined (half-spacing) grid
    return points_with_unit_steps(std::move(pts), 1);
}

/// Inner dual: one vertex per bounded (unit-square) face at the face center;
/// faces sharing a grid edge are adjacent.
inline LatticeGraph inner_dual(const LatticeGraph& g) {
    std::vector<LatticePoint> cells = detail::grid_unit_cells_checked(g);
    std::sort(cells.begin(), cells.end(), canonical_less);
    LatticeGraph d;
    std::map<LatticePoint, int> pos;
    for (auto& c : cells) pos[c] = d.add_vertex(c);
    for (int i = 0; i < d.n(); ++i) {
        const auto& p = d.verts[i].p;
        for (auto [dx, dy] : {std::pair<long, long>{2, 0}, {0, 2}}) {
            auto it = pos.find(LatticePoint(p.x() + dx, p.y() + dy));
            if (it != pos.end()) d.add_edge(i, it->second);
        }
    }
    return d;
}

/// True when vertex v touches the infinite face of the grid subgraph: at
/// least one of its four incident unit cells is not a bounded face.
inline bool on_infinite_face(const LatticeGraph& g, int v) {
    std::set<LatticePoint> cells;
    for (const auto& c : detail::grid_unit_cells_checked(g)) cells.insert(c);
    const auto& p = g.verts[v].p;
    for (auto [dx, dy] :
         {std::pair<long, long>{1, 1}, {1, -1}, {-1, 1}, {-1, -1}})
        if (!cells.count(LatticePoint(p.x() + dx, p.y() + dy))) return true;
    return false;
}

/// g with vertex v deleted (canonical reordering).
inline LatticeGraph delete_vertex(const LatticeGraph& g, int v) {
    std::vector<int> keep;
    for (int i = 0; i < g.n(); ++i)
        if (i != v) keep.push_back(i);
    return sort_canonical(induced_subgraph(g, keep));
}

}  // namespace aztec
