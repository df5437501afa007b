#pragma once

#include "aztec/graph.hpp"
#include "aztec/matrix.hpp"

namespace aztec {

/// Matrix-Tree spanning-tree count: determinant of the negative Laplacian
/// with the row and column of vertex 0 deleted. Exact big integer;
/// disconnected graphs yield 0. For folded parallel edges (weight w) this is
/// the multigraph count.
inline Int tree_count(const LatticeGraph& g) {
    if (g.directed) throw error("tree count expects an undirected graph");
    for (const auto& [k, w] : g.arcs) {
        (void)k;
        if (!is_integer(w) || w < 0) throw error("tree count expects nonnegative integer weights");
    }
    const int n = g.n();
    if (n <= 1) return Int(1);

    RatMat L(n - 1, n - 1);
    for (const auto& [k, w] : g.arcs) {
        int u = k.first, v = k.second;
        if (u == v) continue;  // loops do not affect spanning trees
        if (u >= 1) L.at(u - 1, u - 1) += w;
        if (u >= 1 && v >= 1) L.at(u - 1, v - 1) -= w;
    }
    Rat det = determinant(L);
    if (!is_integer(det)) throw error("tree count internal error: non-integer determinant");
    return det.get_num();
}

}  // namespace aztec
