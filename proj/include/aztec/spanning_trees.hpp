#pragma once

#include <set>
#include <vector>

#include "aztec/graph.hpp"

namespace aztec {

/// A spanning tree as its sorted list of vertex-id pairs (u < v).
using SpanningTree = std::vector<std::pair<int, int>>;

struct TreeEnumCaps {
    int max_vertices = 14;
    long max_trees = 200000;
};

namespace detail {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

inline bool connectable(int n, const std::vector<std::pair<int, int>>& chosen,
                        const std::vector<std::pair<int, int>>& edges, size_t from) {
    Dsu d(n);
    int comps = n;
    for (const auto& [u, v] : chosen)
        if (d.unite(u, v)) --comps;
    for (size_t i = from; i < edges.size() && comps > 1; ++i)
        if (d.unite(edges[i].first, edges[i].second)) --comps;
    return comps == 1;
}

inline void enum_trees_rec(int n, const std::vector<std::pair<int, int>>& edges, size_t i,
                           Dsu dsu, std::vector<std::pair<int, int>>& chosen,
                           std::vector<SpanningTree>& out, long max_trees) {
    if (static_cast<int>(chosen.size()) == n - 1) {
        if (static_cast<long>(out.size()) >= max_trees)
            throw error("spanning tree enumeration cap exceeded");
        SpanningTree t = chosen;
        std::sort(t.begin(), t.end());
        out.push_back(std::move(t));
        return;
    }
    if (i == edges.size()) return;
    auto [u, v] = edges[i];
    // include edges[i] when it joins two components
    Dsu with = dsu;
    if (with.unite(u, v)) {
        chosen.push_back(edges[i]);
        enum_trees_rec(n, edges, i + 1, with, chosen, out, max_trees);
        chosen.pop_back();
    }
    // exclude edges[i] if a spanning tree is still reachable without it
    if (connectable(n, chosen, edges, i + 1))
        enum_trees_rec(n, edges, i + 1, dsu, chosen, out, max_trees);
}

}  // namespace detail

/// Exhaustive duplicate-free enumeration by contraction-deletion style
/// branching. Empty result for disconnected input.
inline std::vector<SpanningTree> enumerate_trees(const LatticeGraph& g,
                                                 TreeEnumCaps caps = {}) {
    if (g.directed) throw error("tree enumeration expects an undirected graph");
    if (g.n() > caps.max_vertices) throw error("spanning tree enumeration vertex cap exceeded");
    std::vector<SpanningTree> out;
    if (g.n() == 0) return out;
    std::vector<std::pair<int, int>> edges;
    for (const auto& [k, w] : g.arcs) {
        (void)w;
        if (k.first < k.second) edges.emplace_back(k.first, k.second);
    }
    if (!detail::connectable(g.n(), {}, edges, 0)) return out;
    std::vector<std::pair<int, int>> chosen;
    detail::enum_trees_rec(g.n(), edges, 0, detail::Dsu(g.n()), chosen, out, caps.max_trees);
    return out;
}

/// Filters enumerated trees by invariance under every generator.
inline long count_invariant_trees(const LatticeGraph& g, const std::vector<SymmetryMap>& gens,
                                  TreeEnumCaps caps = {}) {
    for (const auto& t : gens)
        if (t.perm.size() != static_cast<size_t>(g.n()) || !is_automorphism(g, t.perm))
            throw error("invariant tree count: generator is not an automorphism");
    auto trees = enumerate_trees(g, caps);
    long count = 0;
    for (const auto& tree : trees) {
        std::set<std::pair<int, int>> s(tree.begin(), tree.end());
        bool inv = true;
        for (const auto& t : gens) {
            for (const auto& [u, v] : tree) {
                int a = t.perm[u], b = t.perm[v];
                if (a > b) std::swap(a, b);
                if (!s.count({a, b})) {
                    inv = false;
                    break;
                }
            }
            if (!inv) break;
        }
        if (inv) ++count;
    }
    return count;
}

}  // namespace aztec
