#pragma once

#include <set>
#include <vector>

#include "aztec/graph.hpp"
#include "aztec/matchings.hpp"
#include "aztec/transforms.hpp"

namespace aztec {

/// Symmetry subgroups acting on the hole-punched squares (and their kin).
enum class SymGroup { H, HV, R2, R };

inline std::vector<SymmetryMap> group_generators(const LatticeGraph& g, SymGroup k) {
    switch (k) {
        case SymGroup::H: return {symmetry_map(g, SymmetryMap::Kind::h)};
        case SymGroup::HV:
            return {symmetry_map(g, SymmetryMap::Kind::h), symmetry_map(g, SymmetryMap::Kind::v)};
        case SymGroup::R2: return {symmetry_map(g, SymmetryMap::Kind::r2)};
        case SymGroup::R: return {symmetry_map(g, SymmetryMap::Kind::r)};
    }
    throw error("unknown symmetry group");
}

namespace detail {

inline bool matching_invariant(const std::vector<std::pair<int, int>>& m,
                               const std::vector<SymmetryMap>& gens) {
    std::set<std::pair<int, int>> s;
    for (auto [u, v] : m) s.insert({std::min(u, v), std::max(u, v)});
    for (const auto& t : gens)
        for (auto [u, v] : m) {
            int a = t.perm[u], b = t.perm[v];
            if (a > b) std::swap(a, b);
            if (!s.count({a, b})) return false;
        }
    return true;
}

/// Brute-force oracle: enumerate all perfect matchings and keep the
/// invariant ones.
inline Rat invariant_matchings_bruteforce(const LatticeGraph& g,
                                          const std::vector<SymmetryMap>& gens, int cap) {
    Rat total(0);
    enumerate_perfect_matchings(
        g,
        [&](const std::vector<std::pair<int, int>>& m) {
            if (!matching_invariant(m, gens)) return;
            Rat w(1);
            for (auto [u, v] : m) w *= g.weight(u, v);
            total += w;
        },
        cap);
    return total;
}

/// Reduction for a single reflection whose fixed vertices lie on one line:
/// an invariant matching must match the fixed vertices among themselves and
/// mirror the strict upper half, so
///   M_<s>(G) = M(<fixed>) * sum over matchings of the upper half of w(m)^2.
/// `upper` decides the positive side; crossing edges {v, s(v)} are not
/// supported (none occur in this corpus).
template <typename UpperFn>
Rat reflection_reduction(const LatticeGraph& g, const SymmetryMap& s, UpperFn upper,
                         int frontier_cap) {
    for (const auto& [k, w] : g.arcs) {
        (void)w;
        if (s.perm[k.first] == k.second && s.perm[k.second] == k.first && k.first != k.second)
            throw error("reflection reduction: unsupported crossing edge");
    }
    std::vector<int> fixed, up;
    for (int i = 0; i < g.n(); ++i) {
        if (s.perm[i] == i)
            fixed.push_back(i);
        else if (upper(i))
            up.push_back(i);
    }
    LatticeGraph axis = induced_subgraph(g, fixed);
    LatticeGraph upg = induced_subgraph(g, up);
    for (auto& [k, w] : upg.arcs) w *= w;  // edge and its mirror both used
    return count_matchings(axis, frontier_cap) * count_matchings(upg, frontier_cap);
}

/// Ring-wise sweep order for quotients of centrally symmetric graphs: all
/// redirected edges stay within adjacent max-norm rings about the center.
inline std::vector<int> ring_sweep_order(const LatticeGraph& g) {
    long sx = 0, sy = 0;
    if (g.n() > 0) {
        long xmin = g.verts[0].p.x(), xmax = xmin, ymin = g.verts[0].p.y(), ymax = ymin;
        for (const auto& v : g.verts) {
            xmin = std::min(xmin, v.p.x());
            xmax = std::max(xmax, v.p.x());
            ymin = std::min(ymin, v.p.y());
            ymax = std::max(ymax, v.p.y());
        }
        sx = xmin + xmax;
        sy = ymin + ymax;
    }
    auto ring = [&](int i) {
        return std::max(std::abs(2 * g.verts[i].p.x() - sx), std::abs(2 * g.verts[i].p.y() - sy));
    };
    std::vector<int> order(g.n());
    for (int i = 0; i < g.n(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (ring(a) != ring(b)) return ring(a) < ring(b);
        return canonical_less(g.verts[a].p, g.verts[b].p);
    });
    return order;
}

}  // namespace detail

/// Number (weighted sum) of perfect matchings invariant under the group.
/// Small graphs are settled by the brute-force filter; larger ones by the
/// structural reductions: axis-forced matchings for reflections, matchings
/// of the orbit graph for the rotation groups.
inline Rat count_invariant_matchings(const LatticeGraph& g, SymGroup group,
                                     int brute_threshold = 18, int frontier_cap = 28) {
    if (g.directed) throw error("invariant matching count expects an undirected graph");
    std::vector<SymmetryMap> gens = group_generators(g, group);

    if (g.n() <= brute_threshold)
        return detail::invariant_matchings_bruteforce(g, gens, brute_threshold);

    long sx = 0, sy = 0;
    {
        long xmin = g.verts[0].p.x(), xmax = xmin, ymin = g.verts[0].p.y(), ymax = ymin;
        for (const auto& v : g.verts) {
            xmin = std::min(xmin, v.p.x());
            xmax = std::max(xmax, v.p.x());
            ymin = std::min(ymin, v.p.y());
            ymax = std::max(ymax, v.p.y());
        }
        sx = xmin + xmax;
        sy = ymin + ymax;
    }

    switch (group) {
        case SymGroup::H:
            return detail::reflection_reduction(
                g, gens[0], [&](int i) { return 2 * g.verts[i].p.y() > sy; }, frontier_cap);
        case SymGroup::HV: {
            // fixed row of h must carry a v-invariant matching; the upper half
            // (with squared weights) must carry a v-invariant matching
            const SymmetryMap& h = gens[0];
            for (const auto& [k, w] : g.arcs) {
                (void)w;
                if (h.perm[k.first] == k.second && k.first != k.second &&
                    h.perm[k.second] == k.first)
                    throw error("invariant matchings: unsupported crossing edge");
            }
            std::vector<int> fixed, up;
            for (int i = 0; i < g.n(); ++i) {
                if (h.perm[i] == i)
                    fixed.push_back(i);
                else if (2 * g.verts[i].p.y() > sy)
                    up.push_back(i);
            }
            LatticeGraph axis = induced_subgraph(g, fixed);
            Rat axis_total(0);
            {
                std::vector<SymmetryMap> vg = {symmetry_map(axis, SymmetryMap::Kind::v)};
                axis_total = detail::invariant_matchings_bruteforce(
                    axis, vg, std::max(brute_threshold, axis.n()));
            }
            if (axis_total == 0) return Rat(0);
            LatticeGraph upg = induced_subgraph(g, up);
            for (auto& [k, w] : upg.arcs) w *= w;
            SymmetryMap v_up = symmetry_map(upg, SymmetryMap::Kind::v);
            long usx = 0;
            {
                long xmin = upg.verts[0].p.x(), xmax = xmin;
                for (const auto& vv : upg.verts) {
                    xmin = std::min(xmin, vv.p.x());
                    xmax = std::max(xmax, vv.p.x());
                }
                usx = xmin + xmax;
            }
            Rat upper_total = detail::reflection_reduction(
                upg, v_up, [&](int i) { return 2 * upg.verts[i].p.x() > usx; }, frontier_cap);
            return axis_total * upper_total;
        }
        case SymGroup::R2:
        case SymGroup::R: {
            // free action with no intra-orbit edges: invariant matchings are
            // exactly the matchings of the orbit graph
            const SymmetryMap& t = gens[0];
            if (t.fixed_count() != 0)
                throw error("invariant matchings: rotation with fixed vertices unsupported");
            LatticeGraph q = quotient_by_group(g, gens);
            if (q.directed) throw error("invariant matchings: asymmetric quotient");
            for (const auto& [k, w] : q.arcs) {
                (void)w;
                if (k.first == k.second)
                    throw error("invariant matchings: edge inside an orbit unsupported");
            }
            return count_matchings_ordered(q, detail::ring_sweep_order(q), frontier_cap);
        }
    }
    throw error("unknown symmetry group");
}

}  // namespace aztec
