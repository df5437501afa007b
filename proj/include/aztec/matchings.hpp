#pragma once

#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

#include "aztec/graph.hpp"

namespace aztec {

/// Sum of the weights of all perfect matchings (integer for integer weights).
using MatchingCount = Rat;

namespace detail {

/// Profile dynamic program over an arbitrary vertex order. State: bitmask of
/// "pending" (still unmatched) vertices among the active slots; a slot is
/// active while its vertex has unprocessed neighbors. Frontier width is the
/// peak number of active slots.
template <typename Num>
Num matching_profile_dp(const LatticeGraph& g, const std::vector<int>& order, int frontier_cap) {
    const int n = g.n();
    if (n == 0) return Num(1);
    if (n % 2 != 0) return Num(0);

    std::vector<int> pos(n);
    for (int t = 0; t < n; ++t) pos[order[t]] = t;

    // neighbor lists (ignoring loops) and release times
    std::vector<std::vector<std::pair<int, Rat>>> nbr(n);
    std::vector<int> last_use(n);
    for (int v = 0; v < n; ++v) last_use[v] = pos[v];
    for (const auto& [k, w] : g.arcs) {
        if (k.first == k.second) continue;  // loops never matter for matchings
        if (k.first > k.second) continue;
        nbr[k.first].emplace_back(k.second, w);
        nbr[k.second].emplace_back(k.first, w);
        last_use[k.first] = std::max(last_use[k.first], pos[k.second]);
        last_use[k.second] = std::max(last_use[k.second], pos[k.first]);
    }
    std::vector<std::vector<int>> release(n);
    for (int v = 0; v < n; ++v) release[last_use[v]].push_back(v);

    std::vector<int> slot_of(n, -1);
    std::vector<int> free_slots;
    int slots_in_use = 0, slot_count = 0;

    std::unordered_map<uint64_t, Num> states;
    states.reserve(1024);
    states[0] = Num(1);

    for (int t = 0; t < n; ++t) {
        int v = order[t];
        // allocate a slot for v
        int s;
        if (!free_slots.empty()) {
            s = free_slots.back();
            free_slots.pop_back();
        } else {
            s = slot_count++;
        }
        ++slots_in_use;
        if (slot_count > frontier_cap)
            throw error("graph too wide for the matching DP frontier cap");
        slot_of[v] = s;
        const uint64_t vbit = uint64_t(1) << s;

        std::unordered_map<uint64_t, Num> next;
        next.reserve(states.size() * 2);
        for (const auto& [mask, val] : states) {
            next[mask | vbit] += val;  // v stays pending
            for (const auto& [u, w] : nbr[v]) {
                if (pos[u] >= t) continue;
                const uint64_t ubit = uint64_t(1) << slot_of[u];
                if (mask & ubit) {
                    Num wt;
                    if constexpr (std::is_same_v<Num, Int>)
                        wt = w.get_num();
                    else
                        wt = w;
                    next[mask & ~ubit] += val * wt;
                }
            }
        }
        states.swap(next);

        // release slots whose vertices have no unprocessed neighbors left
        uint64_t dead = 0;
        for (int u : release[t]) {
            dead |= uint64_t(1) << slot_of[u];
            free_slots.push_back(slot_of[u]);
            slot_of[u] = -1;
            --slots_in_use;
        }
        if (dead) {
            std::unordered_map<uint64_t, Num> kept;
            kept.reserve(states.size());
            for (auto& [mask, val] : states)
                if (!(mask & dead)) kept.emplace(mask, std::move(val));
            states.swap(kept);
        }
    }
    auto it = states.find(0);
    return it == states.end() ? Num(0) : it->second;
}

inline std::vector<int> column_sweep_order(const LatticeGraph& g) {
    std::vector<int> order(g.n());
    for (int i = 0; i < g.n(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        const auto& pa = g.verts[a].p;
        const auto& pb = g.verts[b].p;
        if (pa.x() != pb.x()) return pa.x() < pb.x();
        if (pa.y() != pb.y()) return pa.y() < pb.y();
        return a < b;
    });
    return order;
}

template <typename Cb>
void enumerate_matchings_rec(const LatticeGraph& g,
                             const std::vector<std::vector<std::pair<int, Rat>>>& nbr,
                             std::vector<char>& matched, std::vector<std::pair<int, int>>& acc,
                             const Cb& cb) {
    int u = -1;
    for (int i = 0; i < g.n(); ++i)
        if (!matched[i]) {
            u = i;
            break;
        }
    if (u < 0) {
        cb(acc);
        return;
    }
    matched[u] = 1;
    for (const auto& [v, w] : nbr[u]) {
        (void)w;
        if (matched[v]) continue;
        matched[v] = 1;
        acc.emplace_back(u, v);
        enumerate_matchings_rec(g, nbr, matched, acc, cb);
        acc.pop_back();
        matched[v] = 0;
    }
    matched[u] = 0;
}

}  // namespace detail

/// Exact weighted perfect-matching count via the boundary-profile DP
/// sweeping columns in x order. Requires an undirected graph with lattice
/// coordinates; frontier_cap bounds the active-slot count.
inline MatchingCount count_matchings(const LatticeGraph& g, int frontier_cap = 28) {
    if (g.directed) throw error("matching count expects an undirected graph");
    for (const auto& [k, w] : g.arcs) {
        (void)k;
        if (w < 0) throw error("matching count expects nonnegative weights");
    }
    std::vector<int> order = detail::column_sweep_order(g);
    if (g.integer_weights()) {
        Int r = detail::matching_profile_dp<Int>(g, order, frontier_cap);
        return Rat(r);
    }
    return detail::matching_profile_dp<Rat>(g, order, frontier_cap);
}

/// Internal entry point used for quotient graphs, which carry their own
/// sweep order.
inline MatchingCount count_matchings_ordered(const LatticeGraph& g, const std::vector<int>& order,
                                             int frontier_cap = 28) {
    if (g.directed) throw error("matching count expects an undirected graph");
    if (g.integer_weights()) {
        Int r = detail::matching_profile_dp<Int>(g, order, frontier_cap);
        return Rat(r);
    }
    return detail::matching_profile_dp<Rat>(g, order, frontier_cap);
}

/// Calls cb once per perfect matching (edges as (u,v), u < v, sorted by u).
/// The cap guards combinatorial explosion; raise it deliberately when a test
/// needs a larger oracle.
template <typename Cb>
void enumerate_perfect_matchings(const LatticeGraph& g, const Cb& cb, int vertex_cap = 20) {
    if (g.directed) throw error("matching enumeration expects an undirected graph");
    if (g.n() > vertex_cap) throw error("matching enumeration size cap exceeded");
    if (g.n() % 2 != 0) return;
    std::vector<std::vector<std::pair<int, Rat>>> nbr(g.n());
    for (const auto& [k, w] : g.arcs)
        if (k.first < k.second) {
            nbr[k.first].emplace_back(k.second, w);
            nbr[k.second].emplace_back(k.first, w);
        }
    std::vector<char> matched(g.n(), 0);
    std::vector<std::pair<int, int>> acc;
    detail::enumerate_matchings_rec(g, nbr, matched, acc, cb);
}

/// Exhaustive oracle: recursion over the lowest-id unmatched vertex.
inline MatchingCount count_matchings_bruteforce(const LatticeGraph& g, int vertex_cap = 20) {
    Rat total(0);
    enumerate_perfect_matchings(
        g,
        [&](const std::vector<std::pair<int, int>>& m) {
            Rat w(1);
            for (auto [u, v] : m) w *= g.weight(u, v);
            total += w;
        },
        vertex_cap);
    return total;
}

}  // namespace aztec
