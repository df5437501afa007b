#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "aztec/matrix.hpp"
#include "aztec/rational.hpp"

namespace aztec {

/// Lattice coordinates stored at double resolution: a stored value c stands
/// for the coordinate c/2, so (Z+1/2)^2 families use odd stored values and
/// integer lattices use even ones.
struct LatticePoint {
    std::vector<long> c;

    LatticePoint() = default;
    LatticePoint(long x, long y) : c{x, y} {}
    explicit LatticePoint(std::vector<long> coords) : c(std::move(coords)) {}

    size_t dim() const { return c.size(); }
    long x() const { return c[0]; }
    long y() const { return c[1]; }

    friend bool operator==(const LatticePoint& a, const LatticePoint& b) { return a.c == b.c; }
    friend bool operator<(const LatticePoint& a, const LatticePoint& b) { return a.c < b.c; }
};

/// Row-major order used by every 2D builder: y descending, then x ascending.
inline bool canonical_less(const LatticePoint& a, const LatticePoint& b) {
    if (a.dim() == 2 && b.dim() == 2) {
        if (a.y() != b.y()) return a.y() > b.y();
        return a.x() < b.x();
    }
    return a.c < b.c;
}

/// Weighted directed multigraph on lattice points; parallel edges are folded
/// into summed rational weights, loops allowed. Undirected graphs keep the
/// weight map symmetric. Immutable by convention once a builder returns it.
struct LatticeGraph {
    struct Vertex {
        LatticePoint p;
        bool marked = false;
    };

    bool directed = false;
    std::vector<Vertex> verts;
    std::map<std::pair<int, int>, Rat> arcs;

    int n() const { return static_cast<int>(verts.size()); }

    int add_vertex(LatticePoint p, bool marked = false) {
        verts.push_back({std::move(p), marked});
        return n() - 1;
    }

    void check_ids(int u, int v) const {
        if (u < 0 || v < 0 || u >= n() || v >= n()) throw error("vertex id out of range");
    }

    /// Adds (accumulates) a directed arc; a zero total erases the entry.
    void add_arc(int u, int v, const Rat& w) {
        check_ids(u, v);
        if (w == 0) return;
        auto key = std::make_pair(u, v);
        auto it = arcs.find(key);
        if (it == arcs.end()) {
            arcs.emplace(key, w);
        } else {
            it->second += w;
            if (it->second == 0) arcs.erase(it);
        }
    }

    /// Adds an undirected edge (both arc directions); u == v adds a loop.
    void add_edge(int u, int v, const Rat& w = Rat(1)) {
        add_arc(u, v, w);
        if (u != v) add_arc(v, u, w);
    }

    Rat weight(int u, int v) const {
        auto it = arcs.find({u, v});
        return it == arcs.end() ? Rat(0) : it->second;
    }

    bool has_arc(int u, int v) const { return arcs.count({u, v}) != 0; }

    std::vector<std::pair<int, Rat>> out_neighbors(int u) const {
        std::vector<std::pair<int, Rat>> r;
        for (auto it = arcs.lower_bound({u, 0}); it != arcs.end() && it->first.first == u; ++it)
            r.emplace_back(it->first.second, it->second);
        return r;
    }

    /// Undirected edges as (u, v, w) with u <= v; loops once.
    std::vector<std::tuple<int, int, Rat>> edges() const {
        std::vector<std::tuple<int, int, Rat>> r;
        for (const auto& [k, w] : arcs)
            if (k.first <= k.second) r.emplace_back(k.first, k.second, w);
        return r;
    }

    RatMat adjacency() const {
        RatMat a(n(), n());
        for (const auto& [k, w] : arcs) a.at(k.first, k.second) = w;
        return a;
    }

    bool symmetric_weights() const {
        for (const auto& [k, w] : arcs)
            if (weight(k.second, k.first) != w) return false;
        return true;
    }

    bool integer_weights() const {
        for (const auto& [k, w] : arcs)
            if (!is_integer(w)) return false;
        return true;
    }

    int find_vertex(const LatticePoint& p) const {
        for (int i = 0; i < n(); ++i)
            if (verts[i].p == p) return i;
        return -1;
    }
};

/// A vertex permutation that preserves arcs and weights.
struct SymmetryMap {
    enum class Kind { h, v, r, r2, diag, other };
    Kind kind = Kind::other;
    std::vector<int> perm;

    int order() const {
        std::vector<int> cur(perm.size());
        for (size_t i = 0; i < perm.size(); ++i) cur[i] = static_cast<int>(i);
        for (int k = 1; k <= 8; ++k) {
            bool id = true;
            for (size_t i = 0; i < perm.size(); ++i) {
                cur[i] = perm[cur[i]];
                if (cur[i] != static_cast<int>(i)) id = false;
            }
            if (id) return k;
        }
        return -1;
    }

    int fixed_count() const {
        int c = 0;
        for (size_t i = 0; i < perm.size(); ++i)
            if (perm[i] == static_cast<int>(i)) ++c;
        return c;
    }
};

inline bool is_automorphism(const LatticeGraph& g, const std::vector<int>& perm) {
    if (perm.size() != static_cast<size_t>(g.n())) return false;
    std::vector<char> seen(g.n(), 0);
    for (int v : perm) {
        if (v < 0 || v >= g.n() || seen[v]) return false;
        seen[v] = 1;
    }
    // the permutation is bijective, so mapping every arc onto an arc of
    // equal weight makes the arc map a weight-preserving bijection
    for (const auto& [k, w] : g.arcs)
        if (g.weight(perm[k.first], perm[k.second]) != w) return false;
    return true;
}

inline std::vector<std::vector<int>> connected_components(const LatticeGraph& g) {
    std::vector<int> comp(g.n(), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < g.n(); ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s}, members;
        comp[s] = static_cast<int>(out.size());
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            members.push_back(u);
            for (auto& [v, w] : g.out_neighbors(u)) {
                (void)w;
                if (comp[v] < 0) {
                    comp[v] = comp[s];
                    stack.push_back(v);
                }
            }
        }
        // treat arcs as undirected for reachability
        out.push_back(members);
    }
    // merge components connected by reverse-only arcs (directed graphs)
    if (g.directed) {
        std::vector<int> parent(g.n());
        for (int i = 0; i < g.n(); ++i) parent[i] = i;
        std::function<int(int)> find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& [k, w] : g.arcs) {
            (void)w;
            parent[find(k.first)] = find(k.second);
        }
        std::map<int, std::vector<int>> groups;
        for (int i = 0; i < g.n(); ++i) groups[find(i)].push_back(i);
        out.clear();
        for (auto& [root, members] : groups) out.push_back(members);
    }
    return out;
}

inline bool is_connected(const LatticeGraph& g) {
    return g.n() == 0 || connected_components(g).size() == 1;
}

/// Proper 2-coloring (0/1) or nullopt when an odd cycle / loop exists.
inline std::optional<std::vector<int>> bipartite_coloring(const LatticeGraph& g) {
    std::vector<int> color(g.n(), -1);
    for (int s = 0; s < g.n(); ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (auto& [v, w] : g.out_neighbors(u)) {
                (void)w;
                if (v == u) return std::nullopt;
                if (color[v] < 0) {
                    color[v] = 1 - color[u];
                    stack.push_back(v);
                } else if (color[v] == color[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

/// Induced subgraph on `ids` (old ids, in the given order); the i-th output
/// vertex is ids[i].
inline LatticeGraph induced_subgraph(const LatticeGraph& g, const std::vector<int>& ids) {
    LatticeGraph out;
    out.directed = g.directed;
    std::vector<int> newid(g.n(), -1);
    for (size_t i = 0; i < ids.size(); ++i) {
        newid[ids[i]] = static_cast<int>(i);
        out.add_vertex(g.verts[ids[i]].p, g.verts[ids[i]].marked);
    }
    for (const auto& [k, w] : g.arcs) {
        int u = newid[k.first], v = newid[k.second];
        if (u >= 0 && v >= 0) out.add_arc(u, v, w);
    }
    return out;
}

/// Applies a coordinate transform, keeping vertex order.
template <typename Fn>
inline LatticeGraph transform_coords(const LatticeGraph& g, Fn&& fn) {
    LatticeGraph out = g;
    for (auto& v : out.verts) v.p = fn(v.p);
    return out;
}

/// Graph on the given 2D points with axis-parallel steps of the given stored
/// length, vertices in canonical order. Unit steps in true scale use step 2;
/// the Temperley refinement uses step 1.
inline LatticeGraph points_with_unit_steps(std::vector<LatticePoint> pts, long step) {
    std::sort(pts.begin(), pts.end(), canonical_less);
    LatticeGraph g;
    std::map<LatticePoint, int> idx;
    for (auto& p : pts) idx[p] = g.add_vertex(p);
    for (int i = 0; i < g.n(); ++i) {
        const auto& p = g.verts[i].p;
        for (auto [dx, dy] : {std::pair<long, long>{step, 0}, {0, step}}) {
            auto it = idx.find(LatticePoint(p.x() + dx, p.y() + dy));
            if (it != idx.end()) g.add_edge(i, it->second);
        }
    }
    return g;
}

/// Reorders vertices into the canonical (y desc, x asc) order.
inline LatticeGraph sort_canonical(const LatticeGraph& g) {
    std::vector<int> order(g.n());
    for (int i = 0; i < g.n(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return canonical_less(g.verts[a].p, g.verts[b].p);
    });
    return induced_subgraph(g, order);
}

namespace detail {

inline LatticePoint dihedral_apply(const LatticePoint& p, int t) {
    long x = p.x(), y = p.y();
    if (t & 4) std::swap(x, y);
    if (t & 1) x = -x;
    if (t & 2) y = -y;
    return LatticePoint(x, y);
}

/// Translate to nonneg coords with min 0, divide by the content gcd.
inline LatticeGraph normalize_geometry(const LatticeGraph& g) {
    if (g.n() == 0) return g;
    long mx = g.verts[0].p.x(), my = g.verts[0].p.y();
    for (const auto& v : g.verts) {
        mx = std::min(mx, v.p.x());
        my = std::min(my, v.p.y());
    }
    LatticeGraph t = transform_coords(
        g, [&](const LatticePoint& p) { return LatticePoint(p.x() - mx, p.y() - my); });
    long gc = 0;
    for (const auto& v : t.verts) {
        gc = std::gcd(gc, v.p.x());
        gc = std::gcd(gc, v.p.y());
    }
    if (gc > 1)
        t = transform_coords(
            t, [&](const LatticePoint& p) { return LatticePoint(p.x() / gc, p.y() / gc); });
    return sort_canonical(t);
}

inline std::string structure_string(const LatticeGraph& g) {
    std::ostringstream os;
    os << (g.directed ? "d" : "u") << " " << g.n() << "\n";
    for (const auto& v : g.verts)
        os << v.p.x() << "," << v.p.y() << (v.marked ? "m" : "") << ";";
    os << "\n";
    for (const auto& [k, w] : g.arcs) os << k.first << ">" << k.second << "=" << to_string(w) << ";";
    return os.str();
}

}  // namespace detail

/// Geometric canonical form: lexicographically smallest serialization over
/// the 8 dihedral coordinate transforms after translation/scale
/// normalization. Equal strings certify congruence (and hence isomorphism)
/// for the rigid lattice graphs this project compares.
inline std::string canonical_form(const LatticeGraph& g) {
    for (const auto& v : g.verts)
        if (v.p.dim() != 2) throw error("canonical form is 2D-only");
    std::string best;
    for (int t = 0; t < 8; ++t) {
        LatticeGraph cand = transform_coords(
            g, [&](const LatticePoint& p) { return detail::dihedral_apply(p, t); });
        std::string s = detail::structure_string(detail::normalize_geometry(cand));
        if (best.empty() || s < best) best = s;
    }
    return best;
}

/// Searches the 8 dihedral transforms (with translation + scale
/// normalization) for a coordinate congruence a -> b; returns the vertex map
/// (a-id -> b-id) if the weighted marked structures coincide.
inline std::optional<std::vector<int>> congruence_map(const LatticeGraph& a,
                                                      const LatticeGraph& b) {
    if (a.n() != b.n() || a.directed != b.directed) return std::nullopt;
    if (a.n() == 0) return std::vector<int>{};
    LatticeGraph nb = detail::normalize_geometry(b);
    std::map<LatticePoint, int> bpos;
    for (int i = 0; i < nb.n(); ++i) bpos[nb.verts[i].p] = i;
    // map normalized-b ids back to original b ids: recompute normalization order
    // by replaying it on b with identity payload
    std::vector<int> border(b.n());
    {
        // normalize_geometry sorts canonically after translating/scaling; we
        // replicate the ordering to recover the id mapping
        long mx = b.verts[0].p.x(), my = b.verts[0].p.y();
        for (const auto& v : b.verts) {
            mx = std::min(mx, v.p.x());
            my = std::min(my, v.p.y());
        }
        std::vector<LatticePoint> pts;
        long gc = 0;
        for (const auto& v : b.verts) {
            gc = std::gcd(gc, v.p.x() - mx);
            gc = std::gcd(gc, v.p.y() - my);
        }
        if (gc == 0) gc = 1;
        std::vector<int> order(b.n());
        for (int i = 0; i < b.n(); ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(), [&](int p, int q) {
            LatticePoint pp((b.verts[p].p.x() - mx) / gc, (b.verts[p].p.y() - my) / gc);
            LatticePoint qq((b.verts[q].p.x() - mx) / gc, (b.verts[q].p.y() - my) / gc);
            return canonical_less(pp, qq);
        });
        for (int i = 0; i < b.n(); ++i) border[i] = order[i];
    }

    for (int t = 0; t < 8; ++t) {
        LatticeGraph ta = transform_coords(
            a, [&](const LatticePoint& p) { return detail::dihedral_apply(p, t); });
        long mx = ta.verts[0].p.x(), my = ta.verts[0].p.y();
        for (const auto& v : ta.verts) {
            mx = std::min(mx, v.p.x());
            my = std::min(my, v.p.y());
        }
        long gc = 0;
        for (const auto& v : ta.verts) {
            gc = std::gcd(gc, v.p.x() - mx);
            gc = std::gcd(gc, v.p.y() - my);
        }
        if (gc == 0) gc = 1;
        std::vector<int> map(a.n(), -1);
        std::vector<char> used(b.n(), 0);
        bool ok = true;
        for (int i = 0; i < a.n() && ok; ++i) {
            LatticePoint p((ta.verts[i].p.x() - mx) / gc, (ta.verts[i].p.y() - my) / gc);
            auto it = bpos.find(p);
            if (it == bpos.end()) {
                ok = false;
                break;
            }
            map[i] = border[it->second];
            // duplicate coordinates (glued graphs) would make the map
            // non-injective; reject rather than risk a false positive
            if (used[map[i]]) ok = false;
            used[map[i]] = 1;
            if (a.verts[i].marked != b.verts[map[i]].marked) ok = false;
        }
        if (!ok) continue;
        size_t matched = 0;
        for (const auto& [k, w] : a.arcs) {
            if (b.weight(map[k.first], map[k.second]) != w) {
                ok = false;
                break;
            }
            ++matched;
        }
        if (ok && matched == b.arcs.size()) return map;
    }
    return std::nullopt;
}

}  // namespace aztec
