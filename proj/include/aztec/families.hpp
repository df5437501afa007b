#pragma once

#include <string>
#include <vector>

#include "aztec/factorization.hpp"
#include "aztec/graph.hpp"

namespace aztec {

enum class Family {
    GRID,
    GRID_D,
    AZTEC,
    QUARTERED,
    ODD_DIAMOND,
    MIXED_DIAMOND,
    HALF_ODD,
    HALF_MIXED,
    HOLED_SQUARE,
    ZIGZAG_A,
    ZIGZAG_B,
    ZIGZAG_C,
    ZIGZAG_D,
    ZIGZAG_A_TILDE,
    ZIGZAG_B_TILDE,
    PATH_Q,
    LOOP_Q,
    LOOP_QP,
    LOOP_R,
    LOOP_RP,
    BLOCK_S,
    BLOCK_SP,
    PILLOWCASE,
    ODD_PILLOWCASE,
    MARKED_QAD,
    MARKED_HMD,
    MARKED_HOD,
    MARKED_AD,
};

struct FamilySpec {
    Family family;
    long n = 1;
    Rat q = Rat(1);  // PATH_Q edge weight
    int d = 2;       // GRID_D dimension
};

namespace detail {

inline void require_order(long n) {
    if (n < 0) throw error("family order must be nonnegative");
}

inline LatticeGraph unit_grid_graph(std::vector<LatticePoint> pts) {
    return points_with_unit_steps(std::move(pts), 2);
}

}  // namespace detail

/// n x n square grid G_n on Z^2, stored coords (2i, 2j), 0 <= i,j < n.
inline LatticeGraph build_grid(long n) {
    detail::require_order(n);
    std::vector<LatticePoint> pts;
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) pts.emplace_back(2 * i, 2 * j);
    return detail::unit_grid_graph(std::move(pts));
}

/// Aztec diamond AD_n: induced subgraph of (Z+1/2)^2 on |x|+|y| <= n.
inline LatticeGraph build_aztec(long n) {
    detail::require_order(n);
    std::vector<LatticePoint> pts;
    for (long a = -n; a < n; ++a)
        for (long b = -n; b < n; ++b) {
            long x = 2 * a + 1, y = 2 * b + 1;  // stored half-unit scale
            if (std::abs(x) + std::abs(y) <= 2 * n) pts.emplace_back(x, y);
        }
    return detail::unit_grid_graph(std::move(pts));
}

/// Quartered Aztec diamond: the southeastern quarter {x >= 1/2, y <= -1/2}.
inline LatticeGraph build_quartered(long n) {
    detail::require_order(n);
    std::vector<LatticePoint> pts;
    for (long a = 0; a < n; ++a)
        for (long b = 0; b < n; ++b)
            if (a + b <= n - 1) pts.emplace_back(2 * a + 1, -2 * b - 1);
    return detail::unit_grid_graph(std::move(pts));
}

/// Odd Aztec diamond OD_n: the diagonal-adjacency graph on the black unit
/// squares of a (2n+1)x(2n+1) chessboard, drawn diamond-style so the edges
/// become unit steps of Z^2: induced on {|x+y| <= n, |x-y| <= n}.
inline LatticeGraph build_odd_diamond(long n) {
    detail::require_order(n);
    std::vector<LatticePoint> pts;
    for (long x = -n; x <= n; ++x)
        for (long y = -n; y <= n; ++y)
            if (std::abs(x + y) <= n && std::abs(x - y) <= n) pts.emplace_back(2 * x, 2 * y);
    return detail::unit_grid_graph(std::move(pts));
}

/// Mixed Aztec diamond MD_n on the 2n x 2n chessboard, diamond-style frame:
/// integer points with 0 <= x+y <= 2n-1 and 0 <= x-y <= 2n-1, centered so
/// the x axis carries odd stored values and the y axis even ones.
inline LatticeGraph build_mixed_diamond(long n) {
    detail::require_order(n);
    std::vector<LatticePoint> pts;
    for (long x = 0; x <= 2 * n - 1; ++x)
        for (long y = -(2 * n - 1); y <= 2 * n - 1; ++y)
            if (x + y >= 0 && x + y <= 2 * n - 1 && x - y >= 0 && x - y <= 2 * n - 1)
                pts.emplace_back(2 * x - (2 * n - 1), 2 * y);
    return detail::unit_grid_graph(std::move(pts));
}

/// Halved mixed diamond HMD_n: the part of MD_n on or above the marked
/// diagonal (y >= 0 in the diamond frame). Bottom row = the 2n diagonal
/// vertices.
inline LatticeGraph build_half_mixed(long n) {
    detail::require_order(n);
    std::vector<LatticePoint> pts;
    for (long x = 0; x <= 2 * n - 1; ++x)
        for (long y = 0; y <= 2 * n - 1; ++y)
            if (x + y <= 2 * n - 1 && x - y >= 0) pts.emplace_back(2 * x - (2 * n - 1), 2 * y);
    return detail::unit_grid_graph(std::move(pts));
}

/// Halved odd diamond HOD_n: upper half of OD_n (y >= 0), (n+1)^2 vertices.
inline LatticeGraph build_half_odd(long n) {
    detail::require_order(n);
    std::vector<LatticePoint> pts;
    for (long x = -n; x <= n; ++x)
        for (long y = 0; y <= n; ++y)
            if (std::abs(x + y) <= n && std::abs(x - y) <= n) pts.emplace_back(2 * x, 2 * y);
    return detail::unit_grid_graph(std::move(pts));
}

/// H_n: the (2n+1)x(2n+1) grid with the central vertex removed.
inline LatticeGraph build_holed_square(long n) {
    detail::require_order(n);
    std::vector<LatticePoint> pts;
    for (long x = -n; x <= n; ++x)
        for (long y = -n; y <= n; ++y)
            if (!(x == 0 && y == 0)) pts.emplace_back(2 * x, 2 * y);
    if (n == 0) pts.clear();
    return detail::unit_grid_graph(std::move(pts));
}

namespace detail {

/// Height of the NE(a,b) staircase over column x (the "on or below" bound):
/// the path rises two steps then moves two east, so its curve over x >= a is
/// b + 2 + 2*floor((x-a)/2).
inline long ne_curve(long a, long b, long x) { return b + 2 + 2 * ((x - a) / 2); }
inline long nw_curve(long a, long b, long x) { return b + 2 + 2 * ((a - x) / 2); }

}  // namespace detail

/// A_n: vertices of G_2n on or above NE(1,0); columns 0 and 1 are unbounded
/// below (within the grid), column i >= 2 starts at 2*floor(i/2).
inline LatticeGraph build_zigzag_a(long n) {
    detail::require_order(n);
    std::vector<LatticePoint> pts;
    for (long i = 0; i < 2 * n; ++i) {
        long lo = (i <= 1) ? 0 : 2 * (i / 2);
        for (long j = lo; j < 2 * n; ++j) pts.emplace_back(2 * i, 2 * j);
    }
    return detail::unit_grid_graph(std::move(pts));
}

/// C_n: lattice points with y >= 0 on or below both NE(-n+1,-1) and
/// NW(n-1,-1).
inline LatticeGraph build_zigzag_c(long n) {
    detail::require_order(n);
    std::vector<LatticePoint> pts;
    for (long x = -(n - 1); x <= n - 1; ++x) {
        long hi = std::min(detail::ne_curve(-n + 1, -1, x), detail::nw_curve(n - 1, -1, x));
        for (long y = 0; y <= hi; ++y) pts.emplace_back(2 * x, 2 * y);
    }
    if (n == 0) pts.clear();
    return detail::unit_grid_graph(std::move(pts));
}

/// D_n: lattice points with y >= 0 on or below both NE(-n,-2) and NW(n-1,-1).
inline LatticeGraph build_zigzag_d(long n) {
    detail::require_order(n);
    std::vector<LatticePoint> pts;
    for (long x = -n; x <= n - 1; ++x) {
        long hi = std::min(detail::ne_curve(-n, -2, x), detail::nw_curve(n - 1, -1, x));
        for (long y = 0; y <= hi; ++y) pts.emplace_back(2 * x, 2 * y);
    }
    if (n == 0) pts.clear();
    return detail::unit_grid_graph(std::move(pts));
}

/// Weighted path P_n^{(q)} on vertices (0,0)..(n-1,0) in true scale.
inline LatticeGraph build_path_q(long n, const Rat& q) {
    detail::require_order(n);
    LatticeGraph g;
    for (long i = 0; i < n; ++i) g.add_vertex(LatticePoint(2 * i, 0));
    for (long i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1, q);
    return g;
}

/// Q_n / Q'_n: unit path plus a loop of weight. +-2 at every vertex.
/// R_n / R'_n: same with the loop at the last vertex changed to +-1.
inline LatticeGraph build_loop_path(long n, bool primed, bool last_loop_one) {
    detail::require_order(n);
    LatticeGraph g = build_path_q(n, Rat(1));
    Rat sgn = primed ? Rat(-1) : Rat(1);
    for (long i = 0; i < n; ++i) {
        Rat loop = sgn * Rat(2);
        if (last_loop_one && i == n - 1) loop = sgn * Rat(1);
        g.add_edge(static_cast<int>(i), static_cast<int>(i), loop);
    }
    return g;
}

/// S_m / S'_m: directed graph whose adjacency matrix is the m x m tridiagonal
/// block with +-2 off the diagonal, entry (m-1,m) = 0, entry (m,m-1) = +-2
/// and corner diagonal +-4 (the restriction-of-F block of the pillowcase
/// decomposition).
inline LatticeGraph build_block_s(long m, bool primed) {
    detail::require_order(m);
    LatticeGraph g;
    g.directed = true;
    Rat two = primed ? Rat(-2) : Rat(2);
    Rat four = primed ? Rat(-4) : Rat(4);
    for (long i = 0; i < m; ++i) g.add_vertex(LatticePoint(2 * i, 0));
    for (long i = 0; i + 1 < m - 1; ++i) {
        g.add_arc(i, i + 1, two);
        g.add_arc(i + 1, i, two);
    }
    if (m >= 2) {
        g.add_arc(m - 1, m - 2, two);  // arc from the extra vertex only
        g.add_arc(m - 1, m - 1, four);
    } else if (m == 1) {
        g.add_arc(0, 0, four);
    }
    return g;
}

/// Marked directed variant per the order-2 splitting lemma: every arc leaving
/// a marked vertex toward an unmarked one carries twice the base weight; all
/// other arcs keep the base weight.
inline LatticeGraph marked_variant(const LatticeGraph& base, const std::vector<char>& marked) {
    if (base.directed) throw error("marked variant expects an undirected base graph");
    LatticeGraph g;
    g.directed = true;
    for (int i = 0; i < base.n(); ++i) g.add_vertex(base.verts[i].p, marked[i] != 0);
    for (const auto& [k, w] : base.arcs) {
        Rat wt = w;
        if (marked[k.first] && !marked[k.second]) wt *= 2;
        g.add_arc(k.first, k.second, wt);
    }
    return g;
}

/// \overline{QAD}_n: QAD_n with its n hypotenuse vertices marked.
inline LatticeGraph build_marked_qad(long n) {
    LatticeGraph q = build_quartered(n);
    std::vector<char> marked(q.n(), 0);
    for (int i = 0; i < q.n(); ++i)
        if (std::abs(q.verts[i].p.x()) + std::abs(q.verts[i].p.y()) == 2 * n) marked[i] = 1;
    return marked_variant(q, marked);
}

/// \overline{HMD}_n: HMD_n with the 2n bottommost (diagonal) vertices marked.
inline LatticeGraph build_marked_hmd(long n) {
    LatticeGraph h = build_half_mixed(n);
    std::vector<char> marked(h.n(), 0);
    for (int i = 0; i < h.n(); ++i)
        if (h.verts[i].p.y() == 0) marked[i] = 1;
    return marked_variant(h, marked);
}

/// \overline{HOD}_n: HOD_n with the 2n+1 bottommost vertices marked.
inline LatticeGraph build_marked_hod(long n) {
    LatticeGraph h = build_half_odd(n);
    std::vector<char> marked(h.n(), 0);
    for (int i = 0; i < h.n(); ++i)
        if (h.verts[i].p.y() == 0) marked[i] = 1;
    return marked_variant(h, marked);
}

/// Aztec pillowcase AP_n: two copies of AD_n glued along the convex hull
/// (|x|+|y| = n); the four pairs of hull-hull edges fold to weight 2.
/// Vertex order: copy-A vertices in canonical order, then copy-B interior
/// vertices in canonical order (same coordinates as their A counterparts).
inline LatticeGraph build_pillowcase(long n) {
    detail::require_order(n);
    LatticeGraph ad = build_aztec(n);
    auto on_hull = [&](int i) {
        return std::abs(ad.verts[i].p.x()) + std::abs(ad.verts[i].p.y()) == 2 * n;
    };
    LatticeGraph g;
    std::vector<int> b_id(ad.n(), -1);
    for (int i = 0; i < ad.n(); ++i) g.add_vertex(ad.verts[i].p);
    for (int i = 0; i < ad.n(); ++i)
        if (!on_hull(i)) b_id[i] = g.add_vertex(ad.verts[i].p);
    for (const auto& [k, w] : ad.arcs) {
        if (k.first > k.second) continue;
        int u = k.first, v = k.second;
        g.add_edge(u, v, w);  // copy A
        int ub = on_hull(u) ? u : b_id[u];
        int vb = on_hull(v) ? v : b_id[v];
        g.add_edge(ub, vb, w);  // copy B (folds hull-hull edges to weight 2)
    }
    return g;
}

/// The copy-swap involution of AP_n (fixes the hull).
inline SymmetryMap pillowcase_swap(long n) {
    LatticeGraph ad = build_aztec(n);
    LatticeGraph ap = build_pillowcase(n);
    SymmetryMap t;
    t.kind = SymmetryMap::Kind::other;
    t.perm.assign(ap.n(), -1);
    int nb = ad.n();
    std::vector<int> interior;
    for (int i = 0; i < ad.n(); ++i)
        if (std::abs(ad.verts[i].p.x()) + std::abs(ad.verts[i].p.y()) != 2 * n)
            interior.push_back(i);
    for (int i = 0; i < ap.n(); ++i) t.perm[i] = i;
    for (size_t j = 0; j < interior.size(); ++j) {
        t.perm[interior[j]] = nb + static_cast<int>(j);
        t.perm[nb + static_cast<int>(j)] = interior[j];
    }
    if (!is_automorphism(ap, t.perm)) throw error("pillowcase swap is not an automorphism");
    return t;
}

/// \overline{AD}_n: the marked directed half of the pillowcase split. The
/// base is copy A of AP_n (hull-hull edges carry the folded weight 2), hull
/// vertices marked.
inline LatticeGraph build_marked_ad(long n) {
    detail::require_order(n);
    LatticeGraph ad = build_aztec(n);
    LatticeGraph base = ad;
    // fold weights of hull-hull edges as the pillowcase gluing does
    for (const auto& [k, w] : ad.arcs) {
        int u = k.first, v = k.second;
        bool hu = std::abs(ad.verts[u].p.x()) + std::abs(ad.verts[u].p.y()) == 2 * n;
        bool hv = std::abs(ad.verts[v].p.x()) + std::abs(ad.verts[v].p.y()) == 2 * n;
        if (hu && hv) base.add_arc(u, v, w);  // second copy of the edge
    }
    std::vector<char> marked(base.n(), 0);
    for (int i = 0; i < base.n(); ++i)
        if (std::abs(base.verts[i].p.x()) + std::abs(base.verts[i].p.y()) == 2 * n) marked[i] = 1;
    return marked_variant(base, marked);
}

/// Odd Aztec pillowcase OP_n: two copies of OD_n glued along the convex hull
/// (no hull-hull edges exist, so no folding occurs).
inline LatticeGraph build_odd_pillowcase(long n) {
    detail::require_order(n);
    LatticeGraph od = build_odd_diamond(n);
    auto on_hull = [&](int i) {
        long x = od.verts[i].p.x() / 2, y = od.verts[i].p.y() / 2;
        return std::abs(x + y) == n || std::abs(x - y) == n;
    };
    LatticeGraph g;
    std::vector<int> b_id(od.n(), -1);
    for (int i = 0; i < od.n(); ++i) g.add_vertex(od.verts[i].p);
    for (int i = 0; i < od.n(); ++i)
        if (!on_hull(i)) b_id[i] = g.add_vertex(od.verts[i].p);
    for (const auto& [k, w] : od.arcs) {
        if (k.first > k.second) continue;
        int u = k.first, v = k.second;
        g.add_edge(u, v, w);
        int ub = on_hull(u) ? u : b_id[u];
        int vb = on_hull(v) ? v : b_id[v];
        g.add_edge(ub, vb, w);
    }
    return g;
}

/// d-dimensional grid G_n^{(d)} on {1..n}^d, vertices in lexicographic order.
inline LatticeGraph build_grid_d(long n, int d) {
    detail::require_order(n);
    if (d < 1) throw error("grid dimension must be positive");
    LatticeGraph g;
    std::vector<long> idx(d, 0);
    long total = 1;
    for (int i = 0; i < d; ++i) {
        total *= n;
        if (total > 2000000) throw error("grid too large");
    }
    std::map<std::vector<long>, int> pos;
    for (long t = 0; t < (n == 0 ? 0 : total); ++t) {
        std::vector<long> stored(d);
        long r = t;
        for (int i = d - 1; i >= 0; --i) {
            stored[i] = 2 * (r % n);
            r /= n;
        }
        pos[stored] = g.add_vertex(LatticePoint(stored));
    }
    for (const auto& [p, id] : pos) {
        for (int i = 0; i < d; ++i) {
            std::vector<long> q = p;
            q[i] += 2;
            auto it = pos.find(q);
            if (it != pos.end()) g.add_edge(id, it->second);
        }
    }
    return g;
}

/// B_n is the G+ output of the factorization split of G_2n across its
/// diagonal (this realizes the doubled-vertex picture operationally); it
/// lives in the rotated frame with the split axis at y = 0.
inline LatticeGraph build_zigzag_b(long n) {
    detail::require_order(n);
    if (n == 0) return LatticeGraph{};
    return split_across_diagonal(build_grid(2 * n)).g_plus;
}

/// \tilde B_n: B_n with its top 2n-2 edges reweighted to 1/2. In the rotated
/// frame the figure's top row is the set of vertices maximizing x + y; the
/// one top edge meeting the axis endpoint keeps weight 1.
inline LatticeGraph build_zigzag_b_tilde(long n) {
    detail::require_order(n);
    if (n == 0) return LatticeGraph{};
    LatticeGraph g = build_zigzag_b(n);
    long m = 0;
    for (const auto& v : g.verts) m = std::max(m, v.p.x() + v.p.y());
    for (auto& [k, w] : g.arcs) {
        const auto& pu = g.verts[k.first].p;
        const auto& pv = g.verts[k.second].p;
        if (pu.x() + pu.y() != m || pv.x() + pv.y() != m) continue;
        if (pu.y() == 0 || pv.y() == 0) continue;  // axis-end edge keeps weight 1
        w /= 2;
    }
    return g;
}

/// \tilde A_n: A_n with all 2n-1 top-row edges reweighted to 1/2.
inline LatticeGraph build_zigzag_a_tilde(long n) {
    LatticeGraph g = build_zigzag_a(n);
    long top = 2 * (2 * n - 1);
    for (auto& [k, w] : g.arcs) {
        const auto& pu = g.verts[k.first].p;
        const auto& pv = g.verts[k.second].p;
        if (pu.y() == top && pv.y() == top) w /= 2;
    }
    return g;
}

/// Entry point for the path-like families: the weighted path, the four
/// loop-decorated paths, and the two directed restriction blocks.
inline LatticeGraph build_path_family(Family f, long n, const Rat& q = Rat(1)) {
    switch (f) {
        case Family::PATH_Q: return build_path_q(n, q);
        case Family::LOOP_Q: return build_loop_path(n, false, false);
        case Family::LOOP_QP: return build_loop_path(n, true, false);
        case Family::LOOP_R: return build_loop_path(n, false, true);
        case Family::LOOP_RP: return build_loop_path(n, true, true);
        case Family::BLOCK_S: return build_block_s(n, false);
        case Family::BLOCK_SP: return build_block_s(n, true);
        default: throw error("not a path-like family");
    }
}

inline LatticeGraph build_family(const FamilySpec& s) {
    switch (s.family) {
        case Family::GRID: return build_grid(s.n);
        case Family::GRID_D: return build_grid_d(s.n, s.d);
        case Family::AZTEC: return build_aztec(s.n);
        case Family::QUARTERED: return build_quartered(s.n);
        case Family::ODD_DIAMOND: return build_odd_diamond(s.n);
        case Family::MIXED_DIAMOND: return build_mixed_diamond(s.n);
        case Family::HALF_ODD: return build_half_odd(s.n);
        case Family::HALF_MIXED: return build_half_mixed(s.n);
        case Family::HOLED_SQUARE: return build_holed_square(s.n);
        case Family::ZIGZAG_A: return build_zigzag_a(s.n);
        case Family::ZIGZAG_B: return build_zigzag_b(s.n);
        case Family::ZIGZAG_C: return build_zigzag_c(s.n);
        case Family::ZIGZAG_D: return build_zigzag_d(s.n);
        case Family::ZIGZAG_A_TILDE: return build_zigzag_a_tilde(s.n);
        case Family::ZIGZAG_B_TILDE: return build_zigzag_b_tilde(s.n);
        case Family::PATH_Q: return build_path_q(s.n, s.q);
        case Family::LOOP_Q: return build_loop_path(s.n, false, false);
        case Family::LOOP_QP: return build_loop_path(s.n, true, false);
        case Family::LOOP_R: return build_loop_path(s.n, false, true);
        case Family::LOOP_RP: return build_loop_path(s.n, true, true);
        case Family::BLOCK_S: return build_block_s(s.n, false);
        case Family::BLOCK_SP: return build_block_s(s.n, true);
        case Family::PILLOWCASE: return build_pillowcase(s.n);
        case Family::ODD_PILLOWCASE: return build_odd_pillowcase(s.n);
        case Family::MARKED_QAD: return build_marked_qad(s.n);
        case Family::MARKED_HMD: return build_marked_hmd(s.n);
        case Family::MARKED_HOD: return build_marked_hod(s.n);
        case Family::MARKED_AD: return build_marked_ad(s.n);
    }
    throw error("unknown family");
}

inline const std::vector<std::pair<std::string, Family>>& family_names() {
    static const std::vector<std::pair<std::string, Family>> names = {
        {"GRID", Family::GRID},
        {"GRID_D", Family::GRID_D},
        {"AZTEC", Family::AZTEC},
        {"QUARTERED", Family::QUARTERED},
        {"ODD_DIAMOND", Family::ODD_DIAMOND},
        {"MIXED_DIAMOND", Family::MIXED_DIAMOND},
        {"HALF_ODD", Family::HALF_ODD},
        {"HALF_MIXED", Family::HALF_MIXED},
        {"HOLED_SQUARE", Family::HOLED_SQUARE},
        {"ZIGZAG_A", Family::ZIGZAG_A},
        {"ZIGZAG_B", Family::ZIGZAG_B},
        {"ZIGZAG_C", Family::ZIGZAG_C},
        {"ZIGZAG_D", Family::ZIGZAG_D},
        {"ZIGZAG_A_TILDE", Family::ZIGZAG_A_TILDE},
        {"ZIGZAG_B_TILDE", Family::ZIGZAG_B_TILDE},
        {"PATH_Q", Family::PATH_Q},
        {"LOOP_Q", Family::LOOP_Q},
        {"LOOP_QP", Family::LOOP_QP},
        {"LOOP_R", Family::LOOP_R},
        {"LOOP_RP", Family::LOOP_RP},
        {"BLOCK_S", Family::BLOCK_S},
        {"BLOCK_SP", Family::BLOCK_SP},
        {"PILLOWCASE", Family::PILLOWCASE},
        {"ODD_PILLOWCASE", Family::ODD_PILLOWCASE},
        {"MARKED_QAD", Family::MARKED_QAD},
        {"MARKED_HMD", Family::MARKED_HMD},
        {"MARKED_HOD", Family::MARKED_HOD},
        {"MARKED_AD", Family::MARKED_AD},
    };
    return names;
}

inline Family family_from_string(const std::string& s) {
    for (const auto& [name, f] : family_names())
        if (name == s) return f;
    throw error("unknown family: '" + s + "'");
}

inline std::string family_to_string(Family f) {
    for (const auto& [name, ff] : family_names())
        if (ff == f) return name;
    throw error("unknown family id");
}

}  // namespace aztec
