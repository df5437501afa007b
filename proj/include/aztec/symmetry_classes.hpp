#pragma once

#include "aztec/families.hpp"
#include "aztec/matchings.hpp"
#include "aztec/transforms.hpp"
#include "aztec/tree_count.hpp"

namespace aztec {

/// Symmetry classes of spanning trees, including the diagonal reflection.
enum class TreeClass { H, HV, R2, R, DIAG };

struct ClassCount {
    Int value = 0;
    bool provably_empty = false;
};

/// Count of spanning trees invariant under the class's group, computed via
/// closed-form reductions (tree or matching count of an auxiliary graph),
/// never by brute force. The three rotation classes without closed forms
/// (odd diamonds under r and r^2, mixed diamonds under r^2) raise an error
/// directing callers to the small-order enumeration oracle.
inline ClassCount symmetry_class_count(Family family, long n, TreeClass cls) {
    if (n < 1) throw error("symmetry class count requires n >= 1");
    auto empty = [] {
        ClassCount c;
        c.provably_empty = true;
        return c;
    };
    auto value = [](Int v) {
        ClassCount c;
        c.value = std::move(v);
        return c;
    };
    auto matchings_int = [](const LatticeGraph& g) {
        Rat m = count_matchings(g);
        if (!is_integer(m)) throw error("expected an integer matching count");
        return m.get_num();
    };

    switch (family) {
        case Family::AZTEC:
            switch (cls) {
                case TreeClass::H: return value(Int(2 * n) * tree_count(build_half_mixed(n)));
                case TreeClass::HV:
                case TreeClass::R2:
                case TreeClass::R:
                case TreeClass::DIAG: return empty();
            }
            break;
        case Family::ODD_DIAMOND:
            switch (cls) {
                case TreeClass::H: return value(matchings_int(build_zigzag_c(2 * n - 1)));
                case TreeClass::HV: return value(matchings_int(build_zigzag_a(n - 1)));
                case TreeClass::DIAG:
                    if (n >= 2) return empty();
                    return value(Int(1));  // the star's single tree is symmetric
                case TreeClass::R2:
                case TreeClass::R:
                    throw error(
                        "no closed form for this class; use count_invariant_trees at tiny n");
            }
            break;
        case Family::MIXED_DIAMOND:
            switch (cls) {
                case TreeClass::H: return value(matchings_int(build_zigzag_c(2 * n - 2)));
                case TreeClass::HV: return value(matchings_int(build_zigzag_b(n - 1)));
                case TreeClass::R2:
                    throw error(
                        "no closed form for this class; use count_invariant_trees at tiny n");
                case TreeClass::R:
                case TreeClass::DIAG:
                    throw error("mixed diamonds do not possess this symmetry");
            }
            break;
        default: throw error("symmetry classes are defined for AZTEC/ODD_DIAMOND/MIXED_DIAMOND");
    }
    throw error("unhandled symmetry class");
}

/// Temperley identity: the spanning-tree count of a grid subgraph equals the
/// matching count of its refinement minus any vertex v on the infinite face.
inline bool temperley_check(const LatticeGraph& g, int v) {
    if (v < 0 || v >= g.n()) throw error("vertex id out of range");
    if (!on_infinite_face(g, v)) throw error("vertex is not on the infinite face");
    LatticeGraph t = temperley_refinement(g);
    int tv = t.find_vertex(g.verts[v].p);
    if (tv < 0) throw error("refinement lost a vertex");
    Rat m = count_matchings(delete_vertex(t, tv));
    return Rat(tree_count(g)) == m;
}

}  // namespace aztec
