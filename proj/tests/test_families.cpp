#include <catch2/catch_amalgamated.hpp>

#include "aztec/charpoly.hpp"
#include "aztec/families.hpp"

using namespace aztec;

TEST_CASE("vertex counts for n = 1..10") {
    for (long n = 1; n <= 10; ++n) {
        CAPTURE(n);
        CHECK(build_aztec(n).n() == 2 * n * (n + 1));
        CHECK(build_quartered(n).n() == n * (n + 1) / 2);
        CHECK(build_odd_diamond(n).n() == 2 * n * n + 2 * n + 1);
        CHECK(build_mixed_diamond(n).n() == 2 * n * n);
        CHECK(build_half_mixed(n).n() == n * n + n);
        CHECK(build_half_odd(n).n() == (n + 1) * (n + 1));
        CHECK(build_holed_square(n).n() == (2 * n + 1) * (2 * n + 1) - 1);
        CHECK(build_pillowcase(n).n() == 4 * n * n);
        CHECK(build_grid(n).n() == n * n);
        CHECK(build_zigzag_a(n).n() == 2 * n * (n + 1));
        CHECK(build_zigzag_b(n).n() == 2 * n * n);
    }
}

TEST_CASE("degenerate small orders never error") {
    for (Family f : {Family::GRID, Family::AZTEC, Family::QUARTERED, Family::ODD_DIAMOND,
                     Family::MIXED_DIAMOND, Family::HALF_ODD, Family::HALF_MIXED,
                     Family::HOLED_SQUARE, Family::ZIGZAG_A, Family::ZIGZAG_B, Family::ZIGZAG_C,
                     Family::ZIGZAG_D, Family::PILLOWCASE, Family::ODD_PILLOWCASE}) {
        FamilySpec s{f, 0};
        CHECK_NOTHROW(build_family(s));
    }
    CHECK(build_aztec(0).n() == 0);
    CHECK(build_odd_diamond(0).n() == 1);
    CHECK(build_half_odd(0).n() == 1);
    CHECK_THROWS_AS(build_aztec(-1), error);
    CHECK_THROWS_AS(family_from_string("NO_SUCH_FAMILY"), error);
}

TEST_CASE("smallest diamond is the 4-cycle with all vertices on the hull") {
    LatticeGraph g = build_aztec(1);
    REQUIRE(g.n() == 4);
    CHECK(g.edges().size() == 4);
    for (const auto& v : g.verts)
        CHECK(std::abs(v.p.x()) + std::abs(v.p.y()) == 2);
    CHECK(is_connected(g));
}

TEST_CASE("QAD_5 has 15 vertices") { CHECK(build_quartered(5).n() == 15); }

TEST_CASE("OD_1 is the 5-vertex star") {
    LatticeGraph g = build_odd_diamond(1);
    REQUIRE(g.n() == 5);
    CHECK(g.edges().size() == 4);
    int center = g.find_vertex(LatticePoint(0, 0));
    REQUIRE(center >= 0);
    CHECK(g.out_neighbors(center).size() == 4);
}

TEST_CASE("HOLED_SQUARE n=2 is the 5x5 grid minus its center") {
    CHECK(build_holed_square(2).n() == 24);
}

TEST_CASE("AP_1 is the 4-cycle with every edge of weight 2") {
    LatticeGraph g = build_pillowcase(1);
    REQUIRE(g.n() == 4);
    for (const auto& [k, w] : g.arcs) {
        (void)k;
        CHECK(w == 2);
    }
    CHECK(charpoly(g.adjacency()) == Poly::from_ints({0, 0, -16, 0, 1}));  // roots 4,0,0,-4
}

TEST_CASE("parity conventions per axis") {
    auto axis_parities_consistent = [](const LatticeGraph& g) {
        if (g.n() == 0) return true;
        long px = ((g.verts[0].p.x() % 2) + 2) % 2;
        long py = ((g.verts[0].p.y() % 2) + 2) % 2;
        for (const auto& v : g.verts)
            if (((v.p.x() % 2) + 2) % 2 != px || ((v.p.y() % 2) + 2) % 2 != py) return false;
        return true;
    };
    for (long n = 1; n <= 5; ++n) {
        CHECK(axis_parities_consistent(build_aztec(n)));          // odd/odd
        CHECK(axis_parities_consistent(build_grid(n)));           // even/even
        CHECK(axis_parities_consistent(build_quartered(n)));      // odd/odd
        CHECK(axis_parities_consistent(build_mixed_diamond(n)));  // odd x, even y
        CHECK(axis_parities_consistent(build_odd_diamond(n)));
    }
}

TEST_CASE("path and loop families") {
    // PATH_Q(2, 2): charpoly x^2 - 4
    CHECK(charpoly(build_path_q(2, Rat(2)).adjacency()) == Poly::from_ints({-4, 0, 1}));
    CHECK(charpoly(build_path_family(Family::PATH_Q, 2, Rat(2)).adjacency()) ==
          Poly::from_ints({-4, 0, 1}));
    CHECK_THROWS_AS(build_path_family(Family::GRID, 2), error);

    // LOOP_R n=1: single vertex with loop weight 1 (the last-vertex rule)
    LatticeGraph r1 = build_loop_path(1, false, true);
    REQUIRE(r1.n() == 1);
    CHECK(r1.weight(0, 0) == 1);

    LatticeGraph q3 = build_loop_path(3, false, false);
    CHECK(q3.weight(0, 0) == 2);
    CHECK(q3.weight(2, 2) == 2);
    LatticeGraph rp3 = build_loop_path(3, true, true);
    CHECK(rp3.weight(0, 0) == -2);
    CHECK(rp3.weight(2, 2) == -1);
}

TEST_CASE("BLOCK_S m=2 is [[0,0],[2,4]] with charpoly x(x-4)") {
    LatticeGraph s2 = build_block_s(2, false);
    RatMat a = s2.adjacency();
    CHECK(a.at(0, 0) == 0);
    CHECK(a.at(0, 1) == 0);
    CHECK(a.at(1, 0) == 2);
    CHECK(a.at(1, 1) == 4);
    CHECK(charpoly(a) == Poly::from_ints({0, -4, 1}));
    // primed variant is the negative matrix
    RatMat ap = build_block_s(2, true).adjacency();
    CHECK(ap.at(1, 0) == -2);
    CHECK(ap.at(1, 1) == -4);
}

TEST_CASE("marked variants double exactly the marked-to-unmarked arcs") {
    for (long n = 1; n <= 6; ++n) {
        for (Family f :
             {Family::MARKED_QAD, Family::MARKED_HMD, Family::MARKED_HOD, Family::MARKED_AD}) {
            LatticeGraph g = build_family({f, n});
            CHECK(g.directed);
            bool any_marked = false;
            for (const auto& v : g.verts) any_marked |= v.marked;
            CHECK(any_marked);
            for (const auto& [k, w] : g.arcs) {
                bool mu = g.verts[k.first].marked, mv = g.verts[k.second].marked;
                if (mu && !mv)
                    CHECK(w == 2 * g.weight(k.second, k.first));
                else if (!mu && mv)
                    CHECK(2 * w == g.weight(k.second, k.first));
                else
                    CHECK(w == g.weight(k.second, k.first));
            }
        }
    }
}

TEST_CASE("marked vertex counts follow the decompositions") {
    for (long n = 1; n <= 6; ++n) {
        auto marked_count = [](const LatticeGraph& g) {
            int c = 0;
            for (const auto& v : g.verts) c += v.marked ? 1 : 0;
            return c;
        };
        CHECK(marked_count(build_marked_qad(n)) == n);
        CHECK(marked_count(build_marked_hmd(n)) == 2 * n);
        CHECK(marked_count(build_marked_hod(n)) == 2 * n + 1);
        CHECK(marked_count(build_marked_ad(n)) == 4 * n);
    }
}

TEST_CASE("undirected builders emit symmetric weight maps") {
    for (long n = 1; n <= 5; ++n)
        for (Family f : {Family::GRID, Family::AZTEC, Family::QUARTERED, Family::ODD_DIAMOND,
                         Family::MIXED_DIAMOND, Family::HALF_ODD, Family::HALF_MIXED,
                         Family::HOLED_SQUARE, Family::ZIGZAG_A, Family::ZIGZAG_B,
                         Family::ZIGZAG_C, Family::ZIGZAG_D, Family::ZIGZAG_A_TILDE,
                         Family::ZIGZAG_B_TILDE, Family::PILLOWCASE, Family::ODD_PILLOWCASE}) {
            LatticeGraph g = build_family({f, n});
            CHECK_FALSE(g.directed);
            CHECK(g.symmetric_weights());
        }
}

TEST_CASE("pillowcase swap is an involution fixing the hull") {
    for (long n = 1; n <= 4; ++n) {
        SymmetryMap t = pillowcase_swap(n);
        CHECK(t.order() == (n == 1 ? 1 : 2));  // AP_1 is all hull
        CHECK(t.fixed_count() == 4 * n);
    }
}

TEST_CASE("rational-weight graphs carry rational charpoly coefficients") {
    // weighted 4-cycle with one edge 1/2: x^4 - (13/4) x^2 + 1/4
    Poly p = charpoly(build_zigzag_a_tilde(1).adjacency());
    CHECK(p == Poly(std::vector<Rat>{rat(1, 4), Rat(0), rat(-13, 4), Rat(0), Rat(1)}));
    CHECK_FALSE(p.is_integral());
}

TEST_CASE("d-dimensional grids") {
    CHECK(build_grid_d(2, 3).n() == 8);
    CHECK(build_grid_d(3, 4).n() == 81);
    LatticeGraph cube = build_grid_d(2, 3);
    CHECK(cube.out_neighbors(0).size() == 3);
    CHECK(build_grid_d(2, 2).n() == build_grid(2).n());
}
