#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "aztec/factorization.hpp"
#include "aztec/families.hpp"
#include "aztec/matchings.hpp"
#include "aztec/transforms.hpp"

using namespace aztec;

namespace {

Rat pow2r(int k) {
    Rat r(1);
    for (int i = 0; i < k; ++i) r *= 2;
    return r;
}

/// random connected induced grid subgraph symmetric about y = 0 with at
/// least one axis vertex
LatticeGraph random_symmetric_subgraph(std::mt19937_64& rng, long k, int target) {
    std::set<std::pair<long, long>> cells;
    std::pair<long, long> cur{0, 0};
    cells.insert(cur);
    std::uniform_int_distribution<int> dir(0, 3);
    const long dx[] = {1, -1, 0, 0}, dy[] = {0, 0, 1, -1};
    int guard = 0;
    while (static_cast<int>(cells.size()) < target && ++guard < 20000) {
        int d = dir(rng);
        std::pair<long, long> nxt{cur.first + dx[d], cur.second + dy[d]};
        if (std::abs(nxt.first) > k || std::abs(nxt.second) > k) continue;
        cells.insert(nxt);
        cells.insert({nxt.first, -nxt.second});
        cur = nxt;
    }
    std::vector<LatticePoint> pts;
    for (auto& [x, y] : cells) pts.emplace_back(2 * x, 2 * y);
    return points_with_unit_steps(std::move(pts), 2);
}

}  // namespace

TEST_CASE("grid split across the diagonal gives two B_n halves") {
    for (long n = 1; n <= 4; ++n) {
        CAPTURE(n);
        AxisSplit s = split_across_diagonal(build_grid(2 * n));
        CHECK(s.k == n);
        CHECK(s.g_plus.n() + s.g_minus.n() == 4 * n * n);
        CHECK(s.g_plus.n() % 2 == 0);
        Rat mg = count_matchings(build_grid(2 * n));
        Rat mb = count_matchings(s.g_plus);
        CHECK(mg == pow2r(static_cast<int>(n)) * mb * count_matchings(s.g_minus));
        CHECK(mg == pow2r(static_cast<int>(n)) * mb * mb);  // both halves agree
        CHECK(mb == count_matchings(build_zigzag_b(n)));    // the B_n builder
    }
}

TEST_CASE("the odd grid minus a corner splits into A_n and Te(QAD_{n+1}) minus v") {
    for (long n = 1; n <= 4; ++n) {
        CAPTURE(n);
        LatticeGraph g = build_grid(2 * n + 1);
        int corner = g.find_vertex(LatticePoint(2 * (2 * n), 2 * (2 * n)));
        REQUIRE(corner >= 0);
        LatticeGraph h = delete_vertex(g, corner);
        AxisSplit s = split_across_diagonal(h);
        CHECK(s.k == n);

        Rat ma = count_matchings(build_zigzag_a(n));
        // one half is A_n (match by matching count and vertex count)
        Rat mplus = count_matchings(s.g_plus);
        Rat mminus = count_matchings(s.g_minus);
        bool plus_is_a = s.g_plus.n() == build_zigzag_a(n).n() && mplus == ma;
        bool minus_is_a = s.g_minus.n() == build_zigzag_a(n).n() && mminus == ma;
        CHECK((plus_is_a || minus_is_a));

        // the other half is Te(QAD_{n+1}) minus the hypotenuse-end vertex,
        // the image of the removed grid corner
        LatticeGraph tq = temperley_refinement(build_quartered(n + 1));
        Rat mq = 0;
        {
            int v = tq.find_vertex(LatticePoint(2 * (n + 1) - 1, -1));
            REQUIRE(v >= 0);
            mq = count_matchings(delete_vertex(tq, v));
        }
        Rat mother = plus_is_a ? mminus : mplus;
        CHECK(mother == mq);
        CHECK(count_matchings(h) == pow2r(static_cast<int>(n)) * ma * mq);
    }
}

TEST_CASE("C_2n splits into the weighted A-tilde and B") {
    for (long n = 1; n <= 3; ++n) {
        CAPTURE(n);
        LatticeGraph c = build_zigzag_c(2 * n);
        AxisSplit s = split_across_vertical(c);
        CHECK(s.k == n);
        Rat mc = count_matchings(c);
        Rat want_a = count_matchings(build_zigzag_a_tilde(n));
        Rat want_b = count_matchings(build_zigzag_b(n));
        Rat mp = count_matchings(s.g_plus), mm = count_matchings(s.g_minus);
        CHECK(mc == pow2r(static_cast<int>(n)) * mp * mm);
        bool match_either = (mp == want_a && mm == want_b) || (mp == want_b && mm == want_a);
        CHECK(match_either);
    }
}

TEST_CASE("factorization identity on random symmetric instances") {
    std::mt19937_64 rng(314159);
    int done = 0;
    int attempts = 0;
    while (done < 50 && attempts < 500) {
        ++attempts;
        LatticeGraph g = random_symmetric_subgraph(rng, 3, 9 + (attempts % 8));
        if (g.n() > 20) continue;
        std::vector<int> axis;
        for (int i = 0; i < g.n(); ++i)
            if (g.verts[i].p.y() == 0) axis.push_back(i);
        if (axis.empty() || axis.size() % 2 != 0) continue;
        AxisSplit s;
        try {
            s = split_across_horizontal(g);
        } catch (const error&) {
            continue;  // axis not a cut set etc.
        }
        Rat lhs = count_matchings_bruteforce(g);
        Rat rhs = pow2r(s.k) * count_matchings_bruteforce(s.g_plus, 20) *
                  count_matchings_bruteforce(s.g_minus, 20);
        CHECK(lhs == rhs);
        CHECK(s.g_plus.n() + s.g_minus.n() == g.n());
        ++done;
    }
    CHECK(done >= 50);
}

TEST_CASE("split error paths") {
    // asymmetric input
    LatticeGraph asym;
    asym.add_vertex(LatticePoint(0, 2));
    asym.add_vertex(LatticePoint(0, 0));
    asym.add_vertex(LatticePoint(2, 0));
    asym.add_edge(0, 1);
    asym.add_edge(1, 2);
    CHECK_THROWS_AS(split_across_horizontal(asym), error);

    // odd number of axis vertices
    LatticeGraph odd;
    odd.add_vertex(LatticePoint(0, 2));
    odd.add_vertex(LatticePoint(0, 0));
    odd.add_vertex(LatticePoint(0, -2));
    odd.add_edge(0, 1);
    odd.add_edge(1, 2);
    CHECK_THROWS_AS(split_across_horizontal(odd), error);

    // axis vertices fail to cut: a vertical edge crossing the axis
    LatticeGraph cross;
    cross.add_vertex(LatticePoint(0, 1));
    cross.add_vertex(LatticePoint(0, -1));
    cross.add_vertex(LatticePoint(2, 0));  // lone axis pairersatz
    cross.add_vertex(LatticePoint(4, 0));
    cross.add_edge(0, 1);
    cross.add_edge(2, 3);
    CHECK_THROWS_AS(split_across_horizontal(cross), error);
}
