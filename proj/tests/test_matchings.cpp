#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "aztec/families.hpp"
#include "aztec/matchings.hpp"

using namespace aztec;

namespace {

LatticeGraph rect_grid(long w, long h) {
    std::vector<LatticePoint> pts;
    for (long i = 0; i < w; ++i)
        for (long j = 0; j < h; ++j) pts.emplace_back(2 * i, 2 * j);
    return points_with_unit_steps(std::move(pts), 2);
}

LatticeGraph cycle(int n) {
    LatticeGraph g;
    // lay the cycle on a rectangle so coordinates stay planar
    for (int i = 0; i < n; ++i) {
        long x = i < n / 2 ? 2 * i : 2 * (n - 1 - i);
        long y = i < n / 2 ? 0 : 2;
        g.add_vertex(LatticePoint(x, y));
    }
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

/// random connected induced subgraph of a k x k grid
LatticeGraph random_grid_subgraph(std::mt19937_64& rng, long k, int target) {
    std::set<std::pair<long, long>> cells;
    std::pair<long, long> cur{k / 2, k / 2};
    cells.insert(cur);
    std::uniform_int_distribution<int> dir(0, 3);
    const long dx[] = {1, -1, 0, 0}, dy[] = {0, 0, 1, -1};
    int guard = 0;
    while (static_cast<int>(cells.size()) < target && ++guard < 10000) {
        int d = dir(rng);
        std::pair<long, long> nxt{cur.first + dx[d], cur.second + dy[d]};
        if (nxt.first < 0 || nxt.first >= k || nxt.second < 0 || nxt.second >= k) continue;
        cells.insert(nxt);
        cur = nxt;
    }
    std::vector<LatticePoint> pts;
    for (auto& [x, y] : cells) pts.emplace_back(2 * x, 2 * y);
    return points_with_unit_steps(std::move(pts), 2);
}

}  // namespace

TEST_CASE("brute-force oracle basics") {
    LatticeGraph e = build_path_q(2, Rat(1));
    CHECK(count_matchings_bruteforce(e) == 1);
    CHECK(count_matchings_bruteforce(cycle(6)) == 2);
    CHECK(count_matchings_bruteforce(rect_grid(4, 3)) == 11);  // classical 3x4 dimer count
    CHECK(count_matchings_bruteforce(build_path_q(3, Rat(1))) == 0);  // odd order
    CHECK_THROWS_AS(count_matchings_bruteforce(rect_grid(6, 4)), error);  // cap 20
}

TEST_CASE("profile DP equals brute force on families and random subgraphs") {
    std::vector<LatticeGraph> corpus;
    for (long n = 1; n <= 2; ++n) {
        corpus.push_back(build_aztec(n));
        corpus.push_back(build_grid(2 * n));
        corpus.push_back(build_zigzag_a(n));
        corpus.push_back(build_zigzag_b(n));
        corpus.push_back(build_zigzag_c(n));
        corpus.push_back(build_zigzag_d(n));
        corpus.push_back(build_zigzag_a_tilde(n));
        corpus.push_back(build_zigzag_b_tilde(n));
    }
    corpus.push_back(build_holed_square(1));
    corpus.push_back(build_zigzag_c(3));
    corpus.push_back(build_zigzag_d(3));
    std::mt19937_64 rng(20250809);
    for (int i = 0; i < 200; ++i) corpus.push_back(random_grid_subgraph(rng, 5, 8 + (i % 12)));

    for (const auto& g : corpus) {
        if (g.n() > 20) continue;
        CAPTURE(g.n());
        CHECK(count_matchings(g) == count_matchings_bruteforce(g));
    }
}

TEST_CASE("paper values for the holed squares") {
    CHECK(count_matchings(build_holed_square(1)) == 2);
    CHECK(count_matchings(build_holed_square(2)) == 196);
    CHECK(count_matchings(build_grid(2)) == 2);
    CHECK(count_matchings(build_grid(4)) == 36);
}

TEST_CASE("zig-zag regions against hand-computed values") {
    CHECK(count_matchings(build_zigzag_a(1)) == 2);
    CHECK(count_matchings(build_zigzag_b(1)) == 1);
    CHECK(count_matchings(build_zigzag_b(2)) == 3);
    CHECK(count_matchings(build_zigzag_c(1)) == 1);
    CHECK(count_matchings(build_zigzag_c(2)) == 3);
    CHECK(count_matchings(build_zigzag_c(3)) == 8);
    CHECK(count_matchings(build_zigzag_d(1)) == 1);
    CHECK(count_matchings(build_zigzag_d(2)) == 2);
    // weighted tilde variants carry exact rationals
    CHECK(count_matchings(build_zigzag_a_tilde(1)) == rat(3, 2));
    CHECK(count_matchings(build_zigzag_b_tilde(2)) == 2);
}

TEST_CASE("odd vertex count always yields zero") {
    CHECK(count_matchings(build_odd_diamond(1)) == 0);
    CHECK(count_matchings(build_quartered(2)) == 0);
}

TEST_CASE("matching count is multilinear in edge weights") {
    std::mt19937_64 rng(99);
    LatticeGraph g = random_grid_subgraph(rng, 4, 10);
    auto edges = g.edges();
    REQUIRE(!edges.empty());
    auto [u, v, w0] = edges[edges.size() / 2];
    auto with_weight = [&](const Rat& w) {
        LatticeGraph h = g;
        h.arcs.erase({u, v});
        h.arcs.erase({v, u});
        if (w != 0) h.add_edge(u, v, w);
        return count_matchings(h);
    };
    Rat m0 = with_weight(Rat(0));
    Rat m1 = with_weight(Rat(1));
    Rat m2 = with_weight(Rat(2));
    CHECK(m2 - m1 == m1 - m0);  // linear in the chosen edge weight
    Rat mhalf = with_weight(rat(1, 2));
    CHECK(mhalf == m0 + (m1 - m0) / 2);
}

TEST_CASE("DP guards") {
    LatticeGraph wide = rect_grid(2, 30);
    CHECK_THROWS_AS(count_matchings(wide, 10), error);
    LatticeGraph d = build_marked_qad(2);
    CHECK_THROWS_AS(count_matchings(d), error);  // directed input
}
