#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "aztec/families.hpp"
#include "aztec/graph_io.hpp"

using namespace aztec;

TEST_CASE("serialize/parse round-trips canonical text") {
    for (long n = 1; n <= 4; ++n) {
        for (Family f : {Family::AZTEC, Family::QUARTERED, Family::MARKED_HMD,
                         Family::ZIGZAG_B_TILDE, Family::BLOCK_S}) {
            LatticeGraph g = build_family({f, n});
            std::string s = serialize(g);
            CHECK(serialize(parse(s)) == s);
        }
    }
}

TEST_CASE("round trip on random weighted graphs") {
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<long> coord(-6, 6);
    std::uniform_int_distribution<long> num(1, 9);
    std::uniform_int_distribution<long> den(1, 5);
    for (int trial = 0; trial < 20; ++trial) {
        LatticeGraph g;
        g.directed = trial % 2 == 0;
        for (int i = 0; i < 6; ++i)
            g.add_vertex(LatticePoint(2 * coord(rng) + i * 20, 2 * coord(rng)), i == 0);
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) {
                if (!g.directed && j <= i) continue;
                if ((i + j + trial) % 3 != 0) continue;
                Rat w = rat(num(rng), den(rng));
                if (g.directed)
                    g.add_arc(i, j, w);
                else
                    g.add_edge(i, j, w);
            }
        std::string s = serialize(g);
        LatticeGraph h = parse(s);
        CHECK(serialize(h) == s);
        CHECK(h.arcs == g.arcs);
    }
}

TEST_CASE("weight 1/2 parses to the exact rational") {
    std::string text =
        "graph undirected 2\n"
        "v 0 0 0\n"
        "v 1 2 0\n"
        "a 0 1 1/2\n";
    LatticeGraph g = parse(text);
    CHECK(g.weight(0, 1) == rat(1, 2));
    CHECK(g.weight(1, 0) == rat(1, 2));
}

TEST_CASE("comments and diagnostics") {
    std::string ok =
        "# comment line\n"
        "graph directed 1   # trailing comment\n"
        "v 0 0 0 m\n"
        "a 0 0 2/1\n";
    LatticeGraph g = parse(ok);
    CHECK(g.verts[0].marked);
    CHECK(g.weight(0, 0) == 2);

    auto fails_with = [](const std::string& text, const std::string& needle) {
        try {
            parse(text);
        } catch (const error& e) {
            std::string msg = e.what();
            return msg.find("line") != std::string::npos && msg.find(needle) != std::string::npos;
        }
        return false;
    };
    // arc referencing an unknown vertex id
    CHECK(fails_with("graph undirected 1\nv 0 0 0\na 0 3 1/1\n", "unknown vertex"));
    CHECK(fails_with("graph undirected 1\nv 0 0 0\na 0 0 1\n", "p/q"));
    CHECK(fails_with("graph undirected 1\nv 0 0 0\na 0 0 1/0\n", "rational"));
    CHECK(fails_with("noise\n", "header"));
    CHECK(fails_with("graph undirected 2\nv 0 0 0\n", "not declared"));
}
