#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "aztec/cli.hpp"

using namespace aztec;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("trees subcommand") {
    RunResult r = run({"trees", "QUARTERED", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "4\n");
}

TEST_CASE("census holes table") {
    RunResult r = run({"census", "holes", "--max-n", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "H 1 2 2^1*1^2\nH 2 196 2^2*7^2\n");
}

TEST_CASE("formula verification over a range") {
    RunResult r = run({"verify", "formula", "EQ2_5", "--n", "2..8"});
    CHECK(r.code == 0);
    int passes = 0;
    std::istringstream is(r.out);
    std::string line;
    while (std::getline(is, line)) {
        CHECK(line.find("FORMULA EQ2_5") == 0);
        if (line.find(" PASS") != std::string::npos) ++passes;
    }
    CHECK(passes == 7);
}

TEST_CASE("theorem certificates") {
    RunResult r = run({"verify", "theorem", "2.1", "--n", "2..4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("CERT THM2.1 2 explicit-basis PASS") != std::string::npos);
    CHECK(r.out.find("CERT THM2.1 4 explicit-basis PASS") != std::string::npos);

    RunResult s = run({"verify", "theorem", "6.1", "--n", "1..2", "--mode", "charpoly"});
    CHECK(s.code == 0);
    CHECK(s.out.find("CERT THM6.1 1 charpoly PASS") != std::string::npos);
}

TEST_CASE("highdim verification") {
    RunResult r = run({"highdim", "verify", "--d", "3", "--n", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "HIGHDIM d=3 n=2 PASS\n");
}

TEST_CASE("matchings with oracle cross-check") {
    RunResult r = run({"matchings", "HOLED_SQUARE", "1", "--oracle"});
    CHECK(r.code == 0);
    CHECK(r.out == "2\nORACLE 2 PASS\n");
}

TEST_CASE("symmetry subcommand with oracle") {
    RunResult r = run({"symmetry", "AZTEC", "1", "--group", "h", "--oracle"});
    CHECK(r.code == 0);
    CHECK(r.out == "SYM AZTEC 1 h 2 oracle 2 PASS\n");

    RunResult e = run({"symmetry", "AZTEC", "2", "--group", "hv"});
    CHECK(e.code == 0);
    CHECK(e.out == "SYM AZTEC 2 hv 0 empty\n");

    RunResult m = run({"symmetry", "HOLED_SQUARE", "2", "--group", "hv", "--oracle"});
    CHECK(m.code == 0);
    CHECK(m.out == "SYM HOLED_SQUARE 2 hv 2 oracle 2 PASS\n");
}

TEST_CASE("build emits the exchange format and round-trips") {
    RunResult r = run({"build", "AZTEC", "1"});
    CHECK(r.code == 0);
    LatticeGraph g = parse(r.out);
    CHECK(g.n() == 4);
    CHECK(serialize(g) == r.out);
}

TEST_CASE("charpoly subcommand") {
    RunResult r = run({"charpoly", "PATH_Q", "2", "--q", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "poly 2: -4 0 1\n");
}

TEST_CASE("byte-identical reruns") {
    for (auto args : {std::vector<std::string>{"verify", "formula", "EQ4_2", "--n", "1..4"},
                      std::vector<std::string>{"census", "holes", "--max-n", "3"},
                      std::vector<std::string>{"build", "MARKED_HMD", "3"}}) {
        RunResult a = run(args);
        RunResult b = run(args);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("usage errors are diagnosed") {
    RunResult r = run({"trees", "NO_SUCH_FAMILY", "3"});
    CHECK(r.code != 0);
    CHECK(r.err.find("unknown family") != std::string::npos);

    RunResult s = run({"verify", "theorem", "9.9", "--n", "2"});
    CHECK(s.code != 0);

    RunResult t = run({});
    CHECK(t.code != 0);
}

TEST_CASE("failing verifications exit nonzero") {
    // EQ5_5 at a huge n would be slow; instead check exit discipline with a
    // formula-counterpart mismatch is impossible by construction, so use the
    // oracle path on a directed graph to trigger a clean error instead
    RunResult r = run({"matchings", "MARKED_QAD", "2"});
    CHECK(r.code == 2);
    CHECK(r.err.find("error:") != std::string::npos);
}
