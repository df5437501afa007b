#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "aztec/charpoly.hpp"
#include "aztec/matrix.hpp"
#include "aztec/polynomial.hpp"
#include "aztec/smith.hpp"

using namespace aztec;

namespace {

// independent determinant oracle: cofactor expansion along the first row
Rat cofactor_det(const RatMat& m) {
    size_t n = m.rows();
    if (n == 0) return Rat(1);
    if (n == 1) return m.at(0, 0);
    Rat det(0);
    for (size_t j = 0; j < n; ++j) {
        if (m.at(0, j) == 0) continue;
        RatMat minor(n - 1, n - 1);
        for (size_t i = 1; i < n; ++i) {
            size_t cc = 0;
            for (size_t k = 0; k < n; ++k) {
                if (k == j) continue;
                minor.at(i - 1, cc++) = m.at(i, k);
            }
        }
        Rat term = m.at(0, j) * cofactor_det(minor);
        if (j % 2 == 1) term = -term;
        det += term;
    }
    return det;
}

RatMat random_rat_matrix(std::mt19937_64& rng, size_t n) {
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 4);
    RatMat m(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) m.at(i, j) = rat(num(rng), den(rng));
    return m;
}

}  // namespace

TEST_CASE("determinant basics") {
    CHECK(determinant(RatMat::identity(5)) == 1);

    RatMat m(2, 2);
    m.at(0, 1) = 2;
    m.at(1, 0) = 2;
    CHECK(determinant(m) == -4);

    RatMat r(1, 2);
    CHECK_THROWS_AS(determinant(r), error);
}

TEST_CASE("determinant matches the cofactor oracle on random rational matrices") {
    std::mt19937_64 rng(20240811);
    for (int trial = 0; trial < 10; ++trial) {
        RatMat m = random_rat_matrix(rng, 6);
        CHECK(determinant(m) == cofactor_det(m));
    }
}

TEST_CASE("determinant is multiplicative on random 4x4 pairs") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        RatMat a = random_rat_matrix(rng, 4);
        RatMat b = random_rat_matrix(rng, 4);
        CHECK(determinant(a * b) == determinant(a) * determinant(b));
    }
}

TEST_CASE("exact inverse round-trips") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 5; ++trial) {
        RatMat m = random_rat_matrix(rng, 5);
        if (determinant(m) == 0) continue;
        auto inv = inverse(m);
        REQUIRE(inv.has_value());
        CHECK(m * *inv == RatMat::identity(5));
    }
    RatMat z(3, 3);
    CHECK_FALSE(inverse(z).has_value());
}

TEST_CASE("polynomial arithmetic") {
    Poly a = Poly::from_ints({-4, 0, 1});  // x^2 - 4
    Poly x2 = Poly::from_ints({0, 0, 1});
    CHECK(a * x2 == Poly::from_ints({0, 0, -4, 0, 1}));

    CHECK(poly_eval(a, Rat(3)) == 5);
    CHECK(poly_divide_exact(a, Poly::from_ints({-2, 1})) == Poly::from_ints({2, 1}));
    // x^3 + 1 by x - 1 leaves remainder 2
    CHECK_THROWS_AS(poly_divide_exact(Poly::from_ints({1, 0, 0, 1}), Poly::from_ints({-1, 1})),
                    error);

    Poly p(std::vector<Rat>{rat(1, 2), Rat(0), Rat(3)});
    CHECK(poly_parse(p.str()) == p);
    CHECK(poly_parse("poly 2: 1/2 0 3") == p);
    CHECK_THROWS_AS(poly_parse("poly 2: 1"), error);
}

TEST_CASE("charpoly of small matrices") {
    // 4-cycle adjacency: x^4 - 4x^2
    RatMat c4(4, 4);
    auto edge = [&](int u, int v) {
        c4.at(u, v) = 1;
        c4.at(v, u) = 1;
    };
    edge(0, 1);
    edge(1, 2);
    edge(2, 3);
    edge(3, 0);
    CHECK(charpoly(c4) == Poly::from_ints({0, 0, -4, 0, 1}));

    // weighted path on 3 vertices with edge weights 2: x^3 - 8x
    RatMat p3(3, 3);
    p3.at(0, 1) = p3.at(1, 0) = 2;
    p3.at(1, 2) = p3.at(2, 1) = 2;
    CHECK(charpoly(p3) == Poly::from_ints({0, -8, 0, 1}));

    CHECK(charpoly(RatMat(0, 0)) == Poly::constant(Rat(1)));
    RatMat bad(2, 3);
    CHECK_THROWS_AS(charpoly(bad), error);
}

TEST_CASE("smith form certificates") {
    // diag(1,1): invariant factors (x-1), (x-1)
    RatMat d = RatMat::identity(2);
    auto s = smith_form_xI_minus_A(d);
    REQUIRE(s.factors.size() == 2);
    CHECK(s.factors[0] == Poly::from_ints({-1, 1}));
    CHECK(s.factors[1] == Poly::from_ints({-1, 1}));

    // Jordan block vs identity: same charpoly, different Smith forms
    RatMat j = RatMat::identity(2);
    j.at(0, 1) = 1;
    auto sj = smith_form_xI_minus_A(j);
    CHECK(charpoly(j) == charpoly(d));
    CHECK_FALSE(sj == s);
    REQUIRE(sj.factors.size() >= 1);
    CHECK(sj.factors.back() == Poly::from_ints({1, -2, 1}));  // (x-1)^2

    RatMat big(41, 41);
    CHECK_THROWS_AS(smith_form_xI_minus_A(big), error);
}

TEST_CASE("smith form detects similarity of conjugates") {
    std::mt19937_64 rng(123);
    RatMat a = random_rat_matrix(rng, 4);
    RatMat p = random_rat_matrix(rng, 4);
    while (determinant(p) == 0) p = random_rat_matrix(rng, 4);
    RatMat b = *inverse(p) * a * p;
    CHECK(smith_form_xI_minus_A(a) == smith_form_xI_minus_A(b));
}
