#pragma once

#include "aztec/matrix.hpp"
#include "aztec/polynomial.hpp"

namespace aztec {

/// det(xI - m), computed exactly by evaluating det(kI - m) at the integer
/// points k = 0..dim and interpolating (Newton divided differences).
///
/// Self-checks on every call: the result is monic of degree dim, the
/// x^(dim-1) coefficient equals -trace, and re-evaluating at 0 reproduces
/// the directly computed determinant.
inline Poly charpoly(const RatMat& m) {
    if (!m.square()) throw error("charpoly requires a square matrix");
    const size_t n = m.rows();
    if (n == 0) return Poly::constant(Rat(1));

    std::vector<Rat> ys(n + 1);
    for (size_t k = 0; k <= n; ++k) {
        RatMat t = m;
        for (size_t i = 0; i < n; ++i) t.at(i, i) = Rat(static_cast<long>(k)) - t.at(i, i);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                if (i != j) t.at(i, j) = -t.at(i, j);
        ys[k] = determinant(t);
    }

    // Newton form on nodes 0,1,...,n with exact divided differences.
    std::vector<Rat> dd = ys;
    for (size_t level = 1; level <= n; ++level)
        for (size_t i = n; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / Rat(static_cast<long>(level));
            if (i == level) break;
        }
    Poly p = Poly::constant(dd[n]);
    for (size_t k = n; k-- > 0;) {
        Poly node({Rat(-static_cast<long>(k)), Rat(1)});  // (x - k)
        p = p * node + Poly::constant(dd[k]);
    }

    if (p.degree() != static_cast<int>(n) || !p.is_monic())
        throw error("charpoly self-check failed: not monic of the right degree");
    if (n >= 1 && p[n - 1] != -m.trace())
        throw error("charpoly self-check failed: trace coefficient mismatch");
    if (p.eval(Rat(0)) != ys[0])
        throw error("charpoly self-check failed: constant term mismatch");
    return p;
}

}  // namespace aztec
