#pragma once

#include <vector>

#include "aztec/charpoly.hpp"
#include "aztec/matrix.hpp"
#include "aztec/polynomial.hpp"

namespace aztec {

/// Invariant factors of a polynomial matrix: monic, each dividing the next.
/// Two square rational matrices are similar iff the Smith forms of xI - A
/// agree, which is the strong certificate used when no explicit basis is
/// available.
struct PolySmithForm {
    std::vector<Poly> factors;  // trivial ones included; product = charpoly

    friend bool operator==(const PolySmithForm& a, const PolySmithForm& b) {
        return a.factors == b.factors;
    }
};

namespace detail {

inline void make_monic(Poly& p) {
    if (p.is_zero()) return;
    Rat lead = p.coeffs().back();
    p = p * (Rat(1) / lead);
}

/// Unit-rescales a single polynomial to primitive integer form (content
/// normalization; valid inside gcd computations).
inline void make_primitive(Poly& p) {
    if (p.is_zero()) return;
    Int lcm_den(1), gcd_num(0);
    for (const Rat& c : p.coeffs())
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<Rat> cs(p.coeffs());
    for (Rat& c : cs) {
        c *= Rat(lcm_den);
        mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), c.get_num().get_mpz_t());
    }
    if (gcd_num > 1)
        for (Rat& c : cs) c /= Rat(gcd_num);
    if (cs.back() < 0)
        for (Rat& c : cs) c = -c;
    p = Poly(std::move(cs));
}

/// Monic gcd over Q[x] by the primitive Euclidean algorithm.
inline Poly poly_gcd(Poly a, Poly b) {
    make_primitive(a);
    make_primitive(b);
    while (!b.is_zero()) {
        auto [q, r] = a.divmod(b);
        make_primitive(r);
        a = std::move(b);
        b = std::move(r);
    }
    make_monic(a);
    return a;
}

/// One rational unit rescaling the given polynomials jointly to primitive
/// integer form; scaling a whole row/column by a unit is elementary.
inline Rat primitive_unit(const std::vector<const Poly*>& entries) {
    Int lcm_den(1), gcd_num(0);
    bool any = false;
    for (const Poly* p : entries)
        for (const Rat& c : p->coeffs()) {
            any = true;
            mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den().get_mpz_t());
        }
    if (!any) return Rat(1);
    for (const Poly* p : entries)
        for (const Rat& c : p->coeffs()) {
            Rat scaled = c * Rat(lcm_den);
            mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), scaled.get_num().get_mpz_t());
        }
    if (gcd_num == 0) return Rat(1);
    return rat(lcm_den, gcd_num);
}

inline Poly poly_block_det(const std::vector<std::vector<Poly>>& a, std::vector<size_t> rows,
                           std::vector<size_t> cols) {
    if (rows.empty()) return Poly::constant(Rat(1));
    if (rows.size() == 1) return a[rows[0]][cols[0]];
    Poly det;
    for (size_t t = 0; t < cols.size(); ++t) {
        const Poly& lead = a[rows[0]][cols[t]];
        if (lead.is_zero()) continue;
        std::vector<size_t> subr(rows.begin() + 1, rows.end());
        std::vector<size_t> subc;
        for (size_t s = 0; s < cols.size(); ++s)
            if (s != t) subc.push_back(cols[s]);
        Poly term = lead * poly_block_det(a, subr, subc);
        det = (t % 2 == 0) ? det + term : det - term;
    }
    return det;
}

/// Smith form of a small full-rank polynomial block via determinantal
/// divisor gcds: D_s = gcd of all s x s minors, f_s = D_s / D_{s-1}. Cubic
/// in the block size with bounded-degree gcds, so it avoids the degree
/// blow-up of late-stage elimination.
inline std::vector<Poly> smith_by_minors(const std::vector<std::vector<Poly>>& a,
                                         const std::vector<size_t>& idx) {
    const size_t m = idx.size();
    std::vector<Poly> divisors;  // D_1 .. D_m
    for (size_t s = 1; s <= m; ++s) {
        Poly g;
        std::vector<size_t> rsel(s), csel(s);
        std::function<void(size_t, size_t)> rows_rec = [&](size_t start, size_t depth) {
            if (depth == s) {
                std::function<void(size_t, size_t)> cols_rec = [&](size_t cstart, size_t cdepth) {
                    if (g.degree() == 0 && !g.is_zero()) return;  // gcd is already 1
                    if (cdepth == s) {
                        std::vector<size_t> rr, cc;
                        for (size_t t = 0; t < s; ++t) {
                            rr.push_back(idx[rsel[t]]);
                            cc.push_back(idx[csel[t]]);
                        }
                        Poly minor = poly_block_det(a, rr, cc);
                        if (!minor.is_zero()) g = g.is_zero() ? minor : poly_gcd(g, minor);
                        return;
                    }
                    for (size_t c = cstart; c < m; ++c) {
                        csel[cdepth] = c;
                        cols_rec(c + 1, cdepth + 1);
                    }
                };
                cols_rec(0, 0);
                return;
            }
            for (size_t r = start; r < m; ++r) {
                rsel[depth] = r;
                rows_rec(r + 1, depth + 1);
            }
        };
        rows_rec(0, 0);
        if (g.is_zero()) throw error("smith form: singular block unexpected for xI - A");
        make_monic(g);
        divisors.push_back(std::move(g));
    }
    std::vector<Poly> out;
    Poly prev = Poly::constant(Rat(1));
    for (size_t s = 0; s < m; ++s) {
        Poly f = poly_divide_exact(divisors[s], prev);
        make_monic(f);
        out.push_back(f);
        prev = divisors[s];
    }
    return out;
}

}  // namespace detail

/// Smith normal form of xI - m over Q[x]: minimal-degree pivoting with monic
/// division and whole-row/column content normalization while the trailing
/// block is large, then determinantal-divisor gcds for the last few rows
/// (where elimination degrees would blow up). dim_cap guards runtime;
/// callers catching the cap error fall back to the charpoly-only check.
inline PolySmithForm smith_form_xI_minus_A(const RatMat& m, size_t dim_cap = 40) {
    if (!m.square()) throw error("smith form requires a square matrix");
    const size_t n = m.rows();
    if (n > dim_cap) throw error("smith form dimension over cap; use charpoly-only check");

    std::vector<std::vector<Poly>> a(n, std::vector<Poly>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (i == j)
                a[i][j] = Poly({-m.at(i, j), Rat(1)});
            else
                a[i][j] = Poly::constant(-m.at(i, j));
        }

    auto normalize_row = [&](size_t i, size_t k) {
        std::vector<const Poly*> ptrs;
        for (size_t j = k; j < n; ++j) ptrs.push_back(&a[i][j]);
        Rat u = detail::primitive_unit(ptrs);
        if (u != 1)
            for (size_t j = k; j < n; ++j) a[i][j] = a[i][j] * u;
    };
    auto normalize_col = [&](size_t j, size_t k) {
        std::vector<const Poly*> ptrs;
        for (size_t i = k; i < n; ++i) ptrs.push_back(&a[i][j]);
        Rat u = detail::primitive_unit(ptrs);
        if (u != 1)
            for (size_t i = k; i < n; ++i) a[i][j] = a[i][j] * u;
    };

    constexpr size_t kMinorsBlock = 5;
    std::vector<Poly> diag;
    size_t k = 0;
    while (k < n) {
        if (n - k <= kMinorsBlock) break;  // finish with determinantal divisors
        size_t pi = n, pj = n;
        int best = -1;
        for (size_t i = k; i < n; ++i)
            for (size_t j = k; j < n; ++j)
                if (!a[i][j].is_zero() && (best < 0 || a[i][j].degree() < best)) {
                    best = a[i][j].degree();
                    pi = i;
                    pj = j;
                }
        if (best < 0) break;
        std::swap(a[k], a[pi]);
        for (size_t i = k; i < n; ++i) std::swap(a[i][k], a[i][pj]);

        bool stable = false;
        while (!stable) {
            stable = true;
            for (size_t i = k + 1; i < n; ++i) {
                if (a[i][k].is_zero()) continue;
                auto [q, r] = a[i][k].divmod(a[k][k]);
                for (size_t j = k; j < n; ++j) a[i][j] = a[i][j] - q * a[k][j];
                normalize_row(i, k);
                if (!a[i][k].is_zero()) {
                    std::swap(a[i], a[k]);
                    stable = false;
                }
            }
            for (size_t j = k + 1; j < n; ++j) {
                if (a[k][j].is_zero()) continue;
                auto [q, r] = a[k][j].divmod(a[k][k]);
                for (size_t i = k; i < n; ++i) a[i][j] = a[i][j] - q * a[i][k];
                normalize_col(j, k);
                if (!a[k][j].is_zero()) {
                    for (size_t i = k; i < n; ++i) std::swap(a[i][j], a[i][k]);
                    stable = false;
                }
            }
            if (!stable) continue;
            for (size_t i = k + 1; i < n && stable; ++i)
                for (size_t j = k + 1; j < n && stable; ++j) {
                    if (a[i][j].is_zero()) continue;
                    auto [q, r] = a[i][j].divmod(a[k][k]);
                    if (!r.is_zero()) {
                        for (size_t jj = k; jj < n; ++jj) a[k][jj] = a[k][jj] + a[i][jj];
                        normalize_row(k, k);
                        stable = false;
                    }
                }
        }
        detail::make_monic(a[k][k]);
        diag.push_back(a[k][k]);
        ++k;
    }

    if (k < n) {
        std::vector<size_t> idx;
        for (size_t i = k; i < n; ++i) idx.push_back(i);
        for (Poly& f : detail::smith_by_minors(a, idx)) diag.push_back(std::move(f));
    }

    // self-checks: divisibility chain and product = charpoly
    Poly prod = Poly::constant(Rat(1));
    for (size_t i = 0; i < diag.size(); ++i) {
        prod = prod * diag[i];
        if (i + 1 < diag.size()) {
            auto [q, r] = diag[i + 1].divmod(diag[i]);
            if (!r.is_zero()) throw error("smith form self-check failed: divisibility chain");
        }
    }
    if (prod != charpoly(m)) throw error("smith form self-check failed: product != charpoly");
    return PolySmithForm{std::move(diag)};
}

}  // namespace aztec
