#pragma once

#include <mpfr.h>

#include <functional>
#include <string>
#include <vector>

#include "aztec/polynomial.hpp"
#include "aztec/rational.hpp"

namespace aztec {

/// Minimal RAII wrapper over an mpfr_t at a fixed precision.
class Real {
  public:
    explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_ui(v_, 0, MPFR_RNDN); }
    Real(const Real& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Real(Real&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    Real& operator=(Real o) {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

    static Real of(long x, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_si(r.v_, x, MPFR_RNDN);
        return r;
    }
    static Real of(const Int& x, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_z(r.v_, x.get_mpz_t(), MPFR_RNDN);
        return r;
    }
    static Real of(const Rat& x, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_q(r.v_, x.get_mpq_t(), MPFR_RNDN);
        return r;
    }
    static Real pi(mpfr_prec_t prec) {
        Real r(prec);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }

    friend Real operator+(const Real& a, const Real& b) {
        Real r(a.prec());
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator-(const Real& a, const Real& b) {
        Real r(a.prec());
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator*(const Real& a, const Real& b) {
        Real r(a.prec());
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator/(const Real& a, const Real& b) {
        Real r(a.prec());
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }

    Real cos() const {
        Real r(prec());
        mpfr_cos(r.v_, v_, MPFR_RNDN);
        return r;
    }
    Real abs() const {
        Real r(prec());
        mpfr_abs(r.v_, v_, MPFR_RNDN);
        return r;
    }

    /// Nearest integer.
    Int round() const {
        Int z;
        mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDN);
        return z;
    }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }

    /// Exponent e with |value| < 2^e (INT_MIN-ish for zero).
    long exp2_bound() const {
        if (is_zero()) return -1000000;
        return static_cast<long>(mpfr_get_exp(v_));
    }

    int cmp(const Real& o) const { return mpfr_cmp(v_, o.v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  private:
    mpfr_t v_;
};

/// cos(t*pi/m) table for t = 0..m at the given precision.
inline std::vector<Real> cos_table(long m, mpfr_prec_t prec) {
    std::vector<Real> t;
    Real pi = Real::pi(prec);
    for (long i = 0; i <= m; ++i)
        t.push_back((Real::of(i, prec) * pi / Real::of(m, prec)).cos());
    return t;
}

enum class FormulaId {
    EQ2_2_PATH_SPECTRUM,
    EQ2_3_GRID_SPECTRUM,
    EQ2_4,
    EQ2_5,
    EQ3_22,
    EQ3_24,
    EQ3_25,
    EQ3_26,
    EQ3_28,
    EQ3_29,
    EQ4_1,
    EQ4_2,
    EQ4_3,
    EQ4_4,
    EQ4_7,
    EQ4_8,
    EQ4_9,
    EQ4_10,
    EQ4_11,
    EQ4_12,
    EQ5_1,
    EQ5_2,
    EQ5_3,
    EQ5_4,
    EQ5_5,
    EQ5_6,
    EQ5_7,
    EQ6_3,
};

inline const std::vector<std::pair<std::string, FormulaId>>& formula_names() {
    static const std::vector<std::pair<std::string, FormulaId>> names = {
        {"EQ2_2_PATH_SPECTRUM", FormulaId::EQ2_2_PATH_SPECTRUM},
        {"EQ2_3_GRID_SPECTRUM", FormulaId::EQ2_3_GRID_SPECTRUM},
        {"EQ2_4", FormulaId::EQ2_4},
        {"EQ2_5", FormulaId::EQ2_5},
        {"EQ3_22", FormulaId::EQ3_22},
        {"EQ3_24", FormulaId::EQ3_24},
        {"EQ3_25", FormulaId::EQ3_25},
        {"EQ3_26", FormulaId::EQ3_26},
        {"EQ3_28", FormulaId::EQ3_28},
        {"EQ3_29", FormulaId::EQ3_29},
        {"EQ4_1", FormulaId::EQ4_1},
        {"EQ4_2", FormulaId::EQ4_2},
        {"EQ4_3", FormulaId::EQ4_3},
        {"EQ4_4", FormulaId::EQ4_4},
        {"EQ4_7", FormulaId::EQ4_7},
        {"EQ4_8", FormulaId::EQ4_8},
        {"EQ4_9", FormulaId::EQ4_9},
        {"EQ4_10", FormulaId::EQ4_10},
        {"EQ4_11", FormulaId::EQ4_11},
        {"EQ4_12", FormulaId::EQ4_12},
        {"EQ5_1", FormulaId::EQ5_1},
        {"EQ5_2", FormulaId::EQ5_2},
        {"EQ5_3", FormulaId::EQ5_3},
        {"EQ5_4", FormulaId::EQ5_4},
        {"EQ5_5", FormulaId::EQ5_5},
        {"EQ5_6", FormulaId::EQ5_6},
        {"EQ5_7", FormulaId::EQ5_7},
        {"EQ6_3", FormulaId::EQ6_3},
    };
    return names;
}

inline FormulaId formula_from_string(const std::string& s) {
    for (const auto& [name, f] : formula_names())
        if (name == s) return f;
    throw error("unknown formula: '" + s + "'");
}

inline std::string formula_to_string(FormulaId f) {
    for (const auto& [name, ff] : formula_names())
        if (ff == f) return name;
    throw error("unknown formula id");
}

struct RoundingCertificate {
    long bits = 0;      // working precision that produced the accepted value
    long dist_exp = 0;  // |product - nearest| < 2^dist_exp
    std::string str() const {
        std::ostringstream os;
        os << "DIST 2^" << dist_exp << " BITS " << bits;
        return os.str();
    }
};

struct FormulaValue {
    Rat value;
    RoundingCertificate cert;
};

namespace detail {

struct FormulaPlan {
    Int denominator = 1;  // value = multiplier * product / denominator
    Int multiplier = 1;
    std::function<Real(mpfr_prec_t)> product;
};

inline FormulaPlan formula_plan(FormulaId id, long n) {
    if (n < 1) throw error("formula evaluation requires n >= 1");
    FormulaPlan plan;
    auto sub2 = [](const std::vector<Real>& c, long j, long k, mpfr_prec_t p) {
        return Real::of(4, p) - Real::of(2, p) * c[j] - Real::of(2, p) * c[k];
    };
    auto prod2cos = [](const std::vector<Real>& c, long j, long k, mpfr_prec_t p) {
        return Real::of(4, p) - Real::of(4, p) * c[j] * c[k];
    };
    auto sq2 = [](const std::vector<Real>& c, long j, long k, mpfr_prec_t p) {
        return Real::of(4, p) * c[j] * c[j] + Real::of(4, p) * c[k] * c[k];
    };

    switch (id) {
        case FormulaId::EQ2_2_PATH_SPECTRUM:
            // the path spectrum evaluated through det(4I - A(P_n))
            plan.product = [n](mpfr_prec_t p) {
                auto c = cos_table(n + 1, p);
                Real r = Real::of(1, p);
                for (long j = 1; j <= n; ++j) r = r * (Real::of(4, p) - Real::of(2, p) * c[j]);
                return r;
            };
            return plan;
        case FormulaId::EQ2_3_GRID_SPECTRUM:
            // the tensor-sum spectrum evaluated through det(4I - A(G_n))
            plan.product = [n, sub2](mpfr_prec_t p) {
                auto c = cos_table(n + 1, p);
                Real r = Real::of(1, p);
                for (long j = 1; j <= n; ++j)
                    for (long k = 1; k <= n; ++k) r = r * sub2(c, j, k, p);
                return r;
            };
            return plan;
        case FormulaId::EQ2_4:
            plan.product = [n, sub2](mpfr_prec_t p) {
                auto c = cos_table(n + 1, p);
                Real r = Real::of(1, p);
                for (long j = 1; j <= n; ++j)
                    for (long k = j + 1; k <= n; ++k) r = r * sub2(c, j, k, p);
                return r;
            };
            return plan;
        case FormulaId::EQ2_5:
            plan.product = [n, sub2](mpfr_prec_t p) {
                auto c = cos_table(n, p);
                Real r = Real::of(1, p);
                for (long j = 1; j <= n - 1; ++j)
                    for (long k = j + 1; k <= n - 1; ++k) r = r * sub2(c, j, k, p);
                return r;
            };
            return plan;
        case FormulaId::EQ3_22:
            plan.product = [n, prod2cos](mpfr_prec_t p) {
                auto c = cos_table(2 * n, p);
                Real r = Real::of(1, p);
                for (long j = 1; j <= 2 * n - 1; ++j)
                    for (long k = j + 1; k <= 2 * n - 1 && j + k <= 2 * n - 1; ++k)
                        r = r * prod2cos(c, j, k, p);
                return r;
            };
            return plan;
        case FormulaId::EQ3_24:
            plan.product = [n, prod2cos](mpfr_prec_t p) {
                auto c = cos_table(2 * n + 2, p);
                Real r = Real::of(4, p);  // leading factor x at x = 4
                for (long j = 1; j <= n; ++j)
                    r = r * (Real::of(4, p) - Real::of(4, p) * c[j] * c[j]);
                for (long j = 1; j <= 2 * n + 1; ++j)
                    for (long k = j + 1; k <= 2 * n + 1; ++k) r = r * prod2cos(c, j, k, p);
                return r;
            };
            return plan;
        case FormulaId::EQ3_25:
            plan.product = [n, prod2cos](mpfr_prec_t p) {
                auto c = cos_table(2 * n + 2, p);
                Real r = Real::of(1, p);
                for (long j = 1; j <= 2 * n + 1; ++j)
                    for (long k = j + 1; j + k <= 2 * n + 1; ++k) r = r * prod2cos(c, j, k, p);
                return r;
            };
            return plan;
        case FormulaId::EQ3_26:
            plan.product = [n, prod2cos](mpfr_prec_t p) {
                auto c = cos_table(2 * n + 1, p);
                Real r = Real::of(1, p);
                for (long j = 1; j <= 2 * n; ++j)
                    for (long k = j + 1; k <= 2 * n && j + k <= 2 * n; ++k)
                        r = r * prod2cos(c, j, k, p);
                return r;
            };
            return plan;
        case FormulaId::EQ3_28:
            plan.product = [n, prod2cos](mpfr_prec_t p) {
                auto c = cos_table(2 * n + 1, p);
                Real r = Real::of(1, p);
                for (long j = 1; j <= n; ++j)
                    r = r * (Real::of(4, p) - Real::of(4, p) * c[j] * c[j]);
                for (long j = 1; j <= 2 * n; ++j)
                    for (long k = j + 1; k <= 2 * n; ++k) r = r * prod2cos(c, j, k, p);
                return r;
            };
            return plan;
        case FormulaId::EQ3_29:
            plan.product = [n, prod2cos](mpfr_prec_t p) {
                auto c = cos_table(2 * n + 1, p);
                Real r = Real::of(1, p);
                for (long j = 1; j <= 2 * n; ++j)
                    for (long k = j + 1; k <= 2 * n && j + k <= 2 * n; ++k)
                        r = r * prod2cos(c, j, k, p);
                return r;
            };
            return plan;
        case FormulaId::EQ4_1:
            plan.denominator = pow2(static_cast<unsigned long>(n));
            plan.product = [n, sub2](mpfr_prec_t p) {
                auto c = cos_table(n + 1, p);
                Real r = Real::of(1, p);
                for (long j = 1; j <= n; ++j)
                    for (long k = j; k <= n; ++k) r = r * sub2(c, j, k, p);
                return r;
            };
            return plan;
        case FormulaId::EQ4_2:
            plan.product = [n, sq2](mpfr_prec_t p) {
                auto c = cos_table(2 * n + 1, p);
                Real r = Real::of(1, p);
                for (long j = 1; j <= n; ++j)
                    for (long k = j + 1; k <= n; ++k) r = r * sq2(c, j, k, p);
                return r;
            };
            return plan;
        case FormulaId::EQ4_3:
            plan.denominator = pow2(static_cast<unsigned long>(2 * ((n + 1) / 2)));
            plan.product = [n, sub2](mpfr_prec_t p) {
                auto c = cos_table(n + 1, p);
                Real r = Real::of(1, p);
                for (long j = 1; j <= n; ++j)
                    for (long k = j; k <= n; ++k)
                        if ((j + k) % 2 == 0) r = r * sub2(c, j, k, p);
                return r;
            };
            return plan;
        case FormulaId::EQ4_4:
            plan.denominator = pow2(static_cast<unsigned long>(n / 2));
            plan.product = [n, sub2](mpfr_prec_t p) {
                auto c = cos_table(n + 1, p);
                Real r = Real::of(1, p);
                for (long j = 1; j <= n; ++j)
                    for (long k = j + 1; k <= n; ++k)
                        if ((j + k) % 2 == 1) r = r * sub2(c, j, k, p);
                return r;
            };
            return plan;
        case FormulaId::EQ4_7:
            // 2^{2n^2} prod (cos^2 + cos^2) with the power folded into the factors
            plan.product = [n, sq2](mpfr_prec_t p) {
                auto c = cos_table(2 * n + 1, p);
                Real r = Real::of(1, p);
                for (long j = 1; j <= n; ++j)
                    for (long k = 1; k <= n; ++k) r = r * sq2(c, j, k, p);
                return r;
            };
            return plan;
        case FormulaId::EQ4_8: {
            FormulaPlan inner = formula_plan(FormulaId::EQ3_22, n);
            plan.multiplier = Int(2 * n);
            plan.product = inner.product;
            return plan;
        }
        case FormulaId::EQ4_9:
            plan.denominator = pow2(static_cast<unsigned long>(2 * n));
            plan.product = [n, sub2](mpfr_prec_t p) {
                auto c = cos_table(2 * n, p);
                Real r = Real::of(1, p);
                for (long j = 1; j <= 2 * n - 1; ++j)
                    for (long k = j; k <= 2 * n - 1; ++k)
                        if ((j + k) % 2 == 0) r = r * sub2(c, j, k, p);
                return r;
            };
            return plan;
        case FormulaId::EQ4_10:
            plan.denominator = pow2(static_cast<unsigned long>(n - 1));
            plan.product = [n, sub2](mpfr_prec_t p) {
                auto c = cos_table(n, p);
                Real r = Real::of(1, p);
                for (long j = 1; j <= n - 1; ++j)
                    for (long k = j; k <= n - 1; ++k) r = r * sub2(c, j, k, p);
                return r;
            };
            return plan;
        case FormulaId::EQ4_11:
            plan.denominator = pow2(static_cast<unsigned long>(2 * n - 2));
            plan.product = [n, sub2](mpfr_prec_t p) {
                auto c = cos_table(2 * n - 1, p);
                Real r = Real::of(1, p);
                for (long j = 1; j <= 2 * n - 2; ++j)
                    for (long k = j; k <= 2 * n - 2; ++k)
                        if ((j + k) % 2 == 0) r = r * sub2(c, j, k, p);
                return r;
            };
            return plan;
        case FormulaId::EQ4_12:
            // 2^{n-1} prod cos folded into prod (2 cos)
            plan.product = [n, sq2](mpfr_prec_t p) {
                auto c = cos_table(2 * n - 1, p);
                Real r = Real::of(1, p);
                for (long j = 1; j <= n - 1; ++j) r = r * (Real::of(2, p) * c[j]);
                for (long j = 1; j <= n - 1; ++j)
                    for (long k = j + 1; k <= n - 1; ++k) r = r * sq2(c, j, k, p);
                return r;
            };
            return plan;
        case FormulaId::EQ5_1:
            plan.denominator = pow2(static_cast<unsigned long>(3 * n));
            plan.product = [n, sub2](mpfr_prec_t p) {
                auto c = cos_table(2 * n + 1, p);
                Real r = Real::of(1, p);
                for (long j = 1; j <= 2 * n; ++j)
                    r = r * (Real::of(4, p) - Real::of(4, p) * c[j]);
                for (long j = 1; j <= n; ++j)
                    for (long k = j + 1; k <= n; ++k) r = r * sub2(c, 2 * j, 2 * k, p);
                return r;
            };
            return plan;
        case FormulaId::EQ5_2:
            plan.denominator = pow2(static_cast<unsigned long>(n - 1));
            plan.product = [n, prod2cos](mpfr_prec_t p) {
                auto c = cos_table(2 * n, p);
                Real r = Real::of(1, p);
                for (long j = 1; j <= 2 * n - 1; ++j)
                    for (long k = j + 1; k <= 2 * n - 1 && j + k <= 2 * n - 1; ++k)
                        if ((j + k) % 2 == 1) r = r * prod2cos(c, j, k, p);
                return r;
            };
            return plan;
        case FormulaId::EQ5_3:
            plan.product = [n, sub2](mpfr_prec_t p) {
                auto c = cos_table(2 * n + 1, p);
                Real r = Real::of(1, p);
                for (long j = 0; j <= n - 1; ++j)
                    for (long k = 0; k <= 2 * n; ++k) r = r * sub2(c, 2 * j + 1, k, p);
                return r;
            };
            return plan;
        case FormulaId::EQ5_4: return formula_plan(FormulaId::EQ4_7, n);
        case FormulaId::EQ5_5:
            plan.multiplier = pow2(static_cast<unsigned long>(n - 2 * (n / 2)));
            plan.product = [n, sub2](mpfr_prec_t p) {
                auto c = cos_table(n + 1, p);
                Real r = Real::of(1, p);
                for (long j = 1; j <= n; ++j)
                    for (long k = j + 1; k <= n; ++k)
                        if ((j + k) % 2 == 1) {
                            Real f = sub2(c, j, k, p);
                            r = r * f * f;
                        }
                return r;
            };
            return plan;
        case FormulaId::EQ5_6:
            plan.multiplier = 2;
            plan.product = [n, sub2, prod2cos](mpfr_prec_t p) {
                auto cn = cos_table(n, p);
                Real r = Real::of(1, p);
                for (long j = 1; j <= n - 1; ++j)
                    for (long k = j; k <= n - 1; ++k) r = r * sub2(cn, j, k, p);
                auto c2 = cos_table(2 * n, p);
                for (long j = 1; j <= 2 * n - 1; ++j)
                    for (long k = j + 1; k <= 2 * n - 1 && j + k <= 2 * n - 1; ++k)
                        if ((j + k) % 2 == 1) r = r * prod2cos(c2, j, k, p);
                return r;
            };
            return plan;
        case FormulaId::EQ5_7:
            plan.denominator = pow2(static_cast<unsigned long>(n));
            plan.product = [n, sub2, sq2](mpfr_prec_t p) {
                auto c = cos_table(2 * n + 1, p);
                Real r = Real::of(1, p);
                for (long j = 1; j <= 2 * n; ++j)
                    r = r * (Real::of(4, p) - Real::of(4, p) * c[j]);
                for (long j = 1; j <= n; ++j)
                    for (long k = j + 1; k <= n; ++k)
                        r = r * sub2(c, 2 * j, 2 * k, p) * sq2(c, j, k, p);
                return r;
            };
            return plan;
        case FormulaId::EQ6_3:
            plan.denominator = Int(2 * n * n);
            plan.product = [n, prod2cos](mpfr_prec_t p) {
                auto c = cos_table(2 * n, p);
                Real r = Real::of(1, p);
                for (long j = 1; j <= 2 * n - 1; ++j) {
                    Real f = Real::of(4, p) - Real::of(4, p) * c[j];
                    r = r * f * f;
                }
                for (long j = 1; j <= 2 * n - 1; ++j)
                    for (long k = 1; k <= 2 * n - 1; ++k) r = r * prod2cos(c, j, k, p);
                return r;
            };
            return plan;
    }
    throw error("unknown formula id");
}

}  // namespace detail

/// Evaluates the product at high precision and rounds to the exact value
/// with a certificate: the scaled product must sit within 2^-64 (relative)
/// of an integer and the rounding must be stable under doubling the
/// precision. The precision ladder runs 256 -> 512 -> 1024 bits (starting
/// from the requested precision).
inline FormulaValue eval_formula(FormulaId id, long n, mpfr_prec_t precision = 256) {
    detail::FormulaPlan plan = detail::formula_plan(id, n);
    for (int step = 0; step < 3; ++step) {
        mpfr_prec_t bits = precision << step;
        Real prod = plan.product(bits);
        Real scaled = prod * Real::of(plan.multiplier, bits);
        Int p = scaled.round();
        Real dist = (scaled - Real::of(p, bits)).abs();
        // accept iff dist < 2^-64 * max(1, |scaled|)
        long bound_exp = std::max(0L, scaled.exp2_bound()) - 64;
        if (!dist.is_zero() && dist.exp2_bound() > bound_exp) continue;

        Real prod2 = plan.product(bits * 2);
        Real scaled2 = prod2 * Real::of(plan.multiplier, bits * 2);
        Int p2 = scaled2.round();
        if (p2 != p) continue;

        FormulaValue out;
        out.value = rat(p, plan.denominator);
        out.cert.bits = bits;
        out.cert.dist_exp = dist.is_zero() ? -static_cast<long>(bits) : dist.exp2_bound();
        return out;
    }
    throw error("rounding certificate failed for " + formula_to_string(id) + " at n=" +
                std::to_string(n) + "; raise --precision");
}

// ---------------------------------------------------------------------------
// Path-like spectra (symbolic cosine descriptors)
// ---------------------------------------------------------------------------

enum class PathLike { P, P2, Q, QP, R, RP };

/// value = shift + scale * cos(num*pi/den)
struct CosDescriptor {
    Rat scale;
    Rat shift;
    long num;
    long den;
};

inline std::vector<CosDescriptor> path_like_spectra(PathLike id, long n) {
    if (n < 1) throw error("spectra require n >= 1");
    std::vector<CosDescriptor> out;
    for (long j = 1; j <= n; ++j) {
        switch (id) {
            case PathLike::P: out.push_back({Rat(2), Rat(0), j, n + 1}); break;
            case PathLike::P2: out.push_back({Rat(4), Rat(0), j, n + 1}); break;
            case PathLike::Q: out.push_back({Rat(2), Rat(2), j, n + 1}); break;
            case PathLike::QP: out.push_back({Rat(2), Rat(-2), j, n + 1}); break;
            case PathLike::R: out.push_back({Rat(2), Rat(2), 2 * j, 2 * n + 1}); break;
            case PathLike::RP: out.push_back({Rat(-2), Rat(-2), 2 * j, 2 * n + 1}); break;
        }
    }
    return out;
}

inline Real descriptor_value(const CosDescriptor& d, mpfr_prec_t prec) {
    Real angle = Real::of(d.num, prec) * Real::pi(prec) / Real::of(d.den, prec);
    return Real::of(d.shift, prec) + Real::of(d.scale, prec) * angle.cos();
}

/// Checks that prod (x - roots[i]) matches the exact polynomial coefficient
/// by coefficient to within 2^-tol_exp (relative).
inline bool roots_match_poly(const Poly& poly, const std::vector<Real>& roots, long tol_exp,
                             mpfr_prec_t prec) {
    if (poly.degree() != static_cast<int>(roots.size())) return false;
    // expand prod (x - r) keeping ascending coefficients
    std::vector<Real> coeff;
    coeff.push_back(Real::of(1, prec));
    for (const Real& r : roots) {
        std::vector<Real> next(coeff.size() + 1, Real(prec));
        for (size_t i = 0; i < coeff.size(); ++i) {
            next[i + 1] = next[i + 1] + coeff[i];  // x * c_i
            next[i] = next[i] - r * coeff[i];      // -root * c_i
        }
        coeff = std::move(next);
    }
    for (int i = 0; i <= poly.degree(); ++i) {
        Real want = Real::of(poly[i], prec);
        Real diff = (coeff[i] - want).abs();
        long bound = std::max(0L, want.abs().exp2_bound()) - tol_exp;
        if (!diff.is_zero() && diff.exp2_bound() > bound) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Encoded high-dimensional grid characteristic polynomials
// ---------------------------------------------------------------------------

namespace detail {

struct FactoredForm {
    std::vector<std::pair<Poly, unsigned>> outer;
    std::vector<std::pair<Poly, unsigned>> bracket;
    unsigned bracket_exp = 1;

    Poly expand() const {
        Poly r = Poly::constant(Rat(1));
        for (const auto& [f, e] : outer) r = r * f.pow(e);
        Poly b = Poly::constant(Rat(1));
        for (const auto& [f, e] : bracket) b = b * f.pow(e);
        return r * b.pow(bracket_exp);
    }
};

inline Poly pp(std::initializer_list<long> coeffs) { return Poly::from_ints(coeffs); }

}  // namespace detail

/// Expands the displayed factorizations of the characteristic polynomials of
/// the d-dimensional grids, d = 3, 4, n = 1..5, into monic integer
/// polynomials.
inline Poly encoded_highdim_charpoly(int d, long n) {
    using detail::FactoredForm;
    using detail::pp;
    const Poly x = pp({0, 1});
    FactoredForm f;
    if (d == 3) {
        switch (n) {
            case 1: return x;
            case 2:
                f.outer = {{pp({-3, 1}), 1}, {pp({3, 1}), 1}};
                f.bracket = {{pp({-1, 1}), 1}, {pp({1, 1}), 1}};
                f.bracket_exp = 3;
                return f.expand();
            case 3:
                f.outer = {{x, 1}, {pp({-18, 0, 1}), 1}};
                f.bracket = {{x, 2}, {pp({-8, 0, 1}), 1}, {pp({-2, 0, 1}), 2}};
                f.bracket_exp = 3;
                return f.expand();
            case 4:
                f.outer = {{pp({-9, -3, 1}), 1}, {pp({-9, 3, 1}), 1}};
                f.bracket = {{pp({1, -3, 1}), 1},  {pp({1, 3, 1}), 1},  {pp({-11, -1, 1}), 1},
                             {pp({-11, 1, 1}), 1}, {pp({-1, -1, 1}), 3}, {pp({-1, 1, 1}), 3}};
                f.bracket_exp = 3;
                return f.expand();
            case 5:
                f.outer = {{x, 1}, {pp({-3, 1}), 1}, {pp({3, 1}), 1}, {pp({-27, 0, 1}), 1}};
                f.bracket = {{x, 4},
                             {pp({-2, 1}), 1},
                             {pp({2, 1}), 1},
                             {pp({-12, 0, 1}), 1},
                             {pp({1, -4, 1}), 1},
                             {pp({1, 4, 1}), 1},
                             {pp({-11, -2, 1}), 1},
                             {pp({-11, 2, 1}), 1},
                             {pp({-2, -2, 1}), 2},
                             {pp({-2, 2, 1}), 2},
                             {pp({-1, 1}), 4},
                             {pp({1, 1}), 4},
                             {pp({-3, 0, 1}), 4}};
                f.bracket_exp = 3;
                return f.expand();
            default: break;
        }
    } else if (d == 4) {
        switch (n) {
            case 1: return x;
            case 2:
                f.outer = {{x, 2}, {pp({-4, 1}), 1}, {pp({4, 1}), 1}};
                f.bracket = {{x, 1}, {pp({-2, 1}), 1}, {pp({2, 1}), 1}};
                f.bracket_exp = 4;
                return f.expand();
            case 3:
                f.outer = {{x, 3}, {pp({-32, 0, 1}), 1}, {pp({-8, 0, 1}), 2}};
                f.bracket = {{x, 4}, {pp({-18, 0, 1}), 1}, {pp({-8, 0, 1}), 2}, {pp({-2, 0, 1}), 4}};
                f.bracket_exp = 4;
                return f.expand();
            case 4:
                f.outer = {{x, 4},
                           {pp({-2, 1}), 2},
                           {pp({2, 1}), 2},
                           {pp({-16, -4, 1}), 1},
                           {pp({-16, 4, 1}), 1},
                           {pp({-20, 0, 1}), 2}};
                f.bracket = {{x, 8},
                             {pp({-2, 1}), 1},
                             {pp({2, 1}), 1},
                             {pp({-20, 0, 1}), 1},
                             {pp({-1, -4, 1}), 1},
                             {pp({-1, 4, 1}), 1},
                             {pp({-19, -2, 1}), 1},
                             {pp({-19, 2, 1}), 1},
                             {pp({-4, -2, 1}), 4},
                             {pp({-4, 2, 1}), 4},
                             {pp({-1, 1}), 6},
                             {pp({1, 1}), 6},
                             {pp({-5, 0, 1}), 6}};
                f.bracket_exp = 4;
                return f.expand();
            case 5:
                f.outer = {{x, 5},
                           {pp({-4, 1}), 1},
                           {pp({4, 1}), 1},
                           {pp({-48, 0, 1}), 1},
                           {pp({-2, 1}), 2},
                           {pp({2, 1}), 2},
                           {pp({-12, 0, 1}), 2},
                           {pp({-8, -4, 1}), 2},
                           {pp({-8, 4, 1}), 2}};
                f.bracket = {{x, 14},
                             {pp({-3, 1}), 1},
                             {pp({3, 1}), 1},
                             {pp({6, -6, 1}), 1},
                             {pp({6, 6, 1}), 1},
                             {pp({-26, -2, 1}), 1},
                             {pp({-26, 2, 1}), 1},
                             {pp({-27, 0, 1}), 1},
                             {pp({-8, -4, 1}), 1},
                             {pp({-8, 4, 1}), 1},
                             {pp({1, -4, 1}), 3},
                             {pp({1, 4, 1}), 3},
                             {pp({-11, -2, 1}), 3},
                             {pp({-11, 2, 1}), 3},
                             {pp({-2, 1}), 5},
                             {pp({2, 1}), 5},
                             {pp({-12, 0, 1}), 5},
                             {pp({-2, -2, 1}), 9},
                             {pp({-2, 2, 1}), 9},
                             {pp({-1, 1}), 10},
                             {pp({1, 1}), 10},
                             {pp({-3, 0, 1}), 10}};
                f.bracket_exp = 4;
                return f.expand();
            default: break;
        }
    }
    throw error("(d, n) outside the encoded table");
}

}  // namespace aztec
