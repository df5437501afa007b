#pragma once

#include <optional>
#include <vector>

#include "aztec/rational.hpp"

namespace aztec {

/// Dense exact-rational matrix.
class RatMat {
  public:
    RatMat() = default;
    RatMat(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

    static RatMat identity(size_t n) {
        RatMat m(n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Rat& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Rat& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    friend RatMat operator*(const RatMat& a, const RatMat& b) {
        if (a.cols_ != b.rows_) throw error("matrix product shape mismatch");
        RatMat r(a.rows_, b.cols_);
        for (size_t i = 0; i < a.rows_; ++i)
            for (size_t k = 0; k < a.cols_; ++k) {
                const Rat& v = a.at(i, k);
                if (v == 0) continue;
                for (size_t j = 0; j < b.cols_; ++j) r.at(i, j) += v * b.at(k, j);
            }
        return r;
    }

    friend bool operator==(const RatMat& a, const RatMat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    RatMat transposed() const {
        RatMat r(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    Rat trace() const {
        Rat t(0);
        for (size_t i = 0; i < rows_; ++i) t += at(i, i);
        return t;
    }

  private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

/// Exact determinant: per-row denominators are cleared, then fraction-free
/// Bareiss elimination runs over the integers.
inline Rat determinant(const RatMat& m) {
    if (!m.square()) throw error("determinant requires a square matrix");
    const size_t n = m.rows();
    if (n == 0) return Rat(1);

    std::vector<Int> a(n * n);
    Int scale(1);  // product of row multipliers
    for (size_t i = 0; i < n; ++i) {
        Int l(1);
        for (size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
        scale *= l;
        for (size_t j = 0; j < n; ++j) {
            Rat v = m.at(i, j) * Rat(l);
            a[i * n + j] = v.get_num();  // denominator is 1 after scaling
        }
    }

    Int prev(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k * n + k] == 0) {
            size_t p = k + 1;
            while (p < n && a[p * n + k] == 0) ++p;
            if (p == n) return Rat(0);
            for (size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[p * n + j]);
            sign = -sign;
        }
        const Int& pivot = a[k * n + k];
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Int t = a[i * n + j] * pivot - a[i * n + k] * a[k * n + j];
                mpz_divexact(a[i * n + j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i * n + k] = 0;
        }
        prev = pivot;
    }
    Rat det = rat(a[n * n - 1], scale);
    if (sign < 0) det = -det;
    return det;
}

/// Exact inverse by Gauss-Jordan; nullopt for singular input.
inline std::optional<RatMat> inverse(const RatMat& m) {
    if (!m.square()) throw error("inverse requires a square matrix");
    const size_t n = m.rows();
    RatMat a = m;
    RatMat inv = RatMat::identity(n);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a.at(piv, col) == 0) ++piv;
        if (piv == n) return std::nullopt;
        if (piv != col)
            for (size_t j = 0; j < n; ++j) {
                std::swap(a.at(piv, j), a.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        Rat d = a.at(col, col);
        for (size_t j = 0; j < n; ++j) {
            a.at(col, j) /= d;
            inv.at(col, j) /= d;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == col) continue;
            Rat f = a.at(i, col);
            if (f == 0) continue;
            for (size_t j = 0; j < n; ++j) {
                a.at(i, j) -= f * a.at(col, j);
                inv.at(i, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

}  // namespace aztec
