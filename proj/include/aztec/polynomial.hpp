#pragma once

#include <algorithm>
#include <sstream>
#include <vector>

#include "aztec/rational.hpp"

namespace aztec {

/// Univariate polynomial with exact rational coefficients, ascending degree.
/// Integer-coefficient polynomials (characteristic polynomials of integer
/// graphs, the encoded factorizations) are the is_integral() case.
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly constant(const Rat& v) { return Poly({v}); }
    static Poly x() { return Poly({Rat(0), Rat(1)}); }

    /// p(x) = c0 + c1 x + ... given as integer list.
    static Poly from_ints(std::initializer_list<long> coeffs) {
        std::vector<Rat> v;
        for (long z : coeffs) v.emplace_back(z);
        return Poly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const Rat& operator[](size_t i) const {
        static const Rat kZero(0);
        return i < c_.size() ? c_[i] : kZero;
    }

    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_integral() const {
        return std::all_of(c_.begin(), c_.end(), [](const Rat& r) { return is_integer(r); });
    }

    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()), Rat(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return Poly(std::move(r));
    }

    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()), Rat(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
        return Poly(std::move(r));
    }

    friend Poly operator-(const Poly& a) { return Poly::zero() - a; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<Rat> r(a.c_.size() + b.c_.size() - 1, Rat(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(r));
    }

    friend Poly operator*(const Poly& a, const Rat& s) {
        std::vector<Rat> r = a.c_;
        for (auto& v : r) v *= s;
        return Poly(std::move(r));
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Rat eval(const Rat& x) const {
        Rat acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Poly pow(unsigned e) const {
        Poly r = constant(Rat(1));
        Poly base = *this;
        while (e) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    /// Quotient and remainder of division by a nonzero polynomial.
    std::pair<Poly, Poly> divmod(const Poly& d) const {
        if (d.is_zero()) throw error("polynomial division by zero");
        Poly rem = *this;
        std::vector<Rat> q(rem.c_.size() > d.c_.size() - 1 ? rem.c_.size() - d.c_.size() + 1 : 0,
                           Rat(0));
        while (!rem.is_zero() && rem.degree() >= d.degree()) {
            Rat f = rem.c_.back() / d.c_.back();
            int shift = rem.degree() - d.degree();
            q[shift] = f;
            std::vector<Rat> sub(rem.c_);
            for (size_t i = 0; i < d.c_.size(); ++i) sub[i + shift] -= f * d.c_[i];
            rem = Poly(std::move(sub));
        }
        return {Poly(std::move(q)), rem};
    }

    std::string str() const {
        std::ostringstream os;
        os << "poly " << (is_zero() ? 0 : degree()) << ":";
        if (is_zero())
            os << " 0";
        else
            for (const Rat& v : c_) os << " " << to_string(v);
        return os.str();
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rat> c_;
};

inline Poly poly_mul(const Poly& a, const Poly& b) { return a * b; }

inline Rat poly_eval(const Poly& p, const Rat& x) { return p.eval(x); }

/// Exact division; throws when the remainder is nonzero.
inline Poly poly_divide_exact(const Poly& a, const Poly& b) {
    auto [q, r] = a.divmod(b);
    if (!r.is_zero()) throw error("polynomial division leaves remainder " + r.str());
    return q;
}

/// Parses the `poly <degree>: c0 c1 ... cd` text form.
inline Poly poly_parse(const std::string& text) {
    std::istringstream is(text);
    std::string kw;
    int deg = 0;
    char colon = 0;
    if (!(is >> kw >> deg) || kw != "poly") throw error("bad polynomial text: '" + text + "'");
    is >> colon;
    if (colon != ':') throw error("bad polynomial text (missing colon): '" + text + "'");
    std::vector<Rat> c;
    std::string tok;
    while (is >> tok) c.push_back(parse_rational(tok));
    if (static_cast<int>(c.size()) != deg + 1)
        throw error("polynomial coefficient count does not match degree");
    return Poly(std::move(c));
}

}  // namespace aztec
