#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace aztec {

using Int = mpz_class;
using Rat = mpq_class;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline Int pow2(unsigned long e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

/// Exact integer square root; returns false unless n is a perfect square.
inline bool perfect_square_root(const Int& n, Int& root) {
    if (n < 0) return false;
    if (!mpz_perfect_square_p(n.get_mpz_t())) return false;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    return true;
}

inline std::string to_string(const Int& z) { return z.get_str(); }

inline std::string to_string(const Rat& r) {
    if (is_integer(r)) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Parses "p" or "p/q" into an exact rational. Throws aztec::error on junk.
inline Rat parse_rational(const std::string& s) {
    if (s.empty()) throw error("empty rational literal");
    Rat r;
    if (r.set_str(s, 10) != 0) throw error("bad rational literal: '" + s + "'");
    if (r.get_den() == 0) throw error("zero denominator in rational literal: '" + s + "'");
    r.canonicalize();
    return r;
}

}  // namespace aztec
