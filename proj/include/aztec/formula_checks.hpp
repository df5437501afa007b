#pragma once

#include "aztec/charpoly.hpp"
#include "aztec/closed_forms.hpp"
#include "aztec/families.hpp"
#include "aztec/invariant_matchings.hpp"
#include "aztec/matchings.hpp"
#include "aztec/tree_count.hpp"

namespace aztec {

/// True when the formula's statement covers order n.
inline bool formula_valid(FormulaId id, long n) {
    switch (id) {
        case FormulaId::EQ2_5: return n >= 1;
        case FormulaId::EQ4_10:
        case FormulaId::EQ4_11:
        case FormulaId::EQ4_12: return n >= 1;
        default: return n >= 1;
    }
}

/// The exact combinatorial value the formula claims: the independent side of
/// every formula verification.
inline Rat formula_counterpart(FormulaId id, long n) {
    switch (id) {
        case FormulaId::EQ2_2_PATH_SPECTRUM:
            return poly_eval(charpoly(build_path_q(n, Rat(1)).adjacency()), Rat(4));
        case FormulaId::EQ2_3_GRID_SPECTRUM:
            // P(G_n; 4) counts the spanning trees of G_{n+1}
            return Rat(tree_count(build_grid(n + 1)));
        case FormulaId::EQ2_4: return Rat(tree_count(build_quartered(n + 1)));
        case FormulaId::EQ2_5: return Rat(tree_count(build_quartered(n)));
        case FormulaId::EQ3_22: return Rat(tree_count(build_half_mixed(n)));
        case FormulaId::EQ3_24:
            return poly_eval(charpoly(build_odd_diamond(n).adjacency()), Rat(4));
        case FormulaId::EQ3_25:
            return poly_eval(charpoly(build_half_odd(n - 1).adjacency()), Rat(4));
        case FormulaId::EQ3_26: return Rat(tree_count(build_half_odd(n)));
        case FormulaId::EQ3_28:
            return poly_eval(charpoly(build_mixed_diamond(n).adjacency()), Rat(4));
        case FormulaId::EQ3_29:
            return poly_eval(charpoly(build_half_mixed(n - 1).adjacency()), Rat(4));
        case FormulaId::EQ4_1: return count_matchings(build_zigzag_a(n));
        case FormulaId::EQ4_2: return count_matchings(build_zigzag_b(n));
        case FormulaId::EQ4_3: return count_matchings(build_zigzag_c(n));
        case FormulaId::EQ4_4: return count_matchings(build_zigzag_d(n));
        case FormulaId::EQ4_7: return count_matchings(build_grid(2 * n));
        case FormulaId::EQ4_8: return Rat(Int(2 * n) * tree_count(build_half_mixed(n)));
        case FormulaId::EQ4_9: return count_matchings(build_zigzag_c(2 * n - 1));
        case FormulaId::EQ4_10: return count_matchings(build_zigzag_a(n - 1));
        case FormulaId::EQ4_11: return count_matchings(build_zigzag_c(2 * n - 2));
        case FormulaId::EQ4_12: return count_matchings(build_zigzag_b(n - 1));
        case FormulaId::EQ5_1: return count_matchings(build_zigzag_a_tilde(n));
        case FormulaId::EQ5_2: return count_matchings(build_zigzag_b_tilde(n));
        case FormulaId::EQ5_3:
            return count_invariant_matchings(build_holed_square(2 * n), SymGroup::H);
        case FormulaId::EQ5_4:
            return count_invariant_matchings(build_holed_square(2 * n), SymGroup::HV);
        case FormulaId::EQ5_5:
            return count_invariant_matchings(build_holed_square(n), SymGroup::R2);
        case FormulaId::EQ5_6:
            return count_invariant_matchings(build_holed_square(2 * n - 1), SymGroup::R);
        case FormulaId::EQ5_7:
            return count_invariant_matchings(build_holed_square(2 * n), SymGroup::R);
        case FormulaId::EQ6_3: return Rat(tree_count(build_pillowcase(n)));
    }
    throw error("unknown formula id");
}

struct FormulaCheck {
    FormulaId id;
    long n;
    Rat expected;  // exact combinatorial value
    Rat got;       // certified formula evaluation
    RoundingCertificate cert;
    bool pass = false;

    std::string line() const {
        std::ostringstream os;
        os << "FORMULA " << formula_to_string(id) << " " << n << " expected "
           << to_string(expected) << " got " << to_string(got) << " " << (pass ? "PASS" : "FAIL");
        return os.str();
    }
};

inline FormulaCheck check_formula(FormulaId id, long n, mpfr_prec_t precision = 256) {
    FormulaCheck c{id, n, Rat(0), Rat(0), {}, false};
    FormulaValue v = eval_formula(id, n, precision);
    c.got = v.value;
    c.cert = v.cert;
    c.expected = formula_counterpart(id, n);
    c.pass = c.expected == c.got;
    return c;
}

}  // namespace aztec
