#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "aztec/families.hpp"
#include "aztec/matchings.hpp"

namespace aztec {

struct CensusRow {
    long n;
    Int count;
    std::string factored;  // "2^n*m^2" when the count has that shape, else empty
};

/// Matching census of the holed squares H_1..H_max. The factored column is
/// computed by exact integer square-root extraction (never by factoring):
/// when count = 2^n * m^2 with m odd, that shape is printed.
inline std::vector<CensusRow> census_holes(long max_n, int frontier_cap = 28) {
    std::vector<CensusRow> rows;
    for (long n = 1; n <= max_n; ++n) {
        Rat m = count_matchings(build_holed_square(n), frontier_cap);
        if (!is_integer(m)) throw error("census: expected an integer count");
        CensusRow row{n, m.get_num(), ""};
        Int q = row.count;
        Int two_part(1);
        long e = 0;
        while (q % 2 == 0 && q != 0) {
            q /= 2;
            ++e;
            two_part *= 2;
        }
        Int root;
        if (e == n && q % 2 == 1 && perfect_square_root(q, root)) {
            std::ostringstream os;
            os << "2^" << n << "*" << to_string(root) << "^2";
            row.factored = os.str();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace aztec
