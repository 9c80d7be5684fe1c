#ifndef SCLOSURE_FOURIER_MOTZKIN_HPP
#define SCLOSURE_FOURIER_MOTZKIN_HPP

#include "sclosure/numeric.hpp"

#include <cstddef>
#include <vector>

namespace sclosure {

// One inequality  a . y >= b  over a fixed variable block.
struct IneqRow {
    std::vector<Rat> a;
    Rat b;
};

struct IneqSystem {
    std::size_t nvars = 0;
    std::vector<IneqRow> rows;
};

// Scales to integer coefficients with gcd 1 (positive scaling only, so the
// inequality is unchanged).
void row_normalize(IneqRow& row);

// Exact Fourier-Motzkin elimination of the listed variables.  The result keeps
// the original width with zero coefficients in eliminated positions.  Trivial
// rows (0 >= b with b <= 0) and exact duplicates are pruned along the way;
// a derived row 0 >= b with b > 0 (empty polyhedron) throws, since every use
// here projects a nonempty set.
IneqSystem fm_eliminate(IneqSystem sys, std::vector<std::size_t> vars);

} // namespace sclosure

#endif
