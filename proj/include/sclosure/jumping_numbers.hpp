#ifndef SCLOSURE_JUMPING_NUMBERS_HPP
#define SCLOSURE_JUMPING_NUMBERS_HPP

#include "sclosure/monomial_ideal.hpp"
#include "sclosure/numeric.hpp"

#include <vector>

namespace sclosure {

// One parameter value where the weak closure strictly drops: at s the closure
// differs from its value at every larger parameter.
struct JumpingNumber {
    Rat s;
    MonomialIdeal at;     // closure at s
    MonomialIdeal after;  // closure on the plateau just above s
};

// All jumping numbers in [lo, hi), ascending.  The closure is a step function
// constant on half-open steps ((j-1)/e, j/e] of the stabilization grid, so
// candidates are exactly the grid points: a non-grid s shares its plateau
// with larger parameters and can never jump, and hi is excluded because no
// parameter beyond it is examined.  Requires 1 <= lo < hi and a nonzero ideal.
std::vector<JumpingNumber> jumping_numbers(const MonomialIdeal& ideal, const Rat& lo,
                                           const Rat& hi);

} // namespace sclosure

#endif
