#ifndef SCLOSURE_DEGREE_BOUNDS_HPP
#define SCLOSURE_DEGREE_BOUNDS_HPP

#include "sclosure/monomial_ideal.hpp"
#include "sclosure/numeric.hpp"

#include <vector>

namespace sclosure {

// Componentwise extremes of the generator exponents.
struct DegreeBounds {
    ExponentVector delta_min;
    ExponentVector delta_max;
};

DegreeBounds degree_bounds(const MonomialIdeal& ideal);

struct DegreeBoundReport {
    DegreeBounds bounds;
    // Lower half: every generator the weak s-closure adds sits at or above
    // s * delta_min componentwise.
    bool lower_holds = true;
    std::vector<ExponentVector> lower_violations;
    // Upper half (primary ideals only): every nonzero monomial at or above
    // s * delta_max componentwise belongs to the weak s-closure, scanned over
    // the box [0, ceil(s * delta_max) + 2]^n.
    bool upper_checked = false;
    bool upper_holds = true;
    std::vector<ExponentVector> upper_violations;
};

// check_upper demands the upper half and throws for ideals with no pure power
// of some variable; with check_upper false only the lower half runs.
DegreeBoundReport degree_bound_check(const MonomialIdeal& ideal, const Rat& s, bool check_upper);

} // namespace sclosure

#endif
