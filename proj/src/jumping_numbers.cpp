#include "sclosure/jumping_numbers.hpp"

#include "sclosure/errors.hpp"
#include "sclosure/newton_polyhedron.hpp"
#include "sclosure/rational_power.hpp"

#include <utility>

namespace sclosure {

std::vector<JumpingNumber> jumping_numbers(const MonomialIdeal& ideal, const Rat& lo,
                                           const Rat& hi) {
    if (ideal.is_zero())
        throw MathDomainError("zero_ideal", "jumping numbers need a nonzero ideal");
    if (lo < 1) throw MathDomainError("lo_below_one", "range must start at 1 or above");
    if (lo >= hi) throw MathDomainError("degenerate_range", "range must satisfy lo < hi");

    std::vector<JumpingNumber> jumps;
    if (ideal.is_unit()) return jumps;  // constantly the unit ideal, no drops

    NewtonPolyhedron np = NewtonPolyhedron::from_ideal(ideal);
    Int e = stabilization_denominator(np);
    auto closure_at = [&](const Rat& s) { return ideal_sum(ideal, rational_power(np, s)); };

    // Grid points j/e inside [lo, hi): j runs from ceil(lo*e) to ceil(hi*e)-1.
    Int j = rat_ceil(lo * Rat(e));
    const Int j_end = rat_ceil(hi * Rat(e));
    if (j >= j_end) return jumps;

    MonomialIdeal at = closure_at(Rat(j) / Rat(e));
    for (; j < j_end; ++j) {
        MonomialIdeal after = closure_at(Rat(j + 1) / Rat(e));
        if (at != after) {
            JumpingNumber jump;
            jump.s = Rat(j) / Rat(e);
            jump.at = at;
            jump.after = after;
            jumps.push_back(std::move(jump));
        }
        at = std::move(after);
    }
    return jumps;
}

} // namespace sclosure
