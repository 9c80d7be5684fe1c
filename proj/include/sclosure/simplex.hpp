#ifndef SCLOSURE_SIMPLEX_HPP
#define SCLOSURE_SIMPLEX_HPP

#include "sclosure/numeric.hpp"

#include <cstddef>
#include <vector>

namespace sclosure {

enum class LpStatus { Optimal, Infeasible, Unbounded };
enum class Rel { Le, Ge, Eq };

struct LpConstraint {
    std::vector<Rat> a;
    Rel rel;
    Rat b;
};

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Rat objective;           // valid when Optimal
    std::vector<Rat> x;      // valid when Optimal
};

// minimize c.x subject to the constraints and x >= 0.  Exact rational
// two-phase simplex with Bland's rule (no cycling).  Intended for the small
// systems this library meets; dense tableau.
LpResult lp_minimize(const std::vector<Rat>& c, const std::vector<LpConstraint>& rows);

// Feasibility of {x >= 0, rows} alone.
bool lp_feasible(std::size_t nvars, const std::vector<LpConstraint>& rows);

} // namespace sclosure

#endif
