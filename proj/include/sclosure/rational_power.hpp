#ifndef SCLOSURE_RATIONAL_POWER_HPP
#define SCLOSURE_RATIONAL_POWER_HPP

#include "sclosure/monomial_ideal.hpp"
#include "sclosure/newton_polyhedron.hpp"

namespace sclosure {

// Ideal generated by every monomial whose exponent lies in alpha * NP(I).
// alpha = 1 gives the integral closure; alpha = 0 gives the unit ideal.
// The zero ideal scales to itself.  Requires alpha >= 0.
MonomialIdeal rational_power(const MonomialIdeal& ideal, const Rat& alpha);

// Same, from a prebuilt polyhedron.  Powers of an ideal reuse one polyhedron:
// NP(I^n) = n * NP(I), so (I^n)_alpha equals this at scale n * alpha.
MonomialIdeal rational_power(const NewtonPolyhedron& np, const Rat& alpha);

MonomialIdeal integral_closure(const MonomialIdeal& ideal);

// Smallest grid point ceil(alpha * e) / e at or above alpha, where e is the
// stabilization denominator.  Every scale inside the half-open step below a
// grid point yields the same ideal, so snapping is lossless.
Rat grid_snap(const NewtonPolyhedron& np, const Rat& alpha);

} // namespace sclosure

#endif
