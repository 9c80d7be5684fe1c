#ifndef SCLOSURE_CLOSURE_HPP
#define SCLOSURE_CLOSURE_HPP

#include "sclosure/monomial_ideal.hpp"
#include "sclosure/newton_polyhedron.hpp"

#include <vector>

namespace sclosure {

enum class ClosureRoute { closed_form, iterate };

struct ClosureReport {
    MonomialIdeal input;
    Rat s;
    MonomialIdeal result;
    // Minimal generators of the result lying outside the input ideal.
    std::vector<ExponentVector> new_generators;
    // Weak-closure applications until the value stopped changing, at least 1.
    unsigned long iterations = 0;
    ClosureRoute route = ClosureRoute::closed_form;
};

// Identity on monomial ideals: the ambient ring here is a polynomial ring,
// where every ideal is tightly closed.  Exists so call sites can name the
// operation they mean; the closed form below reads I + I_s because of it.
MonomialIdeal tight_closure(const MonomialIdeal& ideal);

// Closed form: tight_closure(I) + rational_power(I, s) = I + I_s.
// Requires a nonzero ideal and rational s >= 1.
ClosureReport weak_s_closure(const MonomialIdeal& ideal, const Rat& s);

// Fixed point of the weak closure.  The iterations field counts applications
// that changed the value (floored at 1); it is measured, never assumed — a
// value above 1 would be a finding, and tests pin it to 1 for this ring class.
ClosureReport s_closure(const MonomialIdeal& ideal, const Rat& s);

// Weak closure of base^n computed from the base polyhedron: scaling turns
// (base^n)_s into the base's rational power at n*s, so the n-th power's
// polyhedron is never built.  np must come from this base ideal.
MonomialIdeal weak_closure_of_power(const MonomialIdeal& base, const NewtonPolyhedron& np,
                                    const Rat& s, const Int& n);

// Same, building the base polyhedron internally.
MonomialIdeal weak_closure_of_power(const MonomialIdeal& base, const Rat& s, const Int& n);

} // namespace sclosure

#endif
