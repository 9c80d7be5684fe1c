#include "sclosure/closure.hpp"

#include "sclosure/errors.hpp"
#include "sclosure/rational_power.hpp"

#include <utility>

namespace sclosure {
namespace {

void check_closure_inputs(const MonomialIdeal& ideal, const Rat& s) {
    if (ideal.is_zero())
        throw MathDomainError("zero_ideal", "closures need a nonzero ideal");
    if (s < 1) throw MathDomainError("s_below_one", "closure parameter must be >= 1");
}

std::vector<ExponentVector> gens_outside(const MonomialIdeal& result, const MonomialIdeal& input) {
    std::vector<ExponentVector> fresh;
    for (const ExponentVector& g : result.generators())
        if (!input.contains(g)) fresh.push_back(g);
    return fresh;
}

MonomialIdeal weak_closure_value(const MonomialIdeal& ideal, const Rat& s) {
    return ideal_sum(ideal, rational_power(ideal, s));
}

} // namespace

MonomialIdeal tight_closure(const MonomialIdeal& ideal) { return ideal; }

ClosureReport weak_s_closure(const MonomialIdeal& ideal, const Rat& s) {
    check_closure_inputs(ideal, s);
    ClosureReport rep;
    rep.input = ideal;
    rep.s = s;
    rep.result = ideal_sum(tight_closure(ideal), rational_power(ideal, s));
    rep.new_generators = gens_outside(rep.result, ideal);
    rep.iterations = 1;
    rep.route = ClosureRoute::closed_form;
    return rep;
}

ClosureReport s_closure(const MonomialIdeal& ideal, const Rat& s) {
    check_closure_inputs(ideal, s);
    MonomialIdeal current = ideal;
    unsigned long growth = 0;
    for (;;) {
        MonomialIdeal next = weak_closure_value(current, s);
        if (next == current) break;
        ++growth;
        current = std::move(next);
    }
    ClosureReport rep;
    rep.input = ideal;
    rep.s = s;
    rep.result = std::move(current);
    rep.new_generators = gens_outside(rep.result, ideal);
    rep.iterations = growth > 0 ? growth : 1;
    rep.route = ClosureRoute::iterate;
    return rep;
}

MonomialIdeal weak_closure_of_power(const MonomialIdeal& base, const NewtonPolyhedron& np,
                                    const Rat& s, const Int& n) {
    check_closure_inputs(base, s);
    if (n < 1) throw MathDomainError("power_below_one", "power exponent must be >= 1");
    return ideal_sum(ordinary_power(base, n), rational_power(np, Rat(n) * s));
}

MonomialIdeal weak_closure_of_power(const MonomialIdeal& base, const Rat& s, const Int& n) {
    check_closure_inputs(base, s);
    if (base.is_unit()) return base;
    return weak_closure_of_power(base, NewtonPolyhedron::from_ideal(base), s, n);
}

} // namespace sclosure
