#include "sclosure/briancon_skoda.hpp"

#include "sclosure/closure.hpp"
#include "sclosure/errors.hpp"

#include <utility>

namespace sclosure {

BSQuery make_bs_query(const MonomialIdeal& ideal, const Rat& t, const Rat& s, const Int& n_max) {
    if (ideal.is_zero())
        throw MathDomainError("zero_ideal", "containment checks need a nonzero ideal");
    if (t < 1) throw MathDomainError("s_below_one", "the inner parameter must be >= 1");
    if (t >= s) throw MathDomainError("parameter_order", "requires t < s");
    if (n_max < 1) throw MathDomainError("bad_range", "n_max must be >= 1");

    BSQuery qy;
    qy.ideal = ideal;
    qy.t = t;
    qy.s = s;
    qy.n_max = n_max;
    Rat mu(static_cast<unsigned long>(ideal.num_generators()));
    Rat bound = (mu - 1) * (s - t) / (t * (s - 1));
    qy.r = rat_ceil(bound);
    return qy;
}

BSReport briancon_skoda_check(const BSQuery& query) {
    BSReport rep;
    rep.query = query;
    if (query.ideal.is_unit()) {
        for (Int n = 1; n <= query.n_max; ++n)
            rep.rows.push_back({n, query.ideal, query.ideal, true});
        return rep;
    }
    NewtonPolyhedron np = NewtonPolyhedron::from_ideal(query.ideal);
    for (Int n = 1; n <= query.n_max; ++n) {
        BSRow row;
        row.n = n;
        row.lhs = weak_closure_of_power(query.ideal, np, query.t, n + query.r);
        row.rhs = weak_closure_of_power(query.ideal, np, query.s, n);
        row.holds = is_subset(row.lhs, row.rhs);
        if (!row.holds) rep.all_hold = false;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

Int collapse_threshold(const MonomialIdeal& ideal, const Rat& s) {
    if (ideal.is_zero())
        throw MathDomainError("zero_ideal", "collapse needs a nonzero ideal");
    if (s <= 1) throw MathDomainError("s_not_above_one", "collapse is only guaranteed for s > 1");
    Rat mu(static_cast<unsigned long>(ideal.num_generators()));
    return rat_ceil((mu - 1) / (s - 1));
}

Int tight_closure_collapse(const MonomialIdeal& ideal, const Rat& s) {
    Int bound = collapse_threshold(ideal, s);
    if (bound < 1) bound = 1;
    if (ideal.is_unit()) return 1;
    NewtonPolyhedron np = NewtonPolyhedron::from_ideal(ideal);
    for (Int n = 1; n <= bound; ++n) {
        if (weak_closure_of_power(ideal, np, s, n) == ordinary_power(ideal, n)) return n;
    }
    throw MathDomainError("collapse_bound_violated",
                          "no collapse by the guaranteed threshold; this indicates a defect");
}

} // namespace sclosure
