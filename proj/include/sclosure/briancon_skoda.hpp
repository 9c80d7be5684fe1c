#ifndef SCLOSURE_BRIANCON_SKODA_HPP
#define SCLOSURE_BRIANCON_SKODA_HPP

#include "sclosure/monomial_ideal.hpp"
#include "sclosure/numeric.hpp"

#include <vector>

namespace sclosure {

// One containment experiment: for n = 1..n_max, is the weak t-closure of
// I^(n+r) inside the weak s-closure of I^n?  r is the least integer at or
// above (mu-1)(s-t) / (t(s-1)), the shift that makes the answer always yes.
struct BSQuery {
    MonomialIdeal ideal;
    Rat t;
    Rat s;
    Int n_max;
    Int r;
};

// Validates 1 <= t < s and computes the minimal shift r exactly.
BSQuery make_bs_query(const MonomialIdeal& ideal, const Rat& t, const Rat& s, const Int& n_max);

struct BSRow {
    Int n;
    MonomialIdeal lhs;   // weak t-closure of I^(n+r)
    MonomialIdeal rhs;   // weak s-closure of I^n
    bool holds = false;  // lhs inside rhs
};

struct BSReport {
    BSQuery query;
    std::vector<BSRow> rows;
    bool all_hold = true;
};

// The shift r is chosen so every row is guaranteed to hold; the report
// exists so tests can assert that the guarantee is honored on real inputs.
BSReport briancon_skoda_check(const BSQuery& query);

// Guaranteed-collapse threshold ceil((mu-1)/(s-1)) for s > 1: from this power
// on, the weak s-closure of I^n adds nothing.
Int collapse_threshold(const MonomialIdeal& ideal, const Rat& s);

// Least n with weak s-closure of I^n equal to I^n, searched up to the
// threshold (at least 1).  Exhausting the search violates the guarantee and
// throws — that would be an implementation bug, not an input error.
Int tight_closure_collapse(const MonomialIdeal& ideal, const Rat& s);

} // namespace sclosure

#endif
