#ifndef SCLOSURE_MULTIPLICITY_HPP
#define SCLOSURE_MULTIPLICITY_HPP

#include "sclosure/monomial_ideal.hpp"
#include "sclosure/numeric.hpp"

#include <vector>

namespace sclosure {

// Volume of {x in [0,1]^d : x_1 + ... + x_d <= s}, exact by inclusion-
// exclusion over the corners the slice cuts off.  1 for s >= d.
Rat normalizer_Hs(const Rat& s, unsigned long d);

// Number of monomials outside J (finite exactly when J contains a pure power
// of every variable, which is required).
Int colength(const MonomialIdeal& ideal);

// One step of the finite-q estimation of the s-multiplicity: the colength of
// the mixed power at q, and that colength normalized by q^d * H_s(d).
struct MultiplicityRecord {
    Int q;
    Int colength;
    Rat normalized;
};

// Records for q = p^1 .. p^k_max.  Requires a primary ideal (pure power of
// every variable), s >= 1, k_max >= 2.
std::vector<MultiplicityRecord> s_multiplicity_sequence(const MonomialIdeal& ideal, const Rat& s,
                                                        const Int& p, unsigned long k_max);

struct ConsistencyRow {
    Int q;
    Rat base_normalized;      // sequence value for I
    Rat enlarged_normalized;  // sequence value for I + (g)
    Rat scaled_gap;           // q * |difference|
};

// Adjoining one weak-closure generator must not move the multiplicity limit,
// so the two finite sequences should agree within C/q.  C is fitted as the
// largest observed q * |difference|; trivial_pass marks closures that add
// nothing (then there is nothing to compare).
struct ConsistencyReport {
    bool trivial_pass = false;
    ExponentVector adjoined;
    std::vector<ConsistencyRow> rows;
    Rat envelope_constant;  // max of scaled_gap over rows, 0 when trivial
};

ConsistencyReport closure_multiplicity_consistency(const MonomialIdeal& ideal, const Rat& s,
                                                   const Int& p, unsigned long k_max);

} // namespace sclosure

#endif
