#ifndef SCLOSURE_ORACLE_HPP
#define SCLOSURE_ORACLE_HPP

#include "sclosure/monomial_ideal.hpp"
#include "sclosure/numeric.hpp"

#include <vector>

namespace sclosure {

enum class OracleVerdict { member_evidence, non_member_evidence, inconclusive };

struct OracleWitness {
    // The multiplier found for member_evidence; the zero vector otherwise.
    ExponentVector c;
    // Prime powers examined, ascending: p^1 .. p^k_max.
    std::vector<Int> checked_q;
    OracleVerdict verdict = OracleVerdict::inconclusive;
};

// Brute-force membership probe straight from the defining condition: m gets
// member_evidence when one monomial multiplier c in the box [0, c_bound]^n
// satisfies c * m^q in I^(s,q) for every tested q, and non_member_evidence
// when every c in the box already fails at the largest q.  Anything else is
// inconclusive.  Finite q makes this evidence, not proof, in both directions.
OracleWitness definition_oracle(const MonomialIdeal& ideal, const Rat& s, const ExponentVector& m,
                                const Int& p, unsigned long k_max, const Int& c_bound);

} // namespace sclosure

#endif
