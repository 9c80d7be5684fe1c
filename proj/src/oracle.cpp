#include "sclosure/oracle.hpp"

#include "sclosure/errors.hpp"
#include "sclosure/mixed_power.hpp"

namespace sclosure {

OracleWitness definition_oracle(const MonomialIdeal& ideal, const Rat& s, const ExponentVector& m,
                                const Int& p, unsigned long k_max, const Int& c_bound) {
    if (ideal.is_zero())
        throw MathDomainError("zero_ideal", "the oracle needs a nonzero ideal");
    if (m.size() != ideal.nvars())
        throw MathDomainError("nvars_mismatch", "probe monomial length does not match the ideal");
    if (k_max < 2)
        throw MathDomainError("k_max_too_small", "at least two prime powers are required");
    if (c_bound < 0)
        throw MathDomainError("negative_bound", "multiplier box bound must be >= 0");

    const std::size_t n = ideal.nvars();
    OracleWitness wit;
    wit.c = ExponentVector(n);

    // Mixed powers and probe powers for q = p, p^2, ..., p^k_max.
    std::vector<MonomialIdeal> mixed;
    std::vector<ExponentVector> probe;
    Int q = 1;
    for (unsigned long k = 1; k <= k_max; ++k) {
        q *= p;
        wit.checked_q.push_back(q);
        mixed.push_back(mixed_power(ideal, MixedPowerSpec(s, p, q)));
        probe.push_back(m.scaled(q));
    }
    const std::size_t top = k_max - 1;

    // Lexicographic walk of the c box; the first full pass is the witness.
    bool any_pass_at_top = false;
    ExponentVector c(n);
    for (;;) {
        if (mixed[top].contains(c + probe[top])) {
            any_pass_at_top = true;
            bool all = true;
            for (std::size_t k = 0; k < top; ++k) {
                if (!mixed[k].contains(c + probe[k])) {
                    all = false;
                    break;
                }
            }
            if (all) {
                wit.c = c;
                wit.verdict = OracleVerdict::member_evidence;
                return wit;
            }
        }
        std::size_t pos = n;
        while (pos > 0) {
            --pos;
            if (c[pos] < c_bound) {
                ++c[pos];
                for (std::size_t j = pos + 1; j < n; ++j) c[j] = 0;
                break;
            }
            if (pos == 0) {
                wit.verdict = any_pass_at_top ? OracleVerdict::inconclusive
                                              : OracleVerdict::non_member_evidence;
                return wit;
            }
        }
    }
}

} // namespace sclosure
