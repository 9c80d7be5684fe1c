#include "sclosure/multiplicity.hpp"

#include "sclosure/closure.hpp"
#include "sclosure/errors.hpp"
#include "sclosure/mixed_power.hpp"

#include <utility>

namespace sclosure {
namespace {

Rat rat_pow(const Rat& base, unsigned long e) {
    Rat r(1);
    for (unsigned long i = 0; i < e; ++i) r *= base;
    return r;
}

Rat rat_abs(const Rat& v) { return v < 0 ? Rat(-v) : v; }

void check_sequence_inputs(const MonomialIdeal& ideal, unsigned long k_max) {
    if (!ideal.is_m_primary())
        throw MathDomainError("not_m_primary", "needs a pure power of every variable");
    if (k_max < 2)
        throw MathDomainError("k_max_too_small", "at least two prime powers are required");
}

} // namespace

Rat normalizer_Hs(const Rat& s, unsigned long d) {
    if (s < 0) throw MathDomainError("negative_scale", "the slice parameter must be >= 0");
    if (d < 1) throw MathDomainError("bad_dimension", "dimension must be >= 1");
    if (s >= Rat(d)) return Rat(1);

    // Inclusion-exclusion over the cube corners cut off by the slice plane.
    Rat sum(0);
    const Int kmax = rat_floor(s);
    for (Int k = 0; k <= kmax; ++k) {
        Int binom;
        mpz_bin_uiui(binom.get_mpz_t(), d, mpz_get_ui(k.get_mpz_t()));
        Rat term = Rat(binom) * rat_pow(s - Rat(k), d);
        if (mpz_odd_p(k.get_mpz_t()))
            sum -= term;
        else
            sum += term;
    }
    Int fact;
    mpz_fac_ui(fact.get_mpz_t(), d);
    return sum / Rat(fact);
}

Int colength(const MonomialIdeal& ideal) {
    if (!ideal.is_m_primary())
        throw MathDomainError("not_m_primary", "colength is finite only with every pure power");
    const std::size_t n = ideal.nvars();
    if (ideal.is_unit()) return 0;

    // Standard monomials live under the minimal pure powers.  For a fixed
    // prefix on the first n-1 variables, membership is monotone in the last
    // coordinate, so the count of standard completions is the least last
    // coordinate of any generator whose other coordinates divide the prefix.
    std::vector<Int> box(n > 0 ? n - 1 : 0);
    for (std::size_t i = 0; i + 1 < n; ++i) box[i] = *ideal.pure_power(i);

    Int total = 0;
    std::vector<Int> prefix(box.size(), Int(0));
    for (;;) {
        Int thr = *ideal.pure_power(n - 1);
        for (const ExponentVector& g : ideal.generators()) {
            bool head_divides = true;
            for (std::size_t i = 0; i + 1 < n; ++i) {
                if (g[i] > prefix[i]) {
                    head_divides = false;
                    break;
                }
            }
            if (head_divides && g[n - 1] < thr) thr = g[n - 1];
        }
        total += thr;

        std::size_t pos = prefix.size();
        bool done = prefix.empty();
        while (pos > 0) {
            --pos;
            if (prefix[pos] + 1 < box[pos]) {
                ++prefix[pos];
                for (std::size_t j = pos + 1; j < prefix.size(); ++j) prefix[j] = 0;
                break;
            }
            if (pos == 0) done = true;
        }
        if (done) break;
    }
    return total;
}

std::vector<MultiplicityRecord> s_multiplicity_sequence(const MonomialIdeal& ideal, const Rat& s,
                                                        const Int& p, unsigned long k_max) {
    check_sequence_inputs(ideal, k_max);
    const unsigned long d = ideal.nvars();
    const Rat h = normalizer_Hs(s, d);

    std::vector<MultiplicityRecord> records;
    Int q = 1;
    for (unsigned long k = 1; k <= k_max; ++k) {
        q *= p;
        MultiplicityRecord rec;
        rec.q = q;
        rec.colength = colength(mixed_power(ideal, MixedPowerSpec(s, p, q)));
        rec.normalized = Rat(rec.colength) / (rat_pow(Rat(q), d) * h);
        records.push_back(std::move(rec));
    }
    return records;
}

ConsistencyReport closure_multiplicity_consistency(const MonomialIdeal& ideal, const Rat& s,
                                                   const Int& p, unsigned long k_max) {
    check_sequence_inputs(ideal, k_max);
    ConsistencyReport rep;
    rep.adjoined = ExponentVector(ideal.nvars());
    rep.envelope_constant = Rat(0);

    ClosureReport closure = weak_s_closure(ideal, s);
    if (closure.new_generators.empty()) {
        rep.trivial_pass = true;
        return rep;
    }
    rep.adjoined = closure.new_generators.front();
    MonomialIdeal enlarged =
        ideal_sum(ideal, MonomialIdeal::from_generators(ideal.nvars(), {rep.adjoined}));

    std::vector<MultiplicityRecord> base = s_multiplicity_sequence(ideal, s, p, k_max);
    std::vector<MultiplicityRecord> bigger = s_multiplicity_sequence(enlarged, s, p, k_max);
    for (std::size_t i = 0; i < base.size(); ++i) {
        ConsistencyRow row;
        row.q = base[i].q;
        row.base_normalized = base[i].normalized;
        row.enlarged_normalized = bigger[i].normalized;
        row.scaled_gap = Rat(row.q) * rat_abs(row.base_normalized - row.enlarged_normalized);
        if (row.scaled_gap > rep.envelope_constant) rep.envelope_constant = row.scaled_gap;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

} // namespace sclosure
