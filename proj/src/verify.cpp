#include "sclosure/verify.hpp"

#include "sclosure/briancon_skoda.hpp"
#include "sclosure/closure.hpp"
#include "sclosure/errors.hpp"
#include "sclosure/ideal_text.hpp"
#include "sclosure/jumping_numbers.hpp"
#include "sclosure/mixed_power.hpp"
#include "sclosure/multiplicity.hpp"
#include "sclosure/newton_polyhedron.hpp"
#include "sclosure/oracle.hpp"
#include "sclosure/random_ideal.hpp"
#include "sclosure/rational_power.hpp"

#include <cmath>
#include <random>
#include <utility>

namespace sclosure {
namespace {

template <typename Label>
void check(SuiteResult& r, bool ok, Label&& label) {
    ++r.checks;
    if (!ok) r.failures.push_back(label());
}

std::string txt(const MonomialIdeal& ideal) {
    return format_ideal(ideal, VarTable(ideal.nvars()));
}

bool is_minimal_antichain(const MonomialIdeal& ideal) {
    const auto& gens = ideal.generators();
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = 0; j < gens.size(); ++j)
            if (i != j && gens[j].divides(gens[i])) return false;
    return true;
}

ExponentVector random_nonzero_vector(std::mt19937_64& rng, std::size_t nvars,
                                     unsigned long max_exponent) {
    std::vector<Int> entries(nvars);
    bool all_zero = true;
    do {
        all_zero = true;
        for (std::size_t i = 0; i < nvars; ++i) {
            entries[i] = uniform_draw(rng, max_exponent);
            if (entries[i] != 0) all_zero = false;
        }
    } while (all_zero);
    return ExponentVector(entries);
}

const std::vector<Rat>& closure_s_values() {
    static const std::vector<Rat> vals = {Rat(1), Rat(9) / Rat(8), Rat(5) / Rat(4),
                                          Rat(3) / Rat(2), Rat(2)};
    return vals;
}

} // namespace

std::vector<MonomialIdeal> random_ideal_suite(unsigned long seed, std::size_t count,
                                              unsigned long max_exponent, bool m_primary) {
    std::mt19937_64 rng(seed);
    std::vector<MonomialIdeal> suite;
    suite.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        RandomIdealParams params;
        params.nvars = 1 + uniform_draw(rng, 2);
        params.min_gens = 2;
        params.max_gens = 4;
        params.max_exponent = max_exponent;
        params.force_m_primary = m_primary;
        suite.push_back(random_monomial_ideal(rng, params));
    }
    return suite;
}

SuiteResult verify_monomial_core(unsigned long seed) {
    SuiteResult r;
    r.name = "monomial-core";
    std::mt19937_64 rng(seed ^ 0x6d6f6e6f6dULL);
    const std::vector<MonomialIdeal> suite = random_ideal_suite(seed, 12, 4, false);

    for (const MonomialIdeal& ideal : suite) {
        const Rat mu(static_cast<unsigned long>(ideal.num_generators()));
        check(r, is_minimal_antichain(ideal), [&] { return "antichain: " + txt(ideal); });
        {
            VarTable vars(ideal.nvars());
            check(r, parse_ideal(format_ideal(ideal, vars), vars) == ideal,
                  [&] { return "text round-trip: " + txt(ideal); });
        }

        // Power chain: I^h inside (I^[q])^floor(h/q - mu + 1) inside
        // (I^[q])^ceil(h/q - mu), whenever the exponents are non-negative.
        for (const long qv : {2L, 4L, 8L}) {
            const Int q(qv);
            const MonomialIdeal frob = frobenius_power(ideal, q, 2);
            std::vector<MonomialIdeal> frob_pows = {MonomialIdeal::unit(ideal.nvars())};
            auto frob_pow = [&](const Int& k) -> const MonomialIdeal& {
                const unsigned long idx = to_ulong(k);
                while (frob_pows.size() <= idx)
                    frob_pows.push_back(ideal_product(frob_pows.back(), frob));
                return frob_pows[idx];
            };
            MonomialIdeal power = ideal;
            for (long h = 1; h <= 20; ++h) {
                if (h > 1) power = ideal_product(power, ideal);
                check(r, is_minimal_antichain(power),
                      [&] { return "antichain power h=" + std::to_string(h) + ": " + txt(ideal); });
                const Rat ratio = Rat(h) / Rat(q);
                const Int lo_exp = rat_floor(ratio - mu + 1);
                const Int hi_exp = rat_ceil(ratio - mu);
                if (lo_exp >= 0) {
                    check(r, is_subset(power, frob_pow(lo_exp)), [&] {
                        return "power chain left h=" + std::to_string(h) + " q=" +
                               std::to_string(qv) + ": " + txt(ideal);
                    });
                }
                if (hi_exp >= 0) {
                    check(r, is_subset(frob_pow(lo_exp), frob_pow(hi_exp)), [&] {
                        return "power chain right h=" + std::to_string(h) + " q=" +
                               std::to_string(qv) + ": " + txt(ideal);
                    });
                }
            }
        }

        // Mixed powers: monotone in s, sandwiched between I^[q] and I^q.
        for (const long qv : {2L, 4L}) {
            const Int q(qv);
            const MonomialIdeal frob = frobenius_power(ideal, q, 2);
            const MonomialIdeal plain = ordinary_power(ideal, q);
            std::vector<Rat> svals = closure_s_values();
            svals.push_back(Rat(3));
            std::vector<MonomialIdeal> mixed;
            mixed.reserve(svals.size());
            for (const Rat& s : svals) mixed.push_back(mixed_power(ideal, MixedPowerSpec(s, 2, q)));
            for (std::size_t a = 0; a < svals.size(); ++a) {
                for (std::size_t b = a + 1; b < svals.size(); ++b) {
                    check(r, is_subset(mixed[b], mixed[a]), [&] {
                        return "mixed monotone s=" + format_rational(svals[b]) + ">" +
                               format_rational(svals[a]) + " q=" + std::to_string(qv) + ": " +
                               txt(ideal);
                    });
                }
                check(r, is_subset(frob, mixed[a]) && is_subset(mixed[a], plain), [&] {
                    return "mixed sandwich s=" + format_rational(svals[a]) + " q=" +
                           std::to_string(qv) + ": " + txt(ideal);
                });
            }
        }
    }

    // Product algebra on same-width pairs.
    for (std::size_t i = 0; i + 1 < suite.size(); ++i) {
        const MonomialIdeal& a = suite[i];
        MonomialIdeal b = MonomialIdeal::from_generators(
            a.nvars(), {random_nonzero_vector(rng, a.nvars(), 4),
                        random_nonzero_vector(rng, a.nvars(), 4)});
        check(r, ideal_product(a, b) == ideal_product(b, a),
              [&] { return "product commutes: " + txt(a) + " | " + txt(b); });
        MonomialIdeal c = MonomialIdeal::from_generators(
            a.nvars(), {random_nonzero_vector(rng, a.nvars(), 4)});
        check(r,
              ideal_product(ideal_product(a, b), c) == ideal_product(a, ideal_product(b, c)),
              [&] { return "product associates: " + txt(a); });
        for (long pa = 1; pa <= 3; ++pa) {
            for (long pb = 1; pb <= 3; ++pb) {
                check(r,
                      ordinary_power(a, Int(pa + pb)) ==
                          ideal_product(ordinary_power(a, Int(pa)), ordinary_power(a, Int(pb))),
                      [&] {
                          return "power splits " + std::to_string(pa) + "+" + std::to_string(pb) +
                                 ": " + txt(a);
                      });
            }
        }
        check(r, ideal_product(a, MonomialIdeal::unit(a.nvars())) == a,
              [&] { return "unit is neutral: " + txt(a); });
    }
    return r;
}

SuiteResult verify_newton_geometry(unsigned long seed) {
    SuiteResult r;
    r.name = "newton-geometry";
    std::mt19937_64 rng(seed ^ 0x67656f6dULL);

    std::vector<MonomialIdeal> suite;
    {
        VarTable v2(2);
        suite.push_back(parse_ideal("x^3, y^3", v2));
        suite.push_back(parse_ideal("x^2, x*y, y^3", v2));
        suite.push_back(parse_ideal("x^2, y", v2));
    }
    for (const MonomialIdeal& extra : random_ideal_suite(seed + 1, 3, 5, false))
        suite.push_back(extra);

    for (const MonomialIdeal& ideal : suite) {
        const std::size_t n = ideal.nvars();
        const NewtonPolyhedron np = NewtonPolyhedron::from_ideal(ideal);

        for (const Facet& f : np.facets()) {
            Int g = 0;
            Int weight = 0;
            bool nonneg = true;
            for (const Int& h : f.normal) {
                if (h < 0) nonneg = false;
                g = int_gcd(g, h);
                weight += h;
            }
            check(r, nonneg && weight > 0 && g == 1 && f.rhs >= 1,
                  [&] { return "facet shape: " + txt(ideal); });
        }
        for (const ExponentVector& gen : ideal.generators())
            check(r, np.membership(gen), [&] { return "generator satisfies facets: " + txt(ideal); });

        // Facet route against the simplex route on the whole test box.
        const std::vector<Rat> alphas = {Rat(1), Rat(3) / Rat(2), Rat(2)};
        ExponentVector v(n);
        bool more = true;
        while (more) {
            for (const Rat& alpha : alphas) {
                check(r,
                      np.scaled_membership(v, alpha) == lp_scaled_membership(ideal, v, alpha),
                      [&] {
                          return "facet/simplex agreement alpha=" + format_rational(alpha) +
                                 ": " + txt(ideal);
                      });
            }
            more = false;
            std::size_t pos = n;
            while (pos > 0) {
                --pos;
                if (v[pos] < 8) {
                    v[pos] += 1;
                    for (std::size_t j = pos + 1; j < n; ++j) v[j] = 0;
                    more = true;
                    break;
                }
            }
        }

        // The fraction chosen to write alpha must not matter.
        const std::pair<long, long> fractions[] = {{3, 2}, {4, 3}, {5, 4}};
        for (const auto& [num, den] : fractions) {
            const MonomialIdeal reduced = rational_power(np, Rat(num) / Rat(den));
            for (const long k : {2L, 3L, 5L}) {
                const Rat scaled = parse_rational(std::to_string(k * num) + "/" +
                                                  std::to_string(k * den));
                check(r, rational_power(np, scaled) == reduced, [&] {
                    return "representation independence " + std::to_string(num) + "/" +
                           std::to_string(den) + " vs k=" + std::to_string(k) + ": " + txt(ideal);
                });
            }
        }

        // Monotone in alpha.
        const std::vector<Rat> ladder = {Rat(1),          Rat(7) / Rat(6), Rat(5) / Rat(4),
                                         Rat(4) / Rat(3), Rat(3) / Rat(2), Rat(2),
                                         Rat(5) / Rat(2)};
        for (std::size_t i = 0; i + 1 < ladder.size(); ++i) {
            check(r,
                  is_subset(rational_power(np, ladder[i + 1]), rational_power(np, ladder[i])),
                  [&] {
                      return "rational power antitone at " + format_rational(ladder[i + 1]) +
                             ": " + txt(ideal);
                  });
        }

        // Snapping alpha to the stabilization grid is invisible.
        const Int e = stabilization_denominator(np);
        const unsigned long mu = ideal.num_generators();
        for (int trial = 0; trial < 50; ++trial) {
            const unsigned long den = 1 + uniform_draw(rng, 59);
            const unsigned long num = uniform_draw(rng, mu * den);
            const Rat alpha = Rat(1) + Rat(num) / Rat(den);
            check(r, rational_power(np, alpha) == rational_power(np, grid_snap(np, alpha)), [&] {
                return "stabilization at alpha=" + format_rational(alpha) + " e=" + e.get_str() +
                       ": " + txt(ideal);
            });
        }

        // Integral closure: extensive and idempotent.
        const MonomialIdeal closed = integral_closure(ideal);
        check(r, is_subset(ideal, closed), [&] { return "closure grows: " + txt(ideal); });
        check(r, integral_closure(closed) == closed,
              [&] { return "closure idempotent: " + txt(ideal); });
    }
    return r;
}

SuiteResult verify_closure_engine(unsigned long seed) {
    SuiteResult r;
    r.name = "closure-engine";
    std::mt19937_64 rng(seed ^ 0x636c6f73ULL);
    const std::vector<MonomialIdeal> suite = random_ideal_suite(seed + 2, 10, 5, false);
    const std::vector<Rat>& svals = closure_s_values();

    for (const MonomialIdeal& ideal : suite) {
        const unsigned long mu = ideal.num_generators();
        const MonomialIdeal closed = integral_closure(ideal);

        check(r, weak_s_closure(ideal, Rat(1)).result == closed,
              [&] { return "s=1 gives integral closure: " + txt(ideal); });
        check(r, weak_s_closure(ideal, Rat(mu)).result == ideal,
              [&] { return "s=mu gives the ideal back: " + txt(ideal); });

        std::vector<MonomialIdeal> at_s;
        for (const Rat& s : svals) {
            const ClosureReport rep = weak_s_closure(ideal, s);
            check(r, is_subset(ideal, rep.result) && is_subset(rep.result, closed),
                  [&] { return "sandwich s=" + format_rational(s) + ": " + txt(ideal); });
            for (const ExponentVector& g : rep.new_generators)
                check(r, !ideal.contains(g) && rep.result.contains(g),
                      [&] { return "new generators are new: " + txt(ideal); });
            at_s.push_back(rep.result);
        }
        for (std::size_t i = 0; i + 1 < svals.size(); ++i)
            check(r, is_subset(at_s[i + 1], at_s[i]), [&] {
                return "closure antitone at s=" + format_rational(svals[i + 1]) + ": " + txt(ideal);
            });

        // Growing the ideal grows the closure.
        {
            MonomialIdeal bigger = ideal_sum(
                ideal, MonomialIdeal::from_generators(
                           ideal.nvars(), {random_nonzero_vector(rng, ideal.nvars(), 5)}));
            const Rat s = Rat(3) / Rat(2);
            check(r,
                  is_subset(weak_s_closure(ideal, s).result, weak_s_closure(bigger, s).result),
                  [&] { return "closure monotone in the ideal: " + txt(ideal); });
        }

        // A t-closure is already s-closed for any larger s.
        for (std::size_t a = 0; a < svals.size(); ++a) {
            if (svals[a] > Rat(mu)) continue;
            for (std::size_t b = a + 1; b < svals.size(); ++b) {
                if (svals[b] > Rat(mu)) continue;
                const MonomialIdeal t_closed = weak_s_closure(ideal, svals[a]).result;
                check(r, weak_s_closure(t_closed, svals[b]).result == t_closed, [&] {
                    return "left closure stable t=" + format_rational(svals[a]) + " s=" +
                           format_rational(svals[b]) + ": " + txt(ideal);
                });
            }
        }

        // Iteration reaches the weak closure's own fixed point immediately.
        const Rat iterate_at[] = {Rat(9) / Rat(8), Rat(3) / Rat(2)};
        for (const Rat& s : iterate_at) {
            const ClosureReport it = s_closure(ideal, s);
            check(r, it.iterations == 1 && it.result == weak_s_closure(ideal, s).result,
                  [&] { return "single-step fixed point s=" + format_rational(s) + ": " + txt(ideal); });
        }

        // Plateau structure on the stabilization grid.
        if (ideal.is_proper_nonzero()) {
            const NewtonPolyhedron np = NewtonPolyhedron::from_ideal(ideal);
            const Int e = stabilization_denominator(np);
            auto closure_at = [&](const Rat& s) {
                return ideal_sum(ideal, rational_power(np, s));
            };
            for (long off = 1; off <= 2; ++off) {
                const Int j = e + off;
                const MonomialIdeal plateau = closure_at(Rat(j) / Rat(e));
                for (int probe = 0; probe < 3; ++probe) {
                    const unsigned long num = 1 + uniform_draw(rng, 30);
                    const Rat t = Rat(Int(j - 1)) / Rat(e) + Rat(num) / (Rat(32) * Rat(e));
                    check(r, closure_at(t) == plateau, [&] {
                        return "constant between grid points at t=" + format_rational(t) + ": " +
                               txt(ideal);
                    });
                }
            }

            const std::vector<JumpingNumber> jumps = jumping_numbers(ideal, Rat(1), Rat(2));
            for (const JumpingNumber& jump : jumps) {
                check(r, closure_at(jump.s) == jump.at && jump.at != jump.after,
                      [&] { return "jump tuple consistent at " + format_rational(jump.s) + ": " +
                                   txt(ideal); });
                const Rat t = jump.s - Rat(1) / (Rat(2) * Rat(e));
                if (t >= 1) {
                    check(r, closure_at(t) == jump.at, [&] {
                        return "left stability at jump " + format_rational(jump.s) + ": " +
                               txt(ideal);
                    });
                }
            }
        }

        // Definition-level probe agrees on the closure's new generators.
        if (ideal.nvars() == 2) {
            const Rat s = Rat(5) / Rat(4);
            const ClosureReport rep = weak_s_closure(ideal, s);
            const Int c_bound = 2 * ideal.max_exponent();
            std::size_t probed = 0;
            for (const ExponentVector& g : rep.new_generators) {
                if (++probed > 2) break;
                for (const long p : {2L, 3L}) {
                    const OracleWitness wit = definition_oracle(ideal, s, g, p, 4, c_bound);
                    check(r, wit.verdict == OracleVerdict::member_evidence, [&] {
                        return "oracle confirms new generator p=" + std::to_string(p) + ": " +
                               txt(ideal);
                    });
                }
            }
        }

        // Shifted-power containments, with the minimality of the shift.
        for (std::size_t a = 0; a < svals.size(); ++a) {
            for (std::size_t b = a + 1; b < svals.size(); ++b) {
                const Rat& t = svals[a];
                const Rat& s = svals[b];
                const BSQuery qy = make_bs_query(ideal, t, s, 4);
                const Rat bound = (Rat(mu) - 1) * (s - t) / (t * (s - 1));
                check(r, Rat(qy.r) >= bound && (qy.r == 0 || Rat(qy.r) - 1 < bound),
                      [&] { return "minimal shift t=" + format_rational(t) + " s=" +
                                   format_rational(s) + ": " + txt(ideal); });
                check(r, briancon_skoda_check(qy).all_hold,
                      [&] { return "containment t=" + format_rational(t) + " s=" +
                                   format_rational(s) + ": " + txt(ideal); });
            }
        }
    }
    return r;
}

SuiteResult verify_multiplicity(unsigned long seed) {
    SuiteResult r;
    r.name = "multiplicity";
    std::mt19937_64 rng(seed ^ 0x6d756c74ULL);
    VarTable v2(2);

    // Pinned slice volumes.
    check(r, normalizer_Hs(Rat(1), 2) == Rat(1) / Rat(2), [&] { return std::string("H(1,2)"); });
    check(r, normalizer_Hs(Rat(3) / Rat(2), 2) == Rat(7) / Rat(8),
          [&] { return std::string("H(3/2,2)"); });
    for (unsigned long d = 1; d <= 3; ++d)
        check(r, normalizer_Hs(Rat(d), d) == 1 && normalizer_Hs(Rat(d + 1), d) == 1,
              [&] { return "H full cube d=" + std::to_string(d); });

    // Monte Carlo agreement.  The band is four standard errors: twelve
    // estimates run per call, and at three a fair sampler would trip one run
    // in roughly thirty on ordinary fluctuation alone.
    {
        const unsigned long samples = 100000;
        const std::vector<Rat> svals = {Rat(1), Rat(5) / Rat(4), Rat(3) / Rat(2), Rat(2)};
        for (unsigned long d = 1; d <= 3; ++d) {
            for (const Rat& s : svals) {
                const double target = mpq_get_d(normalizer_Hs(s, d).get_mpq_t());
                const double sd = s.get_d();
                unsigned long hits = 0;
                for (unsigned long i = 0; i < samples; ++i) {
                    double sum = 0;
                    for (unsigned long k = 0; k < d; ++k)
                        sum += static_cast<double>(rng() >> 11) * 0x1.0p-53;
                    if (sum <= sd) ++hits;
                }
                const double est = static_cast<double>(hits) / samples;
                const double sigma = std::sqrt(target * (1.0 - target) / samples);
                check(r, std::abs(est - target) <= 4.0 * sigma + 1e-12, [&] {
                    return "Monte Carlo H s=" + format_rational(s) + " d=" + std::to_string(d);
                });
            }
        }
    }

    // Pinned colengths.
    check(r, colength(parse_ideal("x, y", v2)) == 1, [&] { return std::string("len(x,y)"); });
    check(r, colength(parse_ideal("x^2, x*y, y^2", v2)) == 3,
          [&] { return std::string("len(x^2,xy,y^2)"); });
    check(r, colength(parse_ideal("x^3, y^3", v2)) == 9,
          [&] { return std::string("len(x^3,y^3)"); });

    // Exact closed forms for the maximal ideal.
    {
        const MonomialIdeal m = parse_ideal("x, y", v2);
        for (const auto& rec : s_multiplicity_sequence(m, Rat(1), 2, 5)) {
            check(r, rec.normalized == (Rat(rec.q) + 1) / Rat(rec.q),
                  [&] { return "triangular count q=" + rec.q.get_str(); });
        }
        for (const auto& rec : s_multiplicity_sequence(m, Rat(2), 2, 5)) {
            check(r, rec.normalized == 1,
                  [&] { return "pure Frobenius count q=" + rec.q.get_str(); });
        }
        check(r, closure_multiplicity_consistency(m, Rat(3) / Rat(2), 2, 3).trivial_pass,
              [&] { return std::string("closed ideal consistency is trivial"); });
    }

    // Randomized battery on primary ideals.
    const std::vector<MonomialIdeal> suite = random_ideal_suite(seed + 3, 6, 4, true);
    for (const MonomialIdeal& ideal : suite) {
        const MonomialIdeal bigger = ideal_sum(
            ideal, MonomialIdeal::from_generators(
                       ideal.nvars(), {random_nonzero_vector(rng, ideal.nvars(), 4)}));
        check(r, colength(ideal) >= colength(bigger),
              [&] { return "colength antitone: " + txt(ideal); });

        const Rat s = Rat(3) / Rat(2);
        for (const long qv : {2L, 4L, 8L}) {
            const Int q(qv);
            const Int len_frob = colength(frobenius_power(ideal, q, 2));
            const Int len_mixed = colength(mixed_power(ideal, MixedPowerSpec(s, 2, q)));
            const Int len_power = colength(ordinary_power(ideal, q));
            check(r, len_frob >= len_mixed && len_mixed >= len_power,
                  [&] { return "colength sandwich q=" + std::to_string(qv) + ": " + txt(ideal); });
        }

        const auto records = s_multiplicity_sequence(ideal, s, 2, 4);
        Int crude = 1;
        for (const ExponentVector& g : ideal.generators())
            if (g.total_degree() > crude) crude = g.total_degree();
        Int fact;
        mpz_fac_ui(fact.get_mpz_t(), ideal.nvars());
        Rat cap = Rat(1);
        for (std::size_t i = 0; i < ideal.nvars(); ++i) cap *= Rat(crude);
        cap *= Rat(fact);
        for (const MultiplicityRecord& rec : records)
            check(r, rec.normalized >= 0 && rec.normalized <= cap,
                  [&] { return "normalized in range: " + txt(ideal); });
    }

    // Adjoining a closure generator leaves the normalized sequence inside a
    // C/q tube.
    {
        const MonomialIdeal cube = parse_ideal("x^3, y^3", v2);
        const ConsistencyReport rep =
            closure_multiplicity_consistency(cube, Rat(9) / Rat(8), 2, 4);
        check(r, !rep.trivial_pass && rep.envelope_constant <= 32,
              [&] { return std::string("consistency envelope for the cube pair"); });
    }
    return r;
}

std::vector<SuiteResult> run_suites(const std::string& which, unsigned long seed) {
    std::vector<SuiteResult> results;
    const bool all = which == "all";
    if (all || which == "monomial-core") results.push_back(verify_monomial_core(seed));
    if (all || which == "newton-geometry") results.push_back(verify_newton_geometry(seed));
    if (all || which == "closure-engine") results.push_back(verify_closure_engine(seed));
    if (all || which == "multiplicity") results.push_back(verify_multiplicity(seed));
    if (results.empty())
        throw MathDomainError("unknown_suite", "no suite is named '" + which + "'");
    return results;
}

} // namespace sclosure
