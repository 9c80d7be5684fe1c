#include "doctest.h"

#include "sclosure/closure.hpp"
#include "sclosure/errors.hpp"
#include "sclosure/multiplicity.hpp"

using namespace sclosure;

namespace {

template <typename Fn>
std::string domain_code(Fn&& fn) {
    try {
        fn();
    } catch (const MathDomainError& e) {
        return e.code();
    }
    return "";
}

MonomialIdeal mk(std::size_t nvars, std::vector<ExponentVector> gens) {
    return MonomialIdeal::from_generators(nvars, std::move(gens));
}

// Independent colength oracle: count non-members of the box below the pure
// powers; everything outside that box is a member.
Int colength_by_enumeration(const MonomialIdeal& i) {
    const std::size_t n = i.nvars();
    std::vector<Int> box(n);
    for (std::size_t k = 0; k < n; ++k) box[k] = *i.pure_power(k);
    Int count = 0;
    std::vector<Int> c(n, Int(0));
    for (;;) {
        if (!i.contains(ExponentVector(c))) ++count;
        std::size_t pos = n;
        bool done = false;
        while (pos > 0) {
            --pos;
            if (c[pos] + 1 < box[pos]) {
                ++c[pos];
                for (std::size_t j = pos + 1; j < n; ++j) c[j] = 0;
                break;
            }
            if (pos == 0) done = true;
        }
        if (done) break;
    }
    return count;
}

} // namespace

TEST_CASE("slice volumes at hand-computed values") {
    CHECK(normalizer_Hs(Rat(1), 2) == Rat(1, 2));
    CHECK(normalizer_Hs(Rat(3, 2), 2) == Rat(7, 8));
    CHECK(normalizer_Hs(Rat(5, 4), 2) == Rat(23, 32));
    CHECK(normalizer_Hs(Rat(9, 8), 2) == Rat(79, 128));
    CHECK(normalizer_Hs(Rat(7, 4), 2) == Rat(31, 32));
    CHECK(normalizer_Hs(Rat(1), 3) == Rat(1, 6));
    CHECK(normalizer_Hs(Rat(3, 2), 3) == Rat(1, 2));
    CHECK(normalizer_Hs(Rat(0), 2) == Rat(0));
    CHECK(normalizer_Hs(Rat(1, 2), 1) == Rat(1, 2));
    // Saturation at and beyond the dimension.
    CHECK(normalizer_Hs(Rat(2), 2) == Rat(1));
    CHECK(normalizer_Hs(Rat(7, 2), 2) == Rat(1));
    CHECK(normalizer_Hs(Rat(3), 3) == Rat(1));
}

TEST_CASE("slice volume error cases") {
    CHECK(domain_code([] { normalizer_Hs(Rat(-1, 2), 2); }) == "negative_scale");
    CHECK(domain_code([] { normalizer_Hs(Rat(1), 0); }) == "bad_dimension");
}

TEST_CASE("slice volumes are monotone and complementary") {
    // H is nondecreasing in s; the two halves around s = d/2 mirror:
    // H_s(d) + H_{d-s}(d) = 1.
    const Rat svals[] = {Rat(0), Rat(1, 4), Rat(1, 2), Rat(1), Rat(5, 4), Rat(3, 2), Rat(7, 4)};
    for (unsigned long d : {2ul, 3ul}) {
        Rat prev(-1);
        for (const Rat& s : svals) {
            Rat h = normalizer_Hs(s, d);
            CHECK(h >= prev);
            prev = h;
            if (s <= Rat(d)) CHECK(h + normalizer_Hs(Rat(d) - s, d) == Rat(1));
        }
    }
}

TEST_CASE("colength of staircase examples") {
    CHECK(colength(mk(2, {{2, 0}, {0, 3}})) == 6);
    CHECK(colength(mk(1, {{5}})) == 5);
    CHECK(colength(mk(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == 1);
    CHECK(colength(mk(3, {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}})) == 8);
    CHECK(colength(mk(2, {{2, 0}, {1, 1}, {0, 3}})) == 4);
    CHECK(colength(MonomialIdeal::unit(2)) == 0);
    CHECK(domain_code([] { colength(mk(2, {{2, 1}, {1, 2}})); }) == "not_m_primary");
    CHECK(domain_code([] { colength(MonomialIdeal::zero(2)); }) == "not_m_primary");
}

TEST_CASE("colength agrees with box enumeration") {
    const MonomialIdeal ideals[] = {
        mk(2, {{4, 0}, {2, 1}, {1, 3}, {0, 4}}),
        mk(2, {{5, 0}, {3, 2}, {0, 4}}),
        mk(3, {{2, 0, 0}, {0, 3, 0}, {0, 0, 4}, {1, 1, 1}}),
        mk(3, {{3, 0, 0}, {0, 3, 0}, {0, 0, 3}, {2, 2, 0}, {0, 2, 2}}),
    };
    for (const auto& i : ideals) CHECK(colength(i) == colength_by_enumeration(i));
}

TEST_CASE("the maximal ideal's sequence hits the exact finite-q law") {
    MonomialIdeal m = mk(2, {{1, 0}, {0, 1}});
    // s = 1: colength q(q+1)/2, normalizer 1/2: normalized = (q+1)/q.
    auto rec1 = s_multiplicity_sequence(m, Rat(1), Int(2), 4);
    REQUIRE(rec1.size() == 4);
    for (const auto& r : rec1) {
        CHECK(r.colength == r.q * (r.q + 1) / 2);
        CHECK(r.normalized == Rat(r.q + 1) / Rat(r.q));
    }
    // s = 3/2: hand-reduced counts give 8/7, 15/14, 29/28 at q = 2, 4, 8.
    auto rec32 = s_multiplicity_sequence(m, Rat(3, 2), Int(2), 3);
    REQUIRE(rec32.size() == 3);
    CHECK(rec32[0].normalized == Rat(8, 7));
    CHECK(rec32[1].normalized == Rat(15, 14));
    CHECK(rec32[2].normalized == Rat(29, 28));
    // s at or beyond the dimension: the mixed power is I^[q] padded by a
    // power too deep to matter; normalized is exactly 1.
    for (const Rat& s : {Rat(2), Rat(3)}) {
        for (const auto& r : s_multiplicity_sequence(m, s, Int(2), 4))
            CHECK(r.normalized == Rat(1));
    }
}

TEST_CASE("sequence q values follow the prime") {
    auto rec = s_multiplicity_sequence(mk(2, {{2, 0}, {0, 2}}), Rat(3, 2), Int(3), 3);
    REQUIRE(rec.size() == 3);
    CHECK(rec[0].q == 3);
    CHECK(rec[1].q == 9);
    CHECK(rec[2].q == 27);
    // Colengths grow like q^d; sanity-bound the normalized values.
    for (const auto& r : rec) {
        CHECK(r.normalized > 0);
        CHECK(r.normalized <= Rat(16));
    }
}

TEST_CASE("sequence validation") {
    MonomialIdeal i = mk(2, {{2, 0}, {0, 2}});
    CHECK(domain_code([&] { s_multiplicity_sequence(mk(2, {{2, 1}}), Rat(1), Int(2), 3); }) ==
          "not_m_primary");
    CHECK(domain_code([&] { s_multiplicity_sequence(i, Rat(1), Int(2), 1); }) == "k_max_too_small");
    CHECK(domain_code([&] { s_multiplicity_sequence(i, Rat(1, 2), Int(2), 3); }) == "s_below_one");
    CHECK(domain_code([&] { s_multiplicity_sequence(i, Rat(1), Int(6), 3); }) == "not_prime");
}

TEST_CASE("adjoining a closure generator barely moves the sequence") {
    // (x^3, y^3) at s = 9/8 gains x^2 y^2 (the rate-9/8 power needs
    // coordinate sum >= 27/8, i.e. >= 4).  The enlarged ideal's sequence must
    // track the base one within envelope/q.
    MonomialIdeal i = mk(2, {{3, 0}, {0, 3}});
    ConsistencyReport rep = closure_multiplicity_consistency(i, Rat(9, 8), Int(2), 4);
    CHECK_FALSE(rep.trivial_pass);
    CHECK(rep.adjoined == ExponentVector{2, 2});
    REQUIRE(rep.rows.size() == 4);
    for (const auto& row : rep.rows) {
        CHECK(row.scaled_gap == Rat(row.q) * (row.base_normalized - row.enlarged_normalized));
        CHECK(row.base_normalized >= row.enlarged_normalized);  // bigger ideal, smaller colength
        CHECK(row.scaled_gap <= rep.envelope_constant);
    }
    CHECK(rep.envelope_constant > 0);
    CHECK(rep.envelope_constant <= Rat(32));
}

TEST_CASE("a closure that adds nothing reports a trivial pass") {
    // At s = 2 the closure of (x^3, y^3) is itself.
    ConsistencyReport rep = closure_multiplicity_consistency(mk(2, {{3, 0}, {0, 3}}), Rat(2), Int(2), 3);
    CHECK(rep.trivial_pass);
    CHECK(rep.rows.empty());
    CHECK(rep.envelope_constant == Rat(0));
    CHECK(rep.adjoined.is_zero());
}
