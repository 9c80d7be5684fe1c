#include "doctest.h"

#include "sclosure/errors.hpp"
#include "sclosure/mixed_power.hpp"

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

} // namespace

TEST_CASE("spec validation and ceil(s*q)") {
    MixedPowerSpec spec(Rat(3, 2), Int(2), Int(2));
    CHECK(spec.ceil_sq() == 3);
    CHECK(MixedPowerSpec(Rat(3, 2), Int(2), Int(4)).ceil_sq() == 6);
    CHECK(MixedPowerSpec(Rat(5, 4), Int(2), Int(2)).ceil_sq() == 3);   // ceil(5/2)
    CHECK(MixedPowerSpec(Rat(9, 8), Int(2), Int(16)).ceil_sq() == 18);
    CHECK(MixedPowerSpec(Rat(1), Int(3), Int(9)).ceil_sq() == 9);
    // q = p^0 = 1 is a legal prime power.
    CHECK(MixedPowerSpec(Rat(2), Int(2), Int(1)).ceil_sq() == 2);
    CHECK(domain_code([] { MixedPowerSpec(Rat(1, 2), Int(2), Int(2)); }) == "s_below_one");
    CHECK(domain_code([] { MixedPowerSpec(Rat(2), Int(4), Int(4)); }) == "not_prime");
    CHECK(domain_code([] { MixedPowerSpec(Rat(2), Int(2), Int(6)); }) == "q_not_power_of_p");
    CHECK(domain_code([] { MixedPowerSpec(Rat(2), Int(3), Int(8)); }) == "q_not_power_of_p");
}

TEST_CASE("unreduced rationals canonicalize before validation") {
    Rat s(6, 4);  // = 3/2
    MixedPowerSpec spec(s, Int(2), Int(2));
    CHECK(spec.s() == Rat(3, 2));
    CHECK(spec.ceil_sq() == 3);
}

TEST_CASE("mixed power of the two-cube ideal") {
    MonomialIdeal i = mk(2, {{3, 0}, {0, 3}});  // (x^3, y^3)
    // s = 3/2, q = 2: I^3 + I^[2].  I^3 = (x^9, x^6 y^3, x^3 y^6, y^9) and
    // I^[2] = (x^6, y^6); x^6 divides the first two generators and y^6 the
    // last two, so the sum minimalizes to (x^6, y^6).
    MonomialIdeal m = mixed_power(i, MixedPowerSpec(Rat(3, 2), Int(2), Int(2)));
    CHECK(m == mk(2, {{6, 0}, {0, 6}}));
    // q = 4: ceil(3/2 * 4) = 6, so I^6 + I^[4] = I^6 + (x^12, y^12).  The
    // generators x^{3a} y^{3b} of I^6 with a >= 4 are divisible by x^12 and
    // those with b >= 4 by y^12; with a + b = 6 only (9, 9) survives.
    MonomialIdeal m4 = mixed_power(i, MixedPowerSpec(Rat(3, 2), Int(2), Int(4)));
    CHECK(m4 == mk(2, {{12, 0}, {9, 9}, {0, 12}}));
}

TEST_CASE("s = 1 collapses to the ordinary power") {
    const std::size_t nv = 2;
    const MonomialIdeal ideals[] = {
        mk(nv, {{3, 0}, {0, 3}}),
        mk(nv, {{2, 0}, {1, 1}, {0, 3}}),
        mk(nv, {{2, 3}}),
    };
    for (const auto& i : ideals)
        for (long q : {1L, 2L, 4L, 8L})
            CHECK(mixed_power(i, MixedPowerSpec(Rat(1), Int(2), Int(q))) == ordinary_power(i, Int(q)));
}

TEST_CASE("mixed power sits between the bracket and ordinary powers") {
    MonomialIdeal i = mk(3, {{2, 0, 0}, {0, 1, 1}, {0, 0, 3}});
    for (long q : {2L, 4L}) {
        MixedPowerSpec spec(Rat(5, 4), Int(2), Int(q));
        MonomialIdeal m = mixed_power(i, spec);
        CHECK(is_subset(frobenius_power(i, Int(q), Int(2)), m));
        CHECK(is_subset(ordinary_power(i, spec.ceil_sq()), m));
        CHECK(is_subset(m, ordinary_power(i, Int(q))));  // both summands lie in I^q
    }
}
