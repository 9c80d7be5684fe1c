#include "doctest.h"

#include "sclosure/closure.hpp"
#include "sclosure/degree_bounds.hpp"
#include "sclosure/errors.hpp"

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

TEST_CASE("componentwise extremes of the generators") {
    DegreeBounds b = degree_bounds(mk(2, {{3, 0}, {0, 3}}));
    CHECK(b.delta_min == ExponentVector{0, 0});
    CHECK(b.delta_max == ExponentVector{3, 3});

    DegreeBounds b2 = degree_bounds(mk(2, {{2, 1}, {1, 2}}));
    CHECK(b2.delta_min == ExponentVector{1, 1});
    CHECK(b2.delta_max == ExponentVector{2, 2});

    DegreeBounds b3 = degree_bounds(mk(2, {{2, 3}}));
    CHECK(b3.delta_min == ExponentVector{2, 3});
    CHECK(b3.delta_max == ExponentVector{2, 3});

    DegreeBounds b4 = degree_bounds(mk(3, {{2, 0, 0}, {0, 3, 0}, {0, 0, 4}}));
    CHECK(b4.delta_min == ExponentVector{0, 0, 0});
    CHECK(b4.delta_max == ExponentVector{2, 3, 4});

    CHECK(domain_code([] { degree_bounds(MonomialIdeal::zero(2)); }) == "zero_ideal");
}

TEST_CASE("both halves pass on m-primary examples") {
    const MonomialIdeal ideals[] = {
        mk(2, {{3, 0}, {0, 3}}),
        mk(2, {{2, 0}, {1, 1}, {0, 3}}),
        mk(2, {{4, 0}, {1, 2}, {0, 4}}),
        mk(3, {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 1}}),
    };
    const Rat rates[] = {Rat(1), Rat(5, 4), Rat(3, 2)};
    for (const auto& i : ideals) {
        for (const Rat& s : rates) {
            DegreeBoundReport rep = degree_bound_check(i, s, true);
            CHECK(rep.lower_holds);
            CHECK(rep.lower_violations.empty());
            CHECK(rep.upper_checked);
            CHECK(rep.upper_holds);
            CHECK(rep.upper_violations.empty());
        }
    }
}

TEST_CASE("the lower half alone runs on non-primary ideals") {
    MonomialIdeal i = mk(2, {{2, 1}, {1, 2}});  // no pure powers
    DegreeBoundReport rep = degree_bound_check(i, Rat(3, 2), false);
    CHECK(rep.lower_holds);
    CHECK_FALSE(rep.upper_checked);
    CHECK(rep.upper_holds);  // untouched default
    CHECK(domain_code([&] { degree_bound_check(i, Rat(3, 2), true); }) == "not_m_primary");
}

TEST_CASE("the upper half really scans above the scaled maxima") {
    // For (x^2, y^3) at s = 3/2 the cutoff is componentwise >= (3, 9/2),
    // i.e. integer points with x >= 3 and y >= 5; all of them already lie in
    // the ideal, so the check passes and stays meaningful.
    MonomialIdeal i = mk(2, {{2, 0}, {0, 3}});
    DegreeBoundReport rep = degree_bound_check(i, Rat(3, 2), true);
    CHECK(rep.upper_checked);
    CHECK(rep.upper_holds);
    // The closure at s contains every monomial the scan accepted; spot-check
    // the corner of the scanned region.
    ClosureReport c = weak_s_closure(i, Rat(3, 2));
    CHECK(c.result.contains(ExponentVector{3, 5}));
}

TEST_CASE("new generators respect the scaled minimum") {
    // Ideal with a positive delta_min whose closure gains generators:
    // (x^4 y, x y^4) has delta_min = (1, 1); at s = 1 the integral closure
    // adds interior lattice points, all componentwise >= (1, 1).
    MonomialIdeal i = mk(2, {{4, 1}, {1, 4}});
    ClosureReport c = weak_s_closure(i, Rat(1));
    REQUIRE(!c.new_generators.empty());
    DegreeBoundReport rep = degree_bound_check(i, Rat(1), false);
    CHECK(rep.lower_holds);
    for (const auto& g : c.new_generators) {
        CHECK(g[0] >= 1);
        CHECK(g[1] >= 1);
    }
}

TEST_CASE("parameter validation") {
    MonomialIdeal i = mk(2, {{2, 0}, {0, 3}});
    CHECK(domain_code([&] { degree_bound_check(i, Rat(1, 2), false); }) == "s_below_one");
    CHECK(domain_code([] { degree_bound_check(MonomialIdeal::zero(2), Rat(1), false); }) == "zero_ideal");
}
