#include "doctest.h"

#include "sclosure/closure.hpp"
#include "sclosure/errors.hpp"
#include "sclosure/jumping_numbers.hpp"
#include "sclosure/newton_polyhedron.hpp"
#include "sclosure/rational_power.hpp"

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

std::vector<Rat> values(const std::vector<JumpingNumber>& jumps) {
    std::vector<Rat> out;
    for (const auto& j : jumps) out.push_back(j.s);
    return out;
}

} // namespace

TEST_CASE("jumping numbers of the two-cube ideal") {
    MonomialIdeal i = mk(2, {{3, 0}, {0, 3}});  // grid denominator 3
    auto jumps = jumping_numbers(i, Rat(1), Rat(3));
    CHECK(values(jumps) == std::vector<Rat>{Rat(1), Rat(4, 3)});
    // The drop at 1: integral closure down to the rate-4/3 closure.
    CHECK(jumps[0].at == mk(2, {{3, 0}, {2, 1}, {1, 2}, {0, 3}}));
    CHECK(jumps[0].after == mk(2, {{3, 0}, {2, 2}, {0, 3}}));
    // The drop at 4/3 lands on the ideal itself, where it stays.
    CHECK(jumps[1].at == mk(2, {{3, 0}, {2, 2}, {0, 3}}));
    CHECK(jumps[1].after == i);
}

TEST_CASE("jumping numbers of the four-cube ideal in a window") {
    MonomialIdeal i = mk(2, {{4, 0}, {0, 4}});
    auto jumps = jumping_numbers(i, Rat(1), Rat(2));
    CHECK(values(jumps) == std::vector<Rat>{Rat(1), Rat(5, 4), Rat(3, 2)});
}

TEST_CASE("ideals whose closure never moves have no jumps") {
    // The maximal ideal, an integrally closed staircase, and a principal
    // ideal: the closure equals the ideal at every rate.
    CHECK(jumping_numbers(mk(2, {{1, 0}, {0, 1}}), Rat(1), Rat(2)).empty());
    CHECK(jumping_numbers(mk(2, {{2, 0}, {1, 1}, {0, 3}}), Rat(1), Rat(2)).empty());
    CHECK(jumping_numbers(mk(2, {{2, 3}}), Rat(1), Rat(3)).empty());
    CHECK(jumping_numbers(MonomialIdeal::unit(2), Rat(1), Rat(2)).empty());
}

TEST_CASE("each jump records the closures on both sides") {
    MonomialIdeal i = mk(2, {{4, 0}, {1, 2}, {0, 5}});
    auto np = NewtonPolyhedron::from_ideal(i);
    Int e = stabilization_denominator(np);
    auto jumps = jumping_numbers(i, Rat(1), Rat(2));
    REQUIRE(!jumps.empty());
    Rat prev(0);
    for (const auto& j : jumps) {
        // Ascending, inside the window, on the grid.
        CHECK(j.s > prev);
        CHECK(j.s >= 1);
        CHECK(j.s < 2);
        CHECK(Rat(j.s * Rat(e)).get_den() == 1);
        prev = j.s;
        // The recorded ideals are the closures at s and just above it.
        CHECK(j.at == weak_s_closure(i, j.s).result);
        CHECK(j.after == weak_s_closure(i, j.s + Rat(1) / Rat(2 * e)).result);
        CHECK(j.at != j.after);
        CHECK(is_subset(j.after, j.at));
        // Left stability: slightly below s the closure still equals j.at.
        if (j.s > 1) CHECK(weak_s_closure(i, j.s - Rat(1) / Rat(2 * e)).result == j.at);
    }
}

TEST_CASE("window boundaries are half-open") {
    MonomialIdeal i = mk(2, {{4, 0}, {0, 4}});
    // [5/4, 3/2) keeps the jump at 5/4 and drops the one at 3/2.
    CHECK(values(jumping_numbers(i, Rat(5, 4), Rat(3, 2))) == std::vector<Rat>{Rat(5, 4)});
    // [11/8, 2): 11/8 is off the grid; the next candidate is 3/2.
    CHECK(values(jumping_numbers(i, Rat(11, 8), Rat(2))) == std::vector<Rat>{Rat(3, 2)});
}

TEST_CASE("range validation") {
    MonomialIdeal i = mk(2, {{2, 0}, {0, 2}});
    CHECK(domain_code([&] { jumping_numbers(i, Rat(1, 2), Rat(2)); }) == "lo_below_one");
    CHECK(domain_code([&] { jumping_numbers(i, Rat(2), Rat(2)); }) == "degenerate_range");
    CHECK(domain_code([&] { jumping_numbers(i, Rat(3), Rat(2)); }) == "degenerate_range");
    CHECK(domain_code([] { jumping_numbers(MonomialIdeal::zero(2), Rat(1), Rat(2)); }) == "zero_ideal");
}
