#ifndef SCLOSURE_NEWTON_POLYHEDRON_HPP
#define SCLOSURE_NEWTON_POLYHEDRON_HPP

#include "sclosure/exponent_vector.hpp"
#include "sclosure/monomial_ideal.hpp"
#include "sclosure/numeric.hpp"

#include <cstddef>
#include <vector>

namespace sclosure {

// One supporting half-space  normal . v >= rhs  with a primitive non-negative
// integer normal.
struct Facet {
    std::vector<Int> normal;
    Int rhs;

    Int dot(const ExponentVector& v) const;
    bool operator==(const Facet& other) const { return normal == other.normal && rhs == other.rhs; }
};

// H-representation of conv(generators) + the non-negative orthant.  Membership
// is always evaluated against points v >= 0, so orthant half-spaces are
// implicit and never listed.  The facet list is irredundant over the reals:
// removing any row strictly enlarges the polyhedron.  Real irredundancy is the
// right notion here — a row another row implies on lattice points alone can
// still become binding once every bound is scaled by alpha.
class NewtonPolyhedron {
public:
    // Builds the H-representation: prunes generators to the vertex set with an
    // exact-LP test, projects the lift {x = sum lambda_i g_i + r, lambda >= 0,
    // sum lambda = 1, r >= 0} by Fourier-Motzkin, then prunes redundancy.
    // The zero ideal has no polyhedron.
    static NewtonPolyhedron from_ideal(const MonomialIdeal& ideal);

    std::size_t nvars() const noexcept { return nvars_; }
    const std::vector<Facet>& facets() const noexcept { return facets_; }
    // Componentwise maxima of the source generators (box bounds downstream).
    const std::vector<Int>& source_maxima() const noexcept { return source_maxima_; }

    // v in alpha * NP, i.e. normal . v >= alpha * rhs for every facet.
    // alpha = 0 gives the whole orthant, so every v >= 0 is a member.
    bool scaled_membership(const ExponentVector& v, const Rat& alpha) const;
    bool membership(const ExponentVector& v) const { return scaled_membership(v, Rat(1)); }

private:
    std::size_t nvars_ = 0;
    std::vector<Facet> facets_;
    std::vector<Int> source_maxima_;
};

// lcm of the facet right-hand sides (1 when there are none).  Scaling rhs
// values stays integral in steps of 1/e, which is what makes rational powers
// stabilize on the grid {j/e}.
Int stabilization_denominator(const NewtonPolyhedron& np);

// Independent route to the same predicate: exact-simplex feasibility of
// {lambda >= 0, sum lambda = 1, alpha * sum lambda_i g_i <= v}.  Used to
// cross-check the facet route; the two must never disagree.
bool lp_scaled_membership(const MonomialIdeal& ideal, const ExponentVector& v, const Rat& alpha);

} // namespace sclosure

#endif
